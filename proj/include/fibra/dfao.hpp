#pragma once

#include <cstdint>
#include <string>

#include "fibra/grid.hpp"

namespace fibra {

// One digit from each coordinate's Zeckendorf representation, read in step.
struct DigitPair {
    int row = 0;
    int col = 0;
};

// The two canonical representations padded with leading zeros to a common
// length.
struct PaddedRepPair {
    std::string row_digits;
    std::string col_digits;
};

PaddedRepPair padded_reps(std::uint64_t m, std::uint64_t n);

// Automaton with states {a,b,c,d} and initial state d whose transition on
// (i,j) is cell (i,j) of the state's substitution image; it is defined
// exactly when (i,j) lies inside that image's shape (9 edges in total).
// Feeding the padded digit pairs of (m,n), most significant first, ends in
// the symbol of the infinite 2D Fibonacci word at 0-based cell (m,n).
class FibDFAO {
  public:
    FibDFAO();

    char initial_state() const { return 'd'; }
    std::size_t edge_count() const;

    // Throws undefined_transition when (row,col) is outside the image shape
    // of the state, domain_error on a non-state or non-binary digit.
    char transition(char state, DigitPair digits) const;

    char symbol_at(std::uint64_t m, std::uint64_t n) const;

    // The rows x cols prefix of the infinite word, cell by cell.
    Grid prefix(std::size_t rows, std::size_t cols, std::size_t cell_budget = kDefaultCellBudget) const;

    // DOT digraph listing the states, the initial-state marker, and one line
    // per defined edge of the form `s -> t [label="(i,j)"]`.
    std::string export_dot() const;

  private:
    // table_[state][row digit][col digit]; '\0' marks an undefined edge.
    char table_[4][2][2] = {};
};

}  // namespace fibra
