#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fibra/grid.hpp"
#include "fibra/int128.hpp"

namespace fibra {

// Finite Fibonacci word: w(0) = first, w(1) = second,
// w(n) = w(n-1) w(n-2), so |w(n)| = F(n). Positions in this module are
// 1-based.
struct FibWord {
    int n = 0;
    char first = 'a';
    char second = 'b';
    std::string content;
};

// first == second is accepted (it yields a constant word, which the 2D
// structure checks need for coinciding seeds); both letters must come from
// {a,b,c,d}.
FibWord fib_word(int n, char first = 'a', char second = 'b', std::size_t length_budget = kDefaultCellBudget);

// Prefix of the infinite Fibonacci word over {a,b}, the fixed point of
// a -> b, b -> ba starting from a: "babbabab...".
std::string infinite_prefix(std::size_t len);

// Number of distinct length-k factors of the n-th Fibonacci word, by the
// closed piecewise formula
//     k + 1              for       1 <= k <= F(n-2)
//     F(n-2) + 2         for F(n-2)+1 <= k <= F(n-1)-1
//     F(n) + 1 - k       for  F(n-1) <= k <= F(n)
// evaluated in this order; the first branch whose range contains k wins
// (for n <= 4 the ranges overlap or collapse, and this order reproduces the
// enumerated counts).
Int128 complexity_closed(int n, Int128 k);

// Distinct length-k factors of an arbitrary word, by direct enumeration.
Int128 complexity_enum(std::string_view word, std::size_t k);

// Sum of complexity_closed(n, k) over 1 <= k <= F(n).
Int128 total_distinct_factors(int n);

// Closed-form square counts for the n-th Fibonacci word:
// distinct squares 2(F(n-2) - 1) for n >= 5, and occurrences
// (4 n F(n) - 2 (n+6) F(n-1)) / 5 - 4 F(n-2) + n + 1 for n >= 3, the
// division being exact (checked).
Int128 distinct_squares_closed(int n);
Int128 square_occurrences_closed(int n);

struct SquareOccurrence {
    std::size_t start = 0;  // 1-based
    std::size_t root_length = 0;
    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

// True when x is not u^k for any k > 1.
bool is_primitive_1d(std::string_view x);

// Every occurrence of a square x x with x primitive, grouped by root length
// then by start. The primitivity check is explicit even though Fibonacci
// words contain no fourth powers (so it never rejects anything on them);
// on arbitrary words it keeps each square counted once, at its primitive
// root.
std::vector<SquareOccurrence> enumerate_squares(std::string_view word);

// The set of distinct squares x x (x primitive) occurring in the word.
std::set<std::string> enumerate_distinct_squares(std::string_view word);

struct FactorPosition {
    std::size_t position = 0;  // 1-based start of the factor's first occurrence
    std::string factor;
    friend bool operator==(const FactorPosition&, const FactorPosition&) = default;
};

// The k+1 distinct length-k factors of the infinite word over {a,b}, each
// with the position where it first occurs: with n maximal such that
// F(n) <= k, factor j starts at j+1 for j < F(n) and at j + F(n+1) - k for
// F(n) <= j <= k. f_prefix must be a genuine prefix of the infinite word of
// length at least F(n+1) + k - 1.
std::vector<FactorPosition> distinct_factor_positions(std::size_t k, std::string_view f_prefix);

}  // namespace fibra
