#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fibra/grid.hpp"

namespace fibra {

// Symbol-to-grid substitution table. The built-in table is the 2D Fibonacci
// substitution
//   d -> dc   c -> d   b -> dc   a -> d
//        ba        b
// whose iterates from [[d]] converge to the infinite 2D Fibonacci word.
class MorphismTable {
  public:
    static const MorphismTable& fibonacci_2d();
    const Grid& image(char symbol) const;

  private:
    MorphismTable() = default;
    std::array<Grid, 4> images_;  // indexed a, b, c, d
};

// A grid can be substituted only when, within each row, all images have one
// height, and within each column, all images have one width; the witness
// carries those common sizes.
struct ShapeConditionWitness {
    std::vector<std::size_t> band_heights;  // one per input row
    std::vector<std::size_t> band_widths;   // one per input column
};

ShapeConditionWitness validate_shape_condition(const Grid& g, const MorphismTable& table = MorphismTable::fibonacci_2d());

// Substitute every cell of g by its image and assemble the bands. Throws
// inconsistent_image (naming the offending row or column) when the shape
// condition fails, resource_error past the cell budget.
Grid apply_mu(const Grid& g, std::size_t cell_budget = kDefaultCellBudget);

// k-fold application; k = 0 returns the seed unchanged.
Grid mu_power(const Grid& seed, int k, std::size_t cell_budget = kDefaultCellBudget);

// Fibonacci arrays by iterated substitution instead of concatenation:
//   m < n: apply the substitution m-1 times to the 1 x F(n-m+1) row over (c,d)
//   m > n: apply it n-1 times to the F(m-n+1) x 1 column over (b,d)
//   m = n: apply it m-1 times to [[d]]
// Requires m, n >= 1.
Grid fib_array_via_mu(int m, int n, std::size_t cell_budget = kDefaultCellBudget);

// Top-left s x t corner of the infinite 2D word: iterate the substitution on
// [[d]] until both dimensions suffice, then crop. Requires s, t >= 1.
Grid infinite_prefix_2d(std::size_t s, std::size_t t, std::size_t cell_budget = kDefaultCellBudget);

}  // namespace fibra
