#pragma once

#include <string>
#include <vector>

#include "fibra/grid.hpp"
#include "fibra/int128.hpp"

namespace fibra {

// Corner seeds w(0,0), w(0,1), w(1,0), w(1,1) of the doubly recursive
// construction. Coinciding seeds are allowed except all four at once.
struct Seeds {
    char f00 = 'a';
    char f01 = 'b';
    char f10 = 'c';
    char f11 = 'd';
};

struct FibArrayParams {
    int m = 0;
    int n = 0;
    Seeds seeds;
};

// The m,n-th Fibonacci array: seeds as above,
//   w(k, j+1) = w(k, j) | w(k, j-1)    (column concatenation)
//   w(i+1, k) = w(i, k) over w(i-1, k) (row concatenation)
// so the result is F(m) x F(n). Throws resource_error when F(m) * F(n)
// exceeds the cell budget.
Grid fib_array(const FibArrayParams& params, std::size_t cell_budget = kDefaultCellBudget);
Grid fib_array(int m, int n, std::size_t cell_budget = kDefaultCellBudget);

// w is a proper power when it is a smaller block repeated column-wise,
// row-wise, or both; 2D-primitive means no such decomposition exists.
bool is_horizontal_power(const Grid& w);  // w = u repeated >= 2 times side by side
bool is_vertical_power(const Grid& w);    // w = u repeated >= 2 times stacked
bool is_2d_primitive(const Grid& w);

// The unique primitive block x such that w is an a x b tiling of x.
Grid primitive_root_2d(const Grid& w);

// Row/column structure of fib_array(m, n): every row reads as the n-th
// Fibonacci word over {f10,f11} or over {f00,f01}, every column as the m-th
// Fibonacci word over {f01,f11} or over {f00,f10}, and same-alphabet
// rows/columns are identical. Requires pairwise distinct seeds so the
// classes are unambiguous.
struct StructureReport {
    // Alphabet strings lead with the letter the word starts with.
    std::vector<std::string> row_alphabets;  // per row: "dc" or "ba" under default seeds
    std::vector<std::string> col_alphabets;  // per column: "db" or "ca" under default seeds
};

StructureReport check_row_column_structure(const Grid& g, int m, int n, const Seeds& seeds = {});

}  // namespace fibra
