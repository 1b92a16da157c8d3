#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibra/errors.hpp"

namespace fibra {

// Working alphabet of every word and grid in this library.
inline constexpr std::string_view kAlphabet = "abcd";

inline bool is_symbol(char ch) { return ch == 'a' || ch == 'b' || ch == 'c' || ch == 'd'; }

// Default ceiling on the number of cells any single construction may
// materialize. The CLI lets FIBRA_CELL_BUDGET override it.
inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

// Rectangular 2D word over {a,b,c,d}, stored row-major. The only degenerate
// shape is the empty grid (0 x 0); (r,0) and (0,c) with a positive side are
// rejected.
class Grid {
  public:
    Grid() = default;  // the empty grid, neutral for both concatenations
    Grid(std::size_t rows, std::size_t cols, std::string cells);
    static Grid from_rows(const std::vector<std::string>& rows);
    static Grid single(char symbol);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t area() const { return rows_ * cols_; }
    bool empty() const { return rows_ == 0; }

    // 0-based cell accessor; precondition row < rows() and col < cols().
    char at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }

    std::string_view row_view(std::size_t row) const {  // 0-based
        return std::string_view(cells_).substr(row * cols_, cols_);
    }
    std::string column(std::size_t col) const;  // 0-based

    // 1-based inclusive corners, the subdomain convention used by every
    // position-reporting operation in this library.
    Grid subgrid(std::size_t top, std::size_t left, std::size_t bottom, std::size_t right) const;

    Grid transpose() const;
    std::string to_text() const;  // rows joined with '\n', no trailing newline

    friend bool operator==(const Grid&, const Grid&) = default;
    friend auto operator<=>(const Grid&, const Grid&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::string cells_;
};

// u placed left of v (operands share the row count) and u placed above v
// (operands share the column count). The empty grid is neutral on both sides.
Grid col_concat(const Grid& u, const Grid& v);
Grid row_concat(const Grid& u, const Grid& v);

}  // namespace fibra
