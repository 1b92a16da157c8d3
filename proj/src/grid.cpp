#include "fibra/grid.hpp"

namespace fibra {

Grid::Grid(std::size_t rows, std::size_t cols, std::string cells) : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if ((rows_ == 0) != (cols_ == 0)) throw shape_error("Grid: a grid with one zero side must be empty on both");
    if (cells_.size() != rows_ * cols_) throw shape_error("Grid: cell count does not match rows * cols");
    for (char ch : cells_) {
        if (!is_symbol(ch)) throw domain_error("Grid: cells must come from {a,b,c,d}");
    }
}

Grid Grid::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::size_t cols = rows.front().size();
    std::string cells;
    cells.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw shape_error("Grid: rows must all have the same length");
        cells += row;
    }
    return {rows.size(), cols, std::move(cells)};
}

Grid Grid::single(char symbol) { return {1, 1, std::string(1, symbol)}; }

std::string Grid::column(std::size_t col) const {
    std::string out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, col));
    return out;
}

Grid Grid::subgrid(std::size_t top, std::size_t left, std::size_t bottom, std::size_t right) const {
    if (top < 1 || left < 1 || top > bottom || left > right || bottom > rows_ || right > cols_)
        throw bounds_error("subgrid: corners must satisfy 1 <= top <= bottom <= rows and 1 <= left <= right <= cols");
    std::size_t height = bottom - top + 1;
    std::size_t width = right - left + 1;
    std::string cells;
    cells.reserve(height * width);
    for (std::size_t r = top - 1; r < bottom; ++r) cells.append(row_view(r).substr(left - 1, width));
    return {height, width, std::move(cells)};
}

Grid Grid::transpose() const {
    if (empty()) return {};
    std::string cells(cells_.size(), '\0');
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) cells[c * rows_ + r] = at(r, c);
    return {cols_, rows_, std::move(cells)};
}

std::string Grid::to_text() const {
    std::string out;
    if (empty()) return out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) out.push_back('\n');
        out.append(row_view(r));
    }
    return out;
}

Grid col_concat(const Grid& u, const Grid& v) {
    if (u.empty()) return v;
    if (v.empty()) return u;
    if (u.rows() != v.rows()) throw shape_error("col_concat: operands must have the same number of rows");
    std::string cells;
    cells.reserve(u.area() + v.area());
    for (std::size_t r = 0; r < u.rows(); ++r) {
        cells.append(u.row_view(r));
        cells.append(v.row_view(r));
    }
    return {u.rows(), u.cols() + v.cols(), std::move(cells)};
}

Grid row_concat(const Grid& u, const Grid& v) {
    if (u.empty()) return v;
    if (v.empty()) return u;
    if (u.cols() != v.cols()) throw shape_error("row_concat: operands must have the same number of columns");
    std::string cells;
    cells.reserve(u.area() + v.area());
    for (std::size_t r = 0; r < u.rows(); ++r) cells.append(u.row_view(r));
    for (std::size_t r = 0; r < v.rows(); ++r) cells.append(v.row_view(r));
    return {u.rows() + v.rows(), u.cols(), std::move(cells)};
}

}  // namespace fibra
