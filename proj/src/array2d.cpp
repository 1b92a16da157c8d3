#include "fibra/array2d.hpp"

#include "fibra/fib_core.hpp"
#include "fibra/word1d.hpp"

namespace fibra {

namespace {

void validate_seeds(const Seeds& s) {
    if (!is_symbol(s.f00) || !is_symbol(s.f01) || !is_symbol(s.f10) || !is_symbol(s.f11))
        throw domain_error("fib_array: seeds must come from {a,b,c,d}");
    if (s.f00 == s.f01 && s.f01 == s.f10 && s.f10 == s.f11)
        throw domain_error("fib_array: the four seeds must not all coincide");
}

// True when w is an exact tiling of its top-left height x width block.
bool tiles(const Grid& w, std::size_t height, std::size_t width) {
    for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c)
            if (w.at(r, c) != w.at(r % height, c % width)) return false;
    return true;
}

}  // namespace

Grid fib_array(const FibArrayParams& params, std::size_t cell_budget) {
    if (params.m < 0 || params.n < 0) throw domain_error("fib_array: indices must be non-negative");
    validate_seeds(params.seeds);
    if (fib(params.m) * fib(params.n) > Int128::from_u64(cell_budget))
        throw resource_error("fib_array: F(m) * F(n) cells exceed the cell budget");

    // Rows 0 and 1 are Fibonacci words over the seed pairs; stacking them by
    // the row recurrence yields every further row band.
    const Seeds& s = params.seeds;
    std::size_t width = fib(params.n).as_u64();
    Grid row0(1, width, fib_word(params.n, s.f00, s.f01, cell_budget).content);
    if (params.m == 0) return row0;
    Grid row1(1, width, fib_word(params.n, s.f10, s.f11, cell_budget).content);
    Grid prev = std::move(row0);
    Grid cur = std::move(row1);
    for (int i = 2; i <= params.m; ++i) {
        Grid next = row_concat(cur, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Grid fib_array(int m, int n, std::size_t cell_budget) { return fib_array({m, n, Seeds{}}, cell_budget); }

bool is_horizontal_power(const Grid& w) {
    if (w.empty()) throw domain_error("is_horizontal_power: grid must be non-empty");
    for (std::size_t width = 1; width * 2 <= w.cols(); ++width)
        if (w.cols() % width == 0 && tiles(w, w.rows(), width)) return true;
    return false;
}

bool is_vertical_power(const Grid& w) {
    if (w.empty()) throw domain_error("is_vertical_power: grid must be non-empty");
    for (std::size_t height = 1; height * 2 <= w.rows(); ++height)
        if (w.rows() % height == 0 && tiles(w, height, w.cols())) return true;
    return false;
}

bool is_2d_primitive(const Grid& w) {
    if (w.empty()) throw domain_error("is_2d_primitive: grid must be non-empty");
    // Every divisor pair except the trivial one; a hit means w is a proper
    // power of its top-left block.
    for (std::size_t height = 1; height <= w.rows(); ++height) {
        if (w.rows() % height != 0) continue;
        for (std::size_t width = 1; width <= w.cols(); ++width) {
            if (w.cols() % width != 0) continue;
            if (height == w.rows() && width == w.cols()) continue;
            if (tiles(w, height, width)) return false;
        }
    }
    return true;
}

Grid primitive_root_2d(const Grid& w) {
    if (w.empty()) throw domain_error("primitive_root_2d: grid must be non-empty");
    std::size_t height = 1;
    while (!(w.rows() % height == 0 && tiles(w, height, w.cols()))) ++height;
    std::size_t width = 1;
    while (!(w.cols() % width == 0 && tiles(w, w.rows(), width))) ++width;
    // Both are divisor periods of the whole grid, so the combined block
    // tiles it and inherits minimality on both axes.
    return w.subgrid(1, 1, height, width);
}

StructureReport check_row_column_structure(const Grid& g, int m, int n, const Seeds& seeds) {
    if (m < 0 || n < 0) throw domain_error("check_row_column_structure: indices must be non-negative");
    validate_seeds(seeds);
    const Seeds& s = seeds;
    bool distinct = s.f00 != s.f01 && s.f00 != s.f10 && s.f00 != s.f11 && s.f01 != s.f10 && s.f01 != s.f11 && s.f10 != s.f11;
    if (!distinct) throw domain_error("check_row_column_structure: requires four pairwise distinct seeds");
    if (Int128::from_u64(g.rows()) != fib(m) || Int128::from_u64(g.cols()) != fib(n))
        throw domain_error("check_row_column_structure: grid is not F(m) x F(n)");

    std::string top_row = fib_word(n, s.f10, s.f11).content;    // rows containing f11/f10
    std::string low_row = fib_word(n, s.f00, s.f01).content;    // rows containing f01/f00
    std::string odd_col = fib_word(m, s.f01, s.f11).content;    // columns containing f11/f01
    std::string even_col = fib_word(m, s.f00, s.f10).content;   // columns containing f10/f00

    StructureReport report;
    report.row_alphabets.reserve(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::string_view row = g.row_view(r);
        if (row == top_row)
            report.row_alphabets.push_back({s.f11, s.f10});
        else if (row == low_row)
            report.row_alphabets.push_back({s.f01, s.f00});
        else
            throw structural_violation("row " + std::to_string(r + 1) + " is not a Fibonacci word over either row alphabet");
    }
    report.col_alphabets.reserve(g.cols());
    for (std::size_t c = 0; c < g.cols(); ++c) {
        std::string col = g.column(c);
        if (col == odd_col)
            report.col_alphabets.push_back({s.f11, s.f01});
        else if (col == even_col)
            report.col_alphabets.push_back({s.f10, s.f00});
        else
            throw structural_violation("column " + std::to_string(c + 1) + " is not a Fibonacci word over either column alphabet");
    }
    return report;
}

}  // namespace fibra
