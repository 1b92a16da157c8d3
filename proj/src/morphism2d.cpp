#include "fibra/morphism2d.hpp"

#include <string>

#include "fibra/fib_core.hpp"
#include "fibra/word1d.hpp"

namespace fibra {

namespace {

std::size_t symbol_index(char symbol) {
    if (!is_symbol(symbol)) throw domain_error("MorphismTable: symbol must come from {a,b,c,d}");
    return static_cast<std::size_t>(symbol - 'a');
}

}  // namespace

const MorphismTable& MorphismTable::fibonacci_2d() {
    static const MorphismTable table = [] {
        MorphismTable t;
        t.images_[symbol_index('a')] = Grid::from_rows({"d"});
        t.images_[symbol_index('b')] = Grid::from_rows({"dc"});
        t.images_[symbol_index('c')] = Grid::from_rows({"d", "b"});
        t.images_[symbol_index('d')] = Grid::from_rows({"dc", "ba"});
        return t;
    }();
    return table;
}

const Grid& MorphismTable::image(char symbol) const { return images_[symbol_index(symbol)]; }

ShapeConditionWitness validate_shape_condition(const Grid& g, const MorphismTable& table) {
    ShapeConditionWitness witness;
    if (g.empty()) return witness;
    witness.band_heights.reserve(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t height = table.image(g.at(r, 0)).rows();
        for (std::size_t c = 1; c < g.cols(); ++c) {
            if (table.image(g.at(r, c)).rows() != height)
                throw inconsistent_image("row " + std::to_string(r + 1) + " mixes image heights");
        }
        witness.band_heights.push_back(height);
    }
    witness.band_widths.reserve(g.cols());
    for (std::size_t c = 0; c < g.cols(); ++c) {
        std::size_t width = table.image(g.at(0, c)).cols();
        for (std::size_t r = 1; r < g.rows(); ++r) {
            if (table.image(g.at(r, c)).cols() != width)
                throw inconsistent_image("column " + std::to_string(c + 1) + " mixes image widths");
        }
        witness.band_widths.push_back(width);
    }
    return witness;
}

Grid apply_mu(const Grid& g, std::size_t cell_budget) {
    if (g.empty()) return {};
    const MorphismTable& table = MorphismTable::fibonacci_2d();
    ShapeConditionWitness witness = validate_shape_condition(g, table);
    std::size_t out_rows = 0;
    for (std::size_t h : witness.band_heights) out_rows += h;
    std::size_t out_cols = 0;
    for (std::size_t w : witness.band_widths) out_cols += w;
    if (Int128::from_u64(out_rows) * Int128::from_u64(out_cols) > Int128::from_u64(cell_budget))
        throw resource_error("apply_mu: output exceeds the cell budget");

    std::string cells(out_rows * out_cols, '\0');
    std::size_t row_offset = 0;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t col_offset = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            const Grid& img = table.image(g.at(r, c));
            for (std::size_t i = 0; i < img.rows(); ++i)
                for (std::size_t j = 0; j < img.cols(); ++j)
                    cells[(row_offset + i) * out_cols + (col_offset + j)] = img.at(i, j);
            col_offset += witness.band_widths[c];
        }
        row_offset += witness.band_heights[r];
    }
    return {out_rows, out_cols, std::move(cells)};
}

Grid mu_power(const Grid& seed, int k, std::size_t cell_budget) {
    if (k < 0) throw domain_error("mu_power: exponent must be non-negative");
    validate_shape_condition(seed);
    Grid g = seed;
    for (int i = 0; i < k; ++i) g = apply_mu(g, cell_budget);
    return g;
}

Grid fib_array_via_mu(int m, int n, std::size_t cell_budget) {
    if (m < 1 || n < 1) throw domain_error("fib_array_via_mu: requires m >= 1 and n >= 1");
    if (m == n) return mu_power(Grid::single('d'), m - 1, cell_budget);
    if (m < n) {
        std::string row = fib_word(n - m + 1, 'c', 'd', cell_budget).content;
        const std::size_t len = row.size();  // taken before the move; argument order is unspecified
        return mu_power(Grid(1, len, std::move(row)), m - 1, cell_budget);
    }
    std::string col = fib_word(m - n + 1, 'b', 'd', cell_budget).content;
    const std::size_t len = col.size();
    return mu_power(Grid(len, 1, std::move(col)), n - 1, cell_budget);
}

Grid infinite_prefix_2d(std::size_t s, std::size_t t, std::size_t cell_budget) {
    if (s < 1 || t < 1) throw domain_error("infinite_prefix_2d: requires s >= 1 and t >= 1");
    Grid g = Grid::single('d');
    while (g.rows() < s || g.cols() < t) g = apply_mu(g, cell_budget);
    return g.subgrid(1, 1, s, t);
}

}  // namespace fibra
