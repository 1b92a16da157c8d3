#include "fibra/dfao.hpp"

#include "fibra/fib_core.hpp"
#include "fibra/int128.hpp"
#include "fibra/morphism2d.hpp"

namespace fibra {

namespace {

std::size_t state_index(char state) {
    if (!is_symbol(state)) throw domain_error("FibDFAO: state must come from {a,b,c,d}");
    return static_cast<std::size_t>(state - 'a');
}

}  // namespace

PaddedRepPair padded_reps(std::uint64_t m, std::uint64_t n) {
    std::string rm = zeckendorf(m).digits;
    std::string rn = zeckendorf(n).digits;
    std::size_t width = std::max(rm.size(), rn.size());
    rm.insert(0, width - rm.size(), '0');
    rn.insert(0, width - rn.size(), '0');
    return {std::move(rm), std::move(rn)};
}

FibDFAO::FibDFAO() {
    const MorphismTable& table = MorphismTable::fibonacci_2d();
    for (char state : {'a', 'b', 'c', 'd'}) {
        const Grid& img = table.image(state);
        for (std::size_t i = 0; i < img.rows(); ++i)
            for (std::size_t j = 0; j < img.cols(); ++j) table_[state_index(state)][i][j] = img.at(i, j);
    }
}

std::size_t FibDFAO::edge_count() const {
    std::size_t count = 0;
    for (std::size_t s = 0; s < 4; ++s)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (table_[s][i][j] != '\0') ++count;
    return count;
}

char FibDFAO::transition(char state, DigitPair digits) const {
    std::size_t s = state_index(state);
    if ((digits.row != 0 && digits.row != 1) || (digits.col != 0 && digits.col != 1))
        throw domain_error("FibDFAO: digits must be 0 or 1");
    char next = table_[s][digits.row][digits.col];
    if (next == '\0')
        throw undefined_transition(std::string("FibDFAO: no edge from '") + state + "' on (" + std::to_string(digits.row) +
                                   "," + std::to_string(digits.col) + ")");
    return next;
}

char FibDFAO::symbol_at(std::uint64_t m, std::uint64_t n) const {
    PaddedRepPair reps = padded_reps(m, n);
    char state = initial_state();
    for (std::size_t i = 0; i < reps.row_digits.size(); ++i)
        state = transition(state, {reps.row_digits[i] - '0', reps.col_digits[i] - '0'});
    return state;
}

Grid FibDFAO::prefix(std::size_t rows, std::size_t cols, std::size_t cell_budget) const {
    if (rows < 1 || cols < 1) throw domain_error("FibDFAO::prefix: requires rows >= 1 and cols >= 1");
    if (Int128::from_u64(rows) * Int128::from_u64(cols) > Int128::from_u64(cell_budget))
        throw resource_error("FibDFAO::prefix: output exceeds the cell budget");
    std::string cells(rows * cols, '\0');
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) cells[r * cols + c] = symbol_at(r, c);
    return {rows, cols, std::move(cells)};
}

std::string FibDFAO::export_dot() const {
    std::string out;
    out += "digraph fib2d_dfao {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    out += "  __start [shape=point, label=\"\"];\n";
    out += std::string("  __start -> ") + initial_state() + ";\n";
    for (char state : {'d', 'c', 'b', 'a'}) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                char next = table_[state_index(state)][i][j];
                if (next == '\0') continue;
                out += std::string("  ") + state + " -> " + next + " [label=\"(" + std::to_string(i) + "," +
                       std::to_string(j) + ")\"];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace fibra
