#include "fibra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibra/analysis.hpp"
#include "fibra/array2d.hpp"
#include "fibra/dfao.hpp"
#include "fibra/errors.hpp"
#include "fibra/fib_core.hpp"
#include "fibra/grid.hpp"
#include "fibra/int128.hpp"
#include "fibra/morphism2d.hpp"
#include "fibra/word1d.hpp"

namespace fibra::cli {
namespace {

using nlohmann::json;

// Command-line misuse that CLI11 cannot catch itself (bad env var, a format
// that exists but does not apply here). Mapped to exit code 2 like
// CLI::ParseError.
struct usage_error : error {
    using error::error;
};

std::size_t cell_budget_from_env() {
    const char* raw = std::getenv("FIBRA_CELL_BUDGET");
    if (raw == nullptr) return kDefaultCellBudget;
    std::string_view s(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value == 0)
        throw usage_error("FIBRA_CELL_BUDGET must be a positive integer, got \"" + std::string(s) + "\"");
    return static_cast<std::size_t>(value);
}

PrimitivityMode parse_mode(const std::string& s) {
    return s == "strict-2d" ? PrimitivityMode::strict_2d : PrimitivityMode::directional;
}

json int_json(const Int128& v) {
    if (v.fits_i64()) return json(v.as_i64());
    return json(v.str());  // decimal string once past 64 bits; JSON numbers stay exact
}

void emit_envelope(std::ostream& out, const std::string& command, json parameters,
                   const std::optional<std::string>& primitivity_mode, json payload) {
    json j;
    j["format"] = "json";
    j["metadata"]["command"] = command;
    j["metadata"]["tool"] = kToolName;
    j["metadata"]["version"] = kVersion;
    j["metadata"]["parameters"] = std::move(parameters);
    j["metadata"]["index_conventions"]["dfao_coordinates"] = "0-based";
    j["metadata"]["index_conventions"]["grid_positions"] = "1-based";
    if (primitivity_mode) j["metadata"]["primitivity_mode"] = *primitivity_mode;
    j["payload"] = std::move(payload);
    out << j.dump(2) << "\n";
}

void reject_csv(const std::string& format) {
    if (format == "csv") throw usage_error("csv output applies only to complexity tables");
}

// ---- closed-vs-oracle entry rendering (tandems, verify) ----

std::string entry_text(const CountEntry& e) {
    std::string line = e.check + ":";
    if (e.closed) line += " closed=" + e.closed->str();
    if (e.oracle) line += " oracle=" + e.oracle->str();
    if (e.closed && e.oracle) line += std::string(" match=") + (e.match ? "true" : "false");
    if (!e.note.empty()) line += " (" + e.note + ")";
    return line;
}

json entry_json(const CountEntry& e) {
    json j;
    j["check"] = e.check;
    if (e.closed) j["closed"] = int_json(*e.closed);
    if (e.oracle) j["oracle"] = int_json(*e.oracle);
    if (e.closed && e.oracle) j["match"] = e.match;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

// ---- matrix rendering (complexity tables) ----

using Matrix = std::vector<std::vector<Int128>>;

void emit_matrix_text(std::ostream& out, const Matrix& rows) {
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
}

// Header row 1..header_cols, then the (possibly ragged) count rows.
void emit_matrix_csv(std::ostream& out, std::size_t header_cols, const Matrix& rows) {
    for (std::size_t i = 1; i <= header_cols; ++i) out << (i > 1 ? "," : "") << i;
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
    }
}

json matrix_json(const Matrix& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json row = json::array();
        for (const auto& v : r) row.push_back(int_json(v));
        j.push_back(std::move(row));
    }
    return j;
}

// ---- gen1d ----

char seed_letter(const std::string& value, const char* name) {
    if (value.size() != 1)
        throw usage_error(std::string(name) + " must be a single letter from {a,b,c,d}");
    return value[0];
}

int cmd_gen1d(int n, const std::string& first, const std::string& second, const std::string& format,
              std::size_t budget, std::ostream& out) {
    reject_csv(format);
    FibWord w = fib_word(n, seed_letter(first, "--first"), seed_letter(second, "--second"), budget);
    if (format == "json") {
        json params{{"cell_budget", budget}, {"first", first}, {"n", n}, {"second", second}};
        json payload{{"length", w.content.size()}, {"n", n}, {"word", w.content}};
        emit_envelope(out, "gen1d", params, std::nullopt, payload);
    } else {
        out << w.content << "\n";
    }
    return 0;
}

// ---- gen2d ----

int cmd_gen2d(int m, int n, const std::string& method, const std::string& format, std::size_t budget,
              std::ostream& out) {
    reject_csv(format);
    Grid g;
    if (method == "recursive") {
        g = fib_array(m, n, budget);
    } else if (method == "morphism") {
        g = fib_array_via_mu(m, n, budget);
    } else {  // dfao
        if (m < 1 || n < 1)
            throw domain_error("gen2d: method dfao requires m >= 1 and n >= 1 (smaller arrays are not prefixes of the infinite word)");
        Int128 cells = fib(m) * fib(n);
        if (cells > Int128::from_u64(budget))
            throw resource_error("gen2d: " + fib(m).str() + " x " + fib(n).str() + " exceeds the cell budget of " +
                                 std::to_string(budget));
        g = FibDFAO().prefix(static_cast<std::size_t>(fib(m).as_i64()), static_cast<std::size_t>(fib(n).as_i64()),
                             budget);
    }
    if (format == "json") {
        json params{{"cell_budget", budget}, {"m", m}, {"method", method}, {"n", n}};
        json rows = json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(std::string(g.row_view(r)));
        json payload{{"height", g.rows()}, {"m", m}, {"n", n}, {"rows", rows}, {"width", g.cols()}};
        emit_envelope(out, "gen2d", params, std::nullopt, payload);
    } else {
        out << g.to_text() << "\n";
    }
    return 0;
}

// ---- tandems ----

struct TandemArgs {
    int m = 0;
    int n = 0;
    std::string type = "all";
    bool distinct = false;
    std::string source = "both";
    std::string mode = "directional";
    std::string format = "text";
};

bool closed_applies(const std::string& type, bool distinct, int m, int n) {
    if (!distinct) {
        if (type == "Ia") return m >= 1 && n >= 3;
        if (type == "Ib") return m >= 3 && n >= 1;
        return m >= 3 && n >= 3;  // quartic, IIa, IIb share one occurrence count
    }
    if (type == "Ia") return m >= 2 && n >= 5;
    if (type == "Ib") return m >= 5 && n >= 2;
    return m >= 3 && n >= 3;
}

Int128 closed_count(const std::string& type, bool distinct, int m, int n) {
    if (!distinct) {
        if (type == "Ia") return count_Ia_closed(m, n);
        if (type == "Ib") return count_Ib_closed(m, n);
        return count_quartics_closed(m, n);
    }
    if (type == "Ia") return distinct_Ia_closed(m, n);
    if (type == "Ib") return distinct_Ib_closed(m, n);
    return distinct_quartics_closed(m, n);
}

Int128 oracle_count(const Grid& g, const std::string& type, bool distinct, PrimitivityMode mode) {
    if (type == "quartic") {
        if (distinct) return Int128::from_u64(enumerate_distinct_quartics(g, mode).size());
        return Int128::from_u64(enumerate_quartics(g, mode).size());
    }
    TandemType t = type == "Ia"    ? TandemType::Ia
                   : type == "Ib"  ? TandemType::Ib
                   : type == "IIa" ? TandemType::IIa
                                   : TandemType::IIb;
    if (distinct) return Int128::from_u64(enumerate_distinct_tandems(g, t, mode).size());
    return Int128::from_u64(enumerate_tandems(g, t, mode).size());
}

int cmd_tandems(const TandemArgs& a, std::size_t budget, std::ostream& out) {
    reject_csv(a.format);
    const bool want_closed = a.source != "oracle";
    const bool want_oracle = a.source != "closed";
    const PrimitivityMode mode = parse_mode(a.mode);
    static const std::vector<std::string> kAllTypes = {"Ia", "Ib", "IIa", "IIb", "quartic"};

    std::vector<std::string> checks;
    if (a.type != "all") {
        if (want_closed && !closed_applies(a.type, a.distinct, a.m, a.n))
            throw domain_error("tandems: the closed " + std::string(a.distinct ? "distinct" : "occurrence") +
                               " count for type " + a.type + " is not defined at m=" + std::to_string(a.m) +
                               " n=" + std::to_string(a.n) + " (use --source oracle there)");
        checks.push_back(a.type);
    } else {
        for (const auto& t : kAllTypes)
            if (!want_closed || closed_applies(t, a.distinct, a.m, a.n)) checks.push_back(t);
    }

    std::optional<Grid> g;
    if (want_oracle && !checks.empty()) {
        if (fib(a.m) > Int128(34) || fib(a.n) > Int128(34))
            throw resource_error("tandems: oracle enumeration accepts host grids up to side 34 (m, n <= 8)");
        g = fib_array(a.m, a.n, budget);
    }

    std::vector<CountEntry> entries;
    bool all_match = true;
    for (const auto& t : checks) {
        CountEntry e;
        e.check = a.distinct ? t + "-distinct" : t;
        if (want_closed) e.closed = closed_count(t, a.distinct, a.m, a.n);
        if (want_oracle) e.oracle = oracle_count(*g, t, a.distinct, mode);
        e.match = !(e.closed && e.oracle) || *e.closed == *e.oracle;
        all_match = all_match && e.match;
        entries.push_back(std::move(e));
    }

    if (a.format == "json") {
        json params{{"cell_budget", budget}, {"distinct", a.distinct}, {"m", a.m},
                    {"mode", a.mode},        {"n", a.n},               {"source", a.source},
                    {"type", a.type}};
        json jentries = json::array();
        for (const auto& e : entries) jentries.push_back(entry_json(e));
        json payload{{"all_match", all_match}, {"entries", jentries}};
        emit_envelope(out, "tandems", params, a.mode, payload);
    } else {
        out << "m=" << a.m << " n=" << a.n << " mode=" << a.mode << " distinct=" << (a.distinct ? "true" : "false")
            << " source=" << a.source << "\n";
        for (const auto& e : entries) out << entry_text(e) << "\n";
    }
    return all_match ? 0 : 1;
}

// ---- complexity ----

long long checked_word_length(int n, std::size_t budget) {
    Int128 len = fib(n);
    if (len > Int128::from_u64(budget))
        throw resource_error("complexity: word length F(" + std::to_string(n) + ") = " + len.str() +
                             " exceeds the cell budget of " + std::to_string(budget));
    return len.as_i64();
}

int cmd_complexity_1d(int n, bool table, const std::string& format, std::size_t budget, std::ostream& out) {
    if (n < 2) throw domain_error("complexity 1d: n must be at least 2");
    if (format == "csv" && !table) throw usage_error("csv output needs --table");
    const long long full_len = checked_word_length(n, budget);

    if (!table) {
        std::vector<Int128> counts;
        counts.reserve(static_cast<std::size_t>(full_len));
        for (long long k = 1; k <= full_len; ++k) counts.push_back(complexity_closed(n, k));
        if (format == "json") {
            json params{{"form", "1d"}, {"n", n}, {"table", false}};
            json jcounts = json::array();
            for (const auto& v : counts) jcounts.push_back(int_json(v));
            json payload{{"counts", jcounts}, {"length", full_len}, {"n", n}};
            emit_envelope(out, "complexity 1d", params, std::nullopt, payload);
        } else {
            for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << counts[i];
            out << "\n";
        }
        return 0;
    }

    Matrix rows;
    for (int j = 2; j <= n; ++j) {
        const long long len = checked_word_length(j, budget);
        std::vector<Int128> row;
        row.reserve(static_cast<std::size_t>(len));
        for (long long k = 1; k <= len; ++k) row.push_back(complexity_closed(j, k));
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        emit_matrix_csv(out, static_cast<std::size_t>(full_len), rows);
    } else if (format == "json") {
        json params{{"form", "1d"}, {"n", n}, {"table", true}};
        json jrows = json::array();
        for (int j = 2; j <= n; ++j) {
            json row{{"counts", matrix_json({rows[static_cast<std::size_t>(j - 2)]})[0]}, {"n", j}};
            jrows.push_back(std::move(row));
        }
        json payload{{"max_n", n}, {"rows", jrows}};
        emit_envelope(out, "complexity 1d", params, std::nullopt, payload);
    } else {
        for (int j = 2; j <= n; ++j) {
            out << "n=" << j << ":";
            for (const auto& v : rows[static_cast<std::size_t>(j - 2)]) out << " " << v;
            out << "\n";
        }
    }
    return 0;
}

int cmd_complexity_2d(int m, int n, const std::string& format, std::size_t budget, std::ostream& out) {
    if (m < 2 || n < 2) throw domain_error("complexity 2d: m and n must be at least 2");
    Int128 cells = fib(m) * fib(n);
    if (cells > Int128::from_u64(budget))
        throw resource_error("complexity 2d: the F(m) x F(n) table has " + cells.str() +
                             " entries, past the cell budget of " + std::to_string(budget));
    const long long height = fib(m).as_i64();
    const long long width = fib(n).as_i64();
    std::vector<Int128> row_factor, col_factor;
    for (long long k = 1; k <= height; ++k) row_factor.push_back(complexity_closed(m, k));
    for (long long l = 1; l <= width; ++l) col_factor.push_back(complexity_closed(n, l));
    Matrix rows;
    for (const auto& rk : row_factor) {
        std::vector<Int128> row;
        row.reserve(col_factor.size());
        for (const auto& cl : col_factor) row.push_back(rk * cl);
        rows.push_back(std::move(row));
    }

    if (format == "csv") {
        emit_matrix_csv(out, static_cast<std::size_t>(width), rows);
    } else if (format == "json") {
        json params{{"form", "2d"}, {"m", m}, {"n", n}};
        json payload{{"m", m}, {"n", n}, {"rows", matrix_json(rows)}};
        emit_envelope(out, "complexity 2d", params, std::nullopt, payload);
    } else {
        emit_matrix_text(out, rows);
    }
    return 0;
}

int cmd_complexity_inf(long long k, long long l, bool table, const std::string& format, std::size_t budget,
                       std::ostream& out) {
    if (format == "csv" && !table) throw usage_error("csv output needs --table");
    if (!table) {
        Int128 count = complexity2d_infinite(k, l);
        if (format == "json") {
            json params{{"form", "inf"}, {"k", k}, {"l", l}, {"table", false}};
            json payload{{"count", int_json(count)}, {"k", k}, {"l", l}};
            emit_envelope(out, "complexity inf", params, std::nullopt, payload);
        } else {
            out << count << "\n";
        }
        return 0;
    }

    if (k < 1 || l < 1) throw domain_error("complexity inf: window sides must be at least 1");
    Int128 cells = Int128(k) * Int128(l);
    if (cells > Int128::from_u64(budget))
        throw resource_error("complexity inf: the k x l table has " + cells.str() +
                             " entries, past the cell budget of " + std::to_string(budget));
    Matrix rows;
    for (long long i = 1; i <= k; ++i) {
        std::vector<Int128> row;
        row.reserve(static_cast<std::size_t>(l));
        for (long long j = 1; j <= l; ++j) row.push_back(complexity2d_infinite(i, j));
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        emit_matrix_csv(out, static_cast<std::size_t>(l), rows);
    } else if (format == "json") {
        json params{{"form", "inf"}, {"k", k}, {"l", l}, {"table", true}};
        json payload{{"k", k}, {"l", l}, {"rows", matrix_json(rows)}};
        emit_envelope(out, "complexity inf", params, std::nullopt, payload);
    } else {
        emit_matrix_text(out, rows);
    }
    return 0;
}

// ---- dfao ----

int cmd_dfao_at(std::uint64_t m, std::uint64_t n, const std::string& format, std::ostream& out) {
    reject_csv(format);
    FibDFAO dfao;
    char symbol = dfao.symbol_at(m, n);
    if (format == "json") {
        PaddedRepPair reps = padded_reps(m, n);
        json params{{"form", "at"}, {"m", m}, {"n", n}};
        json payload{{"col_digits", reps.col_digits},
                     {"m", m},
                     {"n", n},
                     {"row_digits", reps.row_digits},
                     {"symbol", std::string(1, symbol)}};
        emit_envelope(out, "dfao at", params, std::nullopt, payload);
    } else {
        out << symbol << "\n";
    }
    return 0;
}

int cmd_dfao_export(const std::string& format, std::ostream& out) {
    reject_csv(format);
    FibDFAO dfao;
    if (format == "json") {
        json edges = json::array();
        for (char state : {'d', 'c', 'b', 'a'}) {
            for (int i = 0; i <= 1; ++i) {
                for (int j = 0; j <= 1; ++j) {
                    try {
                        char to = dfao.transition(state, {i, j});
                        edges.push_back(json{{"col_digit", j},
                                             {"from", std::string(1, state)},
                                             {"row_digit", i},
                                             {"to", std::string(1, to)}});
                    } catch (const undefined_transition&) {
                        // outside the image shape; not an edge
                    }
                }
            }
        }
        json params{{"form", "export"}};
        json payload{{"edge_count", dfao.edge_count()},
                     {"edges", edges},
                     {"initial", std::string(1, dfao.initial_state())},
                     {"states", json::array({"d", "c", "b", "a"})}};
        emit_envelope(out, "dfao export", params, std::nullopt, payload);
    } else {
        out << dfao.export_dot();
    }
    return 0;
}

// ---- verify ----

int cmd_verify(int max_m, int max_n, const std::string& mode_name, const std::string& format, std::ostream& out) {
    reject_csv(format);
    SweepConfig cfg;
    cfg.max_m = max_m;
    cfg.max_n = max_n;
    cfg.mode = parse_mode(mode_name);
    std::vector<CountReport> reports = verify_sweep(cfg);

    std::size_t checks = 0;
    std::size_t mismatches = 0;
    for (const auto& r : reports) {
        for (const auto& e : r.entries) {
            ++checks;
            if (!e.match) ++mismatches;
        }
    }

    if (format == "json") {
        json params{{"max_m", max_m}, {"max_n", max_n}, {"mode", mode_name}};
        json jreports = json::array();
        for (const auto& r : reports) {
            json jentries = json::array();
            for (const auto& e : r.entries) jentries.push_back(entry_json(e));
            jreports.push_back(json{{"entries", jentries}, {"m", r.m}, {"n", r.n}});
        }
        json payload{{"all_match", mismatches == 0}, {"checks", checks}, {"mismatches", mismatches},
                     {"reports", jreports}};
        emit_envelope(out, "verify", params, mode_name, payload);
    } else {
        out << "mode=" << mode_name << " max_m=" << max_m << " max_n=" << max_n << "\n";
        for (const auto& r : reports)
            for (const auto& e : r.entries) out << "m=" << r.m << " n=" << r.n << " " << entry_text(e) << "\n";
        out << "summary: checks=" << checks << " mismatches=" << mismatches << "\n";
    }
    return mismatches == 0 ? 0 : 1;
}

void add_format_option(CLI::App* sub, std::string& slot) {
    sub->add_option("--format", slot, "output format: text, json, or csv (csv fits complexity tables only)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_mode_option(CLI::App* sub, std::string& slot) {
    sub->add_option("--mode", slot,
                    "which roots count as primitive: not a power along the contact axis (directional) "
                    "or not a power along any axis (strict-2d)")
        ->check(CLI::IsMember({"directional", "strict-2d"}));
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const std::size_t budget = cell_budget_from_env();
    int exit_code = 0;

    CLI::App app{"Fibonacci words in one and two dimensions: generation, repeated-block counts, factor complexity.\n"
                 "Conventions: `dfao at` cells are 0-based; grid positions in reports are 1-based.",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    struct {
        int n = 0;
        std::string first = "a";
        std::string second = "b";
        std::string format = "text";
    } g1;
    auto* gen1d = app.add_subcommand("gen1d", "print the n-th Fibonacci word over {a,b}");
    gen1d->add_option("n", g1.n, "word index; the word has length F(n)")->required();
    gen1d->add_option("--first", g1.first, "letter standing in for a");
    gen1d->add_option("--second", g1.second, "letter standing in for b");
    add_format_option(gen1d, g1.format);
    gen1d->callback([&] { exit_code = cmd_gen1d(g1.n, g1.first, g1.second, g1.format, budget, out); });

    struct {
        int m = 0;
        int n = 0;
        std::string method = "recursive";
        std::string format = "text";
    } g2;
    auto* gen2d = app.add_subcommand("gen2d", "print the F(m) x F(n) Fibonacci array over {a,b,c,d}");
    gen2d->add_option("m", g2.m, "row index")->required();
    gen2d->add_option("n", g2.n, "column index")->required();
    gen2d->add_option("--method", g2.method, "construction to use (they agree wherever all are defined)")
        ->check(CLI::IsMember({"recursive", "morphism", "dfao"}));
    add_format_option(gen2d, g2.format);
    gen2d->callback([&] { exit_code = cmd_gen2d(g2.m, g2.n, g2.method, g2.format, budget, out); });

    TandemArgs ta;
    auto* tandems = app.add_subcommand(
        "tandems", "count repeated-block configurations in the (m,n) Fibonacci array, closed form vs enumeration");
    tandems->add_option("m", ta.m, "row index")->required();
    tandems->add_option("n", ta.n, "column index")->required();
    tandems->add_option("--type", ta.type, "restrict to one configuration (default: every applicable one)")
        ->check(CLI::IsMember({"Ia", "Ib", "IIa", "IIb", "quartic"}));
    tandems->add_flag("--distinct", ta.distinct, "count distinct configurations instead of occurrences");
    tandems->add_option("--source", ta.source, "which sides to compute")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    add_mode_option(tandems, ta.mode);
    add_format_option(tandems, ta.format);
    tandems->callback([&] { exit_code = cmd_tandems(ta, budget, out); });

    auto* complexity = app.add_subcommand("complexity", "factor-complexity counts");
    complexity->require_subcommand(1);

    struct {
        int n = 0;
        bool table = false;
        std::string format = "text";
    } c1;
    auto* c1d = complexity->add_subcommand("1d", "distinct length-k factors of the n-th Fibonacci word, k = 1..F(n)");
    c1d->add_option("n", c1.n, "word index, at least 2")->required();
    c1d->add_flag("--table", c1.table, "one row per word index from 2 to n");
    add_format_option(c1d, c1.format);
    c1d->callback([&] { exit_code = cmd_complexity_1d(c1.n, c1.table, c1.format, budget, out); });

    struct {
        int m = 0;
        int n = 0;
        std::string format = "text";
    } c2;
    auto* c2d = complexity->add_subcommand("2d", "distinct k x l factors of the (m,n) Fibonacci array, all k, l");
    c2d->add_option("m", c2.m, "row index, at least 2")->required();
    c2d->add_option("n", c2.n, "column index, at least 2")->required();
    add_format_option(c2d, c2.format);
    c2d->callback([&] { exit_code = cmd_complexity_2d(c2.m, c2.n, c2.format, budget, out); });

    struct {
        long long k = 0;
        long long l = 0;
        bool table = false;
        std::string format = "text";
    } ci;
    auto* cinf = complexity->add_subcommand("inf", "distinct k x l factors of the infinite 2D Fibonacci word");
    cinf->add_option("k", ci.k, "window height, at least 1")->required();
    cinf->add_option("l", ci.l, "window width, at least 1")->required();
    cinf->add_flag("--table", ci.table, "full table for window sides 1..k and 1..l");
    add_format_option(cinf, ci.format);
    cinf->callback([&] { exit_code = cmd_complexity_inf(ci.k, ci.l, ci.table, ci.format, budget, out); });

    auto* dfao = app.add_subcommand("dfao", "the Zeckendorf automaton behind the 2D word");
    dfao->require_subcommand(1);

    struct {
        std::uint64_t m = 0;
        std::uint64_t n = 0;
        std::string format = "text";
    } da;
    auto* dfao_at = dfao->add_subcommand("at", "symbol of the infinite 2D word at 0-based cell (m,n)");
    dfao_at->add_option("m", da.m, "0-based row")->required();
    dfao_at->add_option("n", da.n, "0-based column")->required();
    add_format_option(dfao_at, da.format);
    dfao_at->callback([&] { exit_code = cmd_dfao_at(da.m, da.n, da.format, out); });

    struct {
        std::string format = "text";
    } de;
    auto* dfao_export = dfao->add_subcommand("export", "automaton states and edges (text format is DOT)");
    add_format_option(dfao_export, de.format);
    dfao_export->callback([&] { exit_code = cmd_dfao_export(de.format, out); });

    struct {
        int max_m = 6;
        int max_n = 7;
        std::string mode = "directional";
        std::string format = "text";
    } va;
    auto* verify = app.add_subcommand("verify", "sweep every closed-vs-oracle comparison over a rectangle of indices");
    verify->add_option("--max-m", va.max_m, "largest row index (default 6)");
    verify->add_option("--max-n", va.max_n, "largest column index (default 7)");
    add_mode_option(verify, va.mode);
    add_format_option(verify, va.format);
    verify->callback([&] { exit_code = cmd_verify(va.max_m, va.max_n, va.mode, va.format, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const resource_error& e) {
        err << "error: resource: " << e.what() << "\n";
        return 3;
    } catch (const overflow_error& e) {
        err << "error: overflow: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: domain: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fibra::cli
