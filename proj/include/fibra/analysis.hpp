#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fibra/array2d.hpp"
#include "fibra/grid.hpp"
#include "fibra/int128.hpp"

namespace fibra {

// Tandem configurations of a primitive block W inside a grid:
//   Ia  = W W  side by side          Ib  = W stacked on W
//   IIa = W at top-left and bottom-right of a 2x2 block arrangement
//   IIb = W at top-right and bottom-left
// A quartic is all four quadrants equal to W.
enum class TandemType { Ia, Ib, IIa, IIb };

// What "primitive" means for the root W of a reported configuration.
// directional: W is not a proper power along the contact axis (column-wise
// for Ia, row-wise for Ib, neither axis for IIa/IIb); this is the notion the
// closed-form counts reproduce. strict_2d: W has no proper-power
// decomposition at all (for IIa/IIb the two notions coincide).
enum class PrimitivityMode { directional, strict_2d };

const char* to_string(TandemType type);
const char* to_string(PrimitivityMode mode);

struct TandemOccurrence {
    TandemType type = TandemType::Ia;
    std::size_t root_rows = 0;
    std::size_t root_cols = 0;
    std::size_t row = 0;  // 1-based top-left of the first copy of W
    std::size_t col = 0;
    friend bool operator==(const TandemOccurrence&, const TandemOccurrence&) = default;
};

struct QuarticOccurrence {
    std::size_t root_rows = 0;
    std::size_t root_cols = 0;
    std::size_t row = 0;  // 1-based top-left of the 2x2 block of W copies
    std::size_t col = 0;
    friend bool operator==(const QuarticOccurrence&, const QuarticOccurrence&) = default;
};

// Closed-form counts for the F(m) x F(n) Fibonacci array with the canonical
// distinct seeds. R and D below are the 1D square occurrence/distinct
// counts (square_occurrences_closed / distinct_squares_closed), and p the
// total 1D factor count (total_distinct_factors).
Int128 count_Ia_closed(int m, int n);        // R(n) * F(m)(F(m)+1)/2,  m >= 1, n >= 3
Int128 count_Ib_closed(int m, int n);        // R(m) * F(n)(F(n)+1)/2,  m >= 3, n >= 1
Int128 count_quartics_closed(int m, int n);  // R(m) * R(n),            m, n >= 3 (= IIa = IIb occurrence count)
Int128 distinct_Ia_closed(int m, int n);     // D(n) * p(m),            m >= 2, n >= 5
Int128 distinct_Ib_closed(int m, int n);     // D(m) * p(n),            m >= 5, n >= 2
// D(m) * D(n) for m, n >= 3; the closed D form starts at index 5, so
// indices 3 and 4 use the enumerated distinct-square counts instead.
Int128 distinct_quartics_closed(int m, int n);

// Brute-force oracles over an arbitrary grid. Occurrences are scanned over
// every root size and position; distinct variants deduplicate Ia/Ib by the
// full two-copy rectangle and IIa/IIb by the root block. For IIa/IIb the
// whole 2r x 2c window must lie inside the grid.
std::vector<TandemOccurrence> enumerate_tandems(const Grid& g, TandemType type, PrimitivityMode mode);
std::set<Grid> enumerate_distinct_tandems(const Grid& g, TandemType type, PrimitivityMode mode);
std::vector<QuarticOccurrence> enumerate_quartics(const Grid& g, PrimitivityMode mode);
std::set<Grid> enumerate_distinct_quartics(const Grid& g, PrimitivityMode mode);  // deduplicated by root

// Rectangle complexity. For the infinite word every (k+1)(l+1) pattern
// occurs; for the finite array the count is the product of the two 1D
// complexities.
Int128 complexity2d_infinite(Int128 k, Int128 l);
Int128 complexity2d_finite(int m, int n, Int128 k, Int128 l);
std::set<Grid> enumerate_factors_2d(const Grid& g, std::size_t k, std::size_t l);

// Inside every full-height Ia tandem the oracle must see exactly
// r(r+1)/2 Ia tandems sharing its column span, r being the grid height.
struct NestedTandemReport {
    std::size_t blocks_checked = 0;
    bool ok = true;
    std::string detail;
};
NestedTandemReport check_nested_Ia(const Grid& g, PrimitivityMode mode);

// One closed-vs-oracle comparison. `closed` or `oracle` may be absent when
// a caller requested only one side; `match` is false only when both sides
// are present and differ.
struct CountEntry {
    std::string check;
    std::optional<Int128> closed;
    std::optional<Int128> oracle;
    bool match = true;
    std::string note;
};

struct CountReport {
    int m = 0;
    int n = 0;
    PrimitivityMode mode = PrimitivityMode::directional;
    std::vector<CountEntry> entries;
    bool all_match() const;
};

struct SweepConfig {
    int max_m = 6;
    int max_n = 7;
    PrimitivityMode mode = PrimitivityMode::directional;
    std::size_t max_side = 34;  // largest host grid side the oracles accept
    bool include_complexity = true;
};

// Every closed-vs-oracle comparison whose domain covers (m, n), for each
// 1 <= m <= max_m, 1 <= n <= max_n. Index pairs with no applicable
// comparison produce no report.
std::vector<CountReport> verify_sweep(const SweepConfig& config);

}  // namespace fibra
