#include "fibra/word1d.hpp"

#include "fibra/fib_core.hpp"

namespace fibra {

FibWord fib_word(int n, char first, char second, std::size_t length_budget) {
    if (n < 0) throw domain_error("fib_word: index must be non-negative");
    if (!is_symbol(first) || !is_symbol(second)) throw domain_error("fib_word: letters must come from {a,b,c,d}");
    if (fib(n) > Int128::from_u64(length_budget)) throw resource_error("fib_word: word length exceeds the cell budget");
    std::string prev(1, first);   // w(0)
    std::string cur(1, second);   // w(1)
    if (n == 0) return {n, first, second, std::move(prev)};
    for (int i = 2; i <= n; ++i) {
        std::string next = cur + prev;  // w(i) = w(i-1) w(i-2)
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, first, second, std::move(cur)};
}

std::string infinite_prefix(std::size_t len) {
    if (len == 0) return {};
    // Iterate a -> b, b -> ba from "a"; each iterate is a prefix of the next
    // from length 2 onward, so the first iterate at least len long works.
    std::string word = "a";
    while (word.size() < len) {
        std::string next;
        next.reserve(2 * word.size());
        for (char ch : word) {
            if (ch == 'a') {
                next.push_back('b');
            } else {
                next.push_back('b');
                next.push_back('a');
            }
        }
        word = std::move(next);
    }
    word.resize(len);
    return word;
}

Int128 complexity_closed(int n, Int128 k) {
    if (n < 2) throw domain_error("complexity_closed: requires n >= 2");
    Int128 f_n = fib(n);
    if (k < 1 || k > f_n) throw domain_error("complexity_closed: requires 1 <= k <= F(n)");
    Int128 f_n1 = fib(n - 1);
    Int128 f_n2 = fib(n - 2);
    if (k <= f_n2) return k + 1;
    if (f_n2 + 1 <= k && k <= f_n1 - 1) return f_n2 + 2;
    return f_n + 1 - k;  // remaining range is exactly F(n-1) <= k <= F(n)
}

Int128 complexity_enum(std::string_view word, std::size_t k) {
    if (k < 1 || k > word.size()) throw domain_error("complexity_enum: requires 1 <= k <= |word|");
    std::set<std::string_view> factors;
    for (std::size_t i = 0; i + k <= word.size(); ++i) factors.insert(word.substr(i, k));
    return Int128::from_u64(factors.size());
}

Int128 total_distinct_factors(int n) {
    if (n < 2) throw domain_error("total_distinct_factors: requires n >= 2");
    Int128 f_n = fib(n);
    if (f_n > Int128(1'000'000)) throw resource_error("total_distinct_factors: F(n) exceeds the summation budget");
    long long limit = f_n.as_i64();
    Int128 total = 0;
    for (long long k = 1; k <= limit; ++k) total += complexity_closed(n, k);
    return total;
}

Int128 distinct_squares_closed(int n) {
    if (n < 5) throw domain_error("distinct_squares_closed: requires n >= 5");
    return Int128(2) * (fib(n - 2) - 1);
}

Int128 square_occurrences_closed(int n) {
    if (n < 3) throw domain_error("square_occurrences_closed: requires n >= 3");
    // Assemble in exact integer arithmetic: the first two terms sum to a
    // multiple of 5, checked by exact_div.
    Int128 lead = Int128(4LL * n) * fib(n) - Int128(2LL * (n + 6)) * fib(n - 1);
    return Int128::exact_div(lead, 5) - Int128(4) * fib(n - 2) + Int128(n + 1);
}

bool is_primitive_1d(std::string_view x) {
    if (x.empty()) throw domain_error("is_primitive_1d: word must be non-empty");
    std::size_t len = x.size();
    for (std::size_t d = 1; d * 2 <= len; ++d) {
        if (len % d != 0) continue;
        bool tiles = true;
        for (std::size_t i = d; i < len && tiles; ++i) tiles = x[i] == x[i - d];
        if (tiles) return false;
    }
    return true;
}

std::vector<SquareOccurrence> enumerate_squares(std::string_view word) {
    std::vector<SquareOccurrence> out;
    for (std::size_t root = 1; 2 * root <= word.size(); ++root) {
        for (std::size_t start = 0; start + 2 * root <= word.size(); ++start) {
            if (word.substr(start, root) != word.substr(start + root, root)) continue;
            if (!is_primitive_1d(word.substr(start, root))) continue;
            out.push_back({start + 1, root});
        }
    }
    return out;
}

std::set<std::string> enumerate_distinct_squares(std::string_view word) {
    std::set<std::string> out;
    for (const auto& occ : enumerate_squares(word)) out.insert(std::string(word.substr(occ.start - 1, 2 * occ.root_length)));
    return out;
}

std::vector<FactorPosition> distinct_factor_positions(std::size_t k, std::string_view f_prefix) {
    if (k < 1) throw domain_error("distinct_factor_positions: requires k >= 1");
    // Largest n with F(n) <= k; k >= 1 gives n >= 1.
    int n = 1;
    while (fib(n + 1) <= Int128::from_u64(k)) ++n;
    std::uint64_t f_n = fib(n).as_u64();
    std::uint64_t f_n1 = fib(n + 1).as_u64();
    std::size_t needed = static_cast<std::size_t>(f_n1) + k - 1;
    if (f_prefix.size() < needed) throw insufficient_prefix("distinct_factor_positions: prefix shorter than F(n+1) + k - 1");
    if (f_prefix.substr(0, needed) != infinite_prefix(needed))
        throw domain_error("distinct_factor_positions: input is not a prefix of the infinite word over {a,b}");

    std::vector<FactorPosition> out;
    std::set<std::string_view> seen;
    out.reserve(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        std::size_t pos = j < f_n ? j + 1 : j + static_cast<std::size_t>(f_n1) - k;
        std::string_view factor = f_prefix.substr(pos - 1, k);
        if (!seen.insert(factor).second)
            throw domain_error("distinct_factor_positions: the designated factors are not pairwise distinct");
        out.push_back({pos, std::string(factor)});
    }
    return out;
}

}  // namespace fibra
