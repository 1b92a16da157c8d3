#include "fibra/fib_core.hpp"

#include <limits>
#include <vector>

namespace fibra {

Int128 fib(int n) {
    if (n < 0) throw domain_error("fib: index must be non-negative");
    Int128 prev = 1;  // F(0)
    Int128 cur = 1;   // F(1)
    for (int i = 2; i <= n; ++i) {
        Int128 next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

ZeckRep zeckendorf(std::uint64_t m) {
    if (m == 0) return {};
    // Weights F(1), F(2), ... up to the largest one <= m.
    std::vector<std::uint64_t> weights{1};
    std::uint64_t a = 1;  // F(1)
    std::uint64_t b = 2;  // F(2)
    while (b <= m) {
        weights.push_back(b);
        if (a > std::numeric_limits<std::uint64_t>::max() - b) break;  // next weight would exceed any uint64
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    std::string digits;
    digits.reserve(weights.size());
    std::uint64_t rest = m;
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
        if (*it <= rest) {
            digits.push_back('1');
            rest -= *it;
        } else {
            digits.push_back('0');
        }
    }
    // Greedy choice leaves rest < F(k-1) after taking F(k), so digits are
    // canonical: the remainder is exhausted and no two adjacent ones appear.
    return {digits};
}

std::uint64_t zeck_value(std::string_view digits) {
    char prev = '0';
    for (char ch : digits) {
        if (ch != '0' && ch != '1') throw invalid_representation("zeck_value: digits must be '0' or '1'");
        if (ch == '1' && prev == '1') throw invalid_representation("zeck_value: adjacent ones are not allowed");
        prev = ch;
    }
    Int128 total = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        // Position i counted from the least significant digit has weight F(i+1).
        char ch = digits[digits.size() - 1 - i];
        if (ch == '1') total += fib(static_cast<int>(i) + 1);
    }
    return total.as_u64();
}

}  // namespace fibra
