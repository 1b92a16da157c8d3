#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fibra/int128.hpp"

namespace fibra {

// Fibonacci numbers under the convention F(0) = F(1) = 1, so
// F(2) = 2, F(3) = 3, F(4) = 5, ... Throws overflow_error once the value
// leaves the exact 128-bit range.
Int128 fib(int n);

// Canonical Zeckendorf digit string, most significant digit first, digit i
// from the right carrying weight F(i) for i = 1, 2, ... ("10" = 2,
// "101" = 4, "1000" = 5). Canonical means: no '11' substring and no leading
// '0'; zero is represented by the empty string.
struct ZeckRep {
    std::string digits;
};

ZeckRep zeckendorf(std::uint64_t m);

// Value of a digit string under the weights above. Leading-zero padding is
// accepted; a non-binary digit or an adjacent pair of ones is rejected with
// invalid_representation.
std::uint64_t zeck_value(std::string_view digits);

}  // namespace fibra
