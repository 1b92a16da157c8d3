#include "fibra/int128.hpp"

#include <limits>
#include <ostream>

namespace fibra {

Int128 Int128::exact_div(Int128 num, long long den) {
    if (den == 0) throw domain_error("exact_div: zero divisor");
    if (num.v_ % den != 0) throw domain_error("exact_div: division leaves a remainder");
    Int128 r;
    r.v_ = num.v_ / den;
    return r;
}

bool Int128::fits_i64() const {
    return v_ >= std::numeric_limits<long long>::min() && v_ <= std::numeric_limits<long long>::max();
}

long long Int128::as_i64() const {
    if (!fits_i64()) throw overflow_error("Int128: value does not fit in 64 bits");
    return static_cast<long long>(v_);
}

bool Int128::fits_u64() const {
    return v_ >= 0 && v_ <= static_cast<__int128>(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t Int128::as_u64() const {
    if (!fits_u64()) throw overflow_error("Int128: value does not fit in unsigned 64 bits");
    return static_cast<std::uint64_t>(v_);
}

std::string Int128::str() const {
    if (v_ == 0) return "0";
    bool negative = v_ < 0;
    // Two's-complement negate via the unsigned type so the minimum value is safe.
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(~v_) + 1 : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

std::ostream& operator<<(std::ostream& os, const Int128& v) { return os << v.str(); }

}  // namespace fibra
