#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "fibra/errors.hpp"

namespace fibra {

// Exact signed 128-bit integer. Arithmetic throws fibra::overflow_error
// instead of wrapping.
class Int128 {
  public:
    constexpr Int128() = default;
    constexpr Int128(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
    constexpr Int128(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr Int128 from_u64(std::uint64_t v) {
        Int128 r;
        r.v_ = static_cast<__int128>(v);
        return r;
    }

    friend Int128 operator+(Int128 a, Int128 b) {
        Int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw overflow_error("Int128: addition overflow");
        return r;
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        Int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw overflow_error("Int128: subtraction overflow");
        return r;
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        Int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw overflow_error("Int128: multiplication overflow");
        return r;
    }
    Int128& operator+=(Int128 o) { return *this = *this + o; }
    Int128& operator-=(Int128 o) { return *this = *this - o; }
    Int128& operator*=(Int128 o) { return *this = *this * o; }

    // Division that must leave no remainder.
    static Int128 exact_div(Int128 num, long long den);

    friend constexpr bool operator==(const Int128&, const Int128&) = default;
    friend constexpr auto operator<=>(const Int128&, const Int128&) = default;

    bool fits_i64() const;
    long long as_i64() const;  // throws overflow_error when out of range
    bool fits_u64() const;
    std::uint64_t as_u64() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Int128& v);

  private:
    __int128 v_ = 0;
};

}  // namespace fibra
