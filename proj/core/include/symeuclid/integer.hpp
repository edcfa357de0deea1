#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "symeuclid/error.hpp"

namespace symeuclid {

/// All values in the library are exact. Arithmetic that would leave the
/// 64-bit range raises ErrorCode::overflow instead of wrapping.
using Int = std::int64_t;

namespace checked {

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) fail(ErrorCode::overflow, "integer overflow in addition");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) fail(ErrorCode::overflow, "integer overflow in subtraction");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) fail(ErrorCode::overflow, "integer overflow in multiplication");
    return r;
}

/// x*y + z
inline Int mul_add(Int x, Int y, Int z) { return add(mul(x, y), z); }

inline Int narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::overflow, "value does not fit in 64 bits");
    return static_cast<Int>(v);
}

}  // namespace checked

Int gcd(Int x, Int y) noexcept;

/// Parses an unsigned decimal of any length. Values beyond the 64-bit range
/// raise ErrorCode::overflow; anything that is not a digit string raises
/// ErrorCode::domain.
Int parse_decimal(std::string_view text);

}  // namespace symeuclid
