#include "symeuclid/integer.hpp"

#include <numeric>

namespace symeuclid {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::range: return "range";
    case ErrorCode::domain: return "domain";
    case ErrorCode::coprimality: return "coprimality";
    case ErrorCode::not_applicable: return "not_applicable";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::resource_guard: return "resource_guard";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

Int gcd(Int x, Int y) noexcept { return std::gcd(x, y); }

Int parse_decimal(std::string_view text) {
    if (text.empty()) fail(ErrorCode::domain, "empty integer");
    std::size_t pos = 0;
    if (text[0] == '+') pos = 1;
    if (pos == text.size()) fail(ErrorCode::domain, "not a decimal integer: " + std::string(text));
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') fail(ErrorCode::domain, "not a decimal integer: " + std::string(text));
        if (__builtin_mul_overflow(value, Int{10}, &value) || __builtin_add_overflow(value, Int{c - '0'}, &value))
            fail(ErrorCode::overflow, "integer exceeds 64-bit range: " + std::string(text));
    }
    return value;
}

}  // namespace symeuclid
