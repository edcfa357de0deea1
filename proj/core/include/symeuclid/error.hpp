#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symeuclid {

enum class ErrorCode {
    range,           // index outside the documented range
    domain,          // argument violates a precondition (a >= n, a^2 != -1 mod n, ...)
    coprimality,     // gcd(n, a) != 1
    not_applicable,  // the final-equation split cannot be applied
    not_symmetric,   // neither the standard nor the split trace is an even palindrome
    resource_guard,  // exhaustive scan requested above the sweep bound
    overflow,        // exact result does not fit the integer type
    internal,        // a proven identity failed; unreachable unless there is a bug
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace symeuclid
