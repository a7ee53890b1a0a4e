#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mnc {

enum class ErrorCode {
    Invalid,         // input violates a documented precondition
    Unsupported,     // outside the supported factorization/degree range
    Split,           // a modulus turned out reducible
    DivisionByZero,
    Numeric,         // floating-point oracle could not proceed
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Error invalid(const std::string& what) { return Error(ErrorCode::Invalid, what); }
inline Error unsupported(const std::string& what) { return Error(ErrorCode::Unsupported, what); }

}  // namespace mnc
