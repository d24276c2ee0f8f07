#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srp {

enum class ErrorCode {
    invalid_argument,
    domain,
    insufficient_order,
    not_converged,
    io,
    unknown_suite,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a truncated expansion cannot reach the requested accuracy.
/// `required` is the smallest order/cutoff that would.
class InsufficientOrder : public Error {
public:
    InsufficientOrder(const std::string& what, std::size_t required)
        : Error(ErrorCode::insufficient_order, what), required_(required) {}
    std::size_t required() const noexcept { return required_; }

private:
    std::size_t required_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

} // namespace srp
