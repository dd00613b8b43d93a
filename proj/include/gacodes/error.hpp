#pragma once

#include <stdexcept>
#include <string>

namespace gacodes {

/// Bad literal or flag (CLI exit status 2).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured budget (CLI exit status 3).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (non-semisimple algebra, wrong group shape, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exactly stated algebraic identity failed to hold (CLI exit status 1).
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void verify(bool ok, const std::string& what) {
    if (!ok) throw VerificationError(what);
}

}  // namespace detail
}  // namespace gacodes
