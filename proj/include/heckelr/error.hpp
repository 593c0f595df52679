#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckelr {

using Int = std::int64_t;

/// Input violates a mathematical precondition (bad charge, non-standard symbol, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant failed. Always a bug, never a user error.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

} // namespace heckelr
