#pragma once

#include <stdexcept>
#include <string>

namespace pjacobi {

/// Raised when caller-supplied data violates a precondition.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numerical procedure fails an internal consistency check
/// (missing brackets, non-convergence, residual above its bound).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pjacobi
