#pragma once

#include <stdexcept>
#include <string>

namespace beltwave {

/// Base class for all beltwave errors so callers can catch the whole family.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A vertical wavenumber hit (or came too close to) a Dirichlet eigenvalue:
/// sqrt(alpha^2 - |k|^2) * d within tolerance of a positive multiple of pi.
class ResonanceError : public Error {
  public:
    using Error::Error;
};

/// The fluid domain degenerated: eta(x') <= -d somewhere on the sampling grid.
class DegenerateDomainError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its stated precondition
/// (wrong regime, dependent generators, alpha = 0 where a hyperbola is required, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// An iterative solve failed to converge (amplitude too large, contraction lost).
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Malformed or incomplete run configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace beltwave
