#pragma once

#include <stdexcept>
#include <string>

namespace wzcheck {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Residue extraction was requested for a value with negative p-adic
/// valuation; such a value has no residue modulo a power of p.
struct NegativeValuationError : Error {
  using Error::Error;
};

/// A factored-residue operation cancelled away every tracked unit digit.
/// Callers recover by re-evaluating on the exact rational path.
struct PrecisionExhaustedError : Error {
  using Error::Error;
};

/// A claim was evaluated at a point outside its stated domain.
struct DomainError : Error {
  using Error::Error;
};

/// The fast modular path and the exact rational path disagree.  This is
/// always an implementation defect, never a property of the input.
struct InternalMismatchError : Error {
  using Error::Error;
};

/// Invalid run configuration: unknown claim id, inverted range, bad flag.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace wzcheck
