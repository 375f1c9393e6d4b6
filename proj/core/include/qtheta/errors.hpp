#pragma once

#include <stdexcept>
#include <string>

namespace qtheta {

/// Leading coefficient of a series is not a unit (±1) of the integers.
struct NonUnitLeading : std::domain_error {
  using std::domain_error::domain_error;
};

/// A Pochhammer symbol with a factor (1 - q^0) was requested.
struct ZeroFactor : std::domain_error {
  using std::domain_error::domain_error;
};

/// An argument lies outside the domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Index and residue of a theta component do not live on the same half-integer grid.
struct GridMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

/// A fractional q-exponent survived where the result must be an ordinary power series.
/// Signals an internal bug, not bad input.
struct LatticeError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exhaustive enumeration would exceed the configured object cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An identity check found a differing coefficient.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qtheta
