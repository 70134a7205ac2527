#pragma once

#include <stdexcept>

namespace rrgexp {

// Moment constraint outside [0, a*T] (or on the open boundary when a
// root-based interior solve was requested).
struct InfeasibleMoment : std::domain_error {
  using std::domain_error::domain_error;
};

// T = 0: the moment constraint degenerates to the mass constraint.
struct DegenerateDimension : std::domain_error {
  using std::domain_error::domain_error;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedDelta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bracketing search found no sign change; signals misconfiguration.
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyOrFullSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyFeasibleSet : std::domain_error {
  using std::domain_error::domain_error;
};

struct InfeasiblePoint : std::domain_error {
  using std::domain_error::domain_error;
};

// Cell bound requested where the monotone-G guard gamma_hi < delta*alpha_lo/4
// does not hold.
struct MonotoneGuardViolated : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace rrgexp
