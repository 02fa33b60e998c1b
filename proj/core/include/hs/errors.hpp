#pragma once

#include <stdexcept>
#include <string>

namespace hs {

// Bad parameter values (exponents out of admissible range, k = 0, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Asked for a closed form that only exists for beta in {1, 2}.
struct NoClosedFormError : DomainError {
  using DomainError::DomainError;
};

// Point lies outside the (closed) domain it was used with.
struct MembershipError : DomainError {
  using DomainError::DomainError;
};

// Evaluation at a genuine singularity (inversion center, puncture).
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integrand not integrable for the requested exponents, or panel sums
// visibly diverging.
struct IntegrabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Denominator of a quotient vanished (u identically ~0 on the grid).
struct DegenerateFunctionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN or non-finite value met while summing a functional.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative solver (shooting, optimizer) failed to converge.
struct NonconvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hs
