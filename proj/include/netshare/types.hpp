#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace netshare {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Centralized tolerances. Physics-level checks (hermiticity, positivity,
// dichotomy, imaginary residuals) run at kPhysTol; exact algebraic
// identities at kAlgebraTol. Boundary comparisons against inequality
// bounds use kAlgebraTol as well, so a value landing exactly on the bound
// does not flip to "violated" through rounding alone.
inline constexpr double kPhysTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kZeroProbabilityTol = 1e-14;
inline constexpr double kDegenerateTol = 1e-8;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianObservable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonDichotomicObservable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ImaginaryResidualExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LambdaOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroProbabilityBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInputCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnitalComponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateDirection : std::domain_error {
  using std::domain_error::domain_error;
};

struct ResourceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySchedule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ScheduleTooShort : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct BoundDomainExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidScenario : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace netshare
