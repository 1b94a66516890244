#pragma once

// Heun equation parameters and the local Heun function Hl(a, q; alpha, beta,
// gamma, delta, epsilon; z), the solution analytic at z = 0 with Hl(0) = 1:
//
//   u'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) u'
//       + (alpha*beta*z - q) / (z (z-1) (z-a)) u = 0,
//
// with alpha + beta + 1 = gamma + delta + epsilon.

#include <cstddef>
#include <functional>
#include <vector>

#include "heunpot/error.hpp"

namespace heunpot {

inline constexpr double kFuchsianTolerance = 1e-12;
inline constexpr double kSingularPointSeparation = 1e-10;

/// The seven parameters as given by a caller, before any checking.
struct RawHeunParams {
  cplx a{2.0};
  cplx q{0.0};
  cplx alpha{0.0};
  cplx beta{0.0};
  cplx gamma{1.0};
  cplx delta{0.0};
  cplx epsilon{0.0};
};

/// Validated Heun parameters. Instances always satisfy the Fuchsian relation
/// and keep the singular point a apart from 0 and 1.
class HeunParams {
 public:
  static HeunParams validate(const RawHeunParams& raw);
  /// Solves the Fuchsian relation for epsilon, ignoring raw.epsilon.
  static HeunParams with_solved_epsilon(const RawHeunParams& raw);

  const cplx& a() const noexcept { return p_.a; }
  const cplx& q() const noexcept { return p_.q; }
  const cplx& alpha() const noexcept { return p_.alpha; }
  const cplx& beta() const noexcept { return p_.beta; }
  const cplx& gamma() const noexcept { return p_.gamma; }
  const cplx& delta() const noexcept { return p_.delta; }
  const cplx& epsilon() const noexcept { return p_.epsilon; }
  const RawHeunParams& raw() const noexcept { return p_; }

  /// alpha + beta + 1 - (gamma + delta + epsilon)
  cplx fuchsian_defect() const noexcept;

 private:
  explicit HeunParams(const RawHeunParams& p) : p_(p) {}
  RawHeunParams p_;
};

HeunParams validate_params(const RawHeunParams& raw);

/// Truncated Frobenius series about z = 0.
struct SeriesSolution {
  std::vector<cplx> coeffs;  // c_0 .. c_{n-1}, c_0 = 1
  std::size_t n_terms = 0;
  double radius = 0.0;          // radius at which trunc_estimate applies
  double trunc_estimate = 0.0;  // bound on |sum_{k >= n} c_k r^k|
};

/// Radius of the disc on which heun_local is evaluated: 0.9 * min(1, |a|).
double series_radius(const HeunParams& p) noexcept;

/// First n coefficients of Hl. The truncation estimate is reported at
/// `radius`, or at series_radius(p) when radius <= 0.
SeriesSolution heun_series_coeffs(const HeunParams& p, std::size_t n, double radius = 0.0);

struct HeunValue {
  cplx value;
  cplx derivative;
};

/// Value, first and second derivative at one point.
struct Jet {
  cplx value;
  cplx d1;
  cplx d2;
};

inline constexpr std::size_t kMaxSeriesTerms = 10000;

HeunValue heun_local(const HeunParams& p, cplx z);
Jet heun_local_jet(const HeunParams& p, cplx z);

/// Magnitudes of the Heun ODE residual and of its three individual terms.
struct HeunResidual {
  double residual = 0.0;
  double scale = 0.0;  // |u''| + |f u'| + |g u|
  double relative() const noexcept { return residual / (scale + 1e-300); }
};

/// Residual of a function handle; derivatives by central differences with
/// step 1e-5 * max(1, |z|).
HeunResidual heun_ode_residual(const HeunParams& p, const std::function<cplx(cplx)>& u, cplx z);

/// Residual of a function handle that supplies analytic derivatives.
HeunResidual heun_ode_residual_jet(const HeunParams& p, const std::function<Jet(cplx)>& u, cplx z);

}  // namespace heunpot
