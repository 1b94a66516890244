#pragma once

// Independent numerical oracles: adaptive Runge-Kutta integration of
// y'' + p(t) y' + q(t) y = 0 and the residual of a claimed Schrodinger solution.

#include <functional>
#include <span>
#include <vector>

#include "heunpot/heun_core.hpp"

namespace heunpot {

struct IntegrationResult {
  std::vector<double> ts;
  std::vector<cplx> values;
  std::vector<cplx> derivs;
  double est_error = 0.0;  // sum of the accepted local error estimates
};

using RealCoeff = std::function<cplx(double)>;

inline constexpr std::size_t kMaxIntegratorSteps = 1'000'000;

/// Dormand-Prince 5(4) with error-per-unit-step control, so the accumulated
/// local error estimate stays below tol (down to a round-off floor per step).
IntegrationResult integrate_linear_ode2(const RealCoeff& coeff_p, const RealCoeff& coeff_q, double t0, cplx y0,
                                        cplx yp0, double t1, double tol);

/// The same Runge-Kutta pair on a uniform grid of `steps` steps.
IntegrationResult integrate_linear_ode2_fixed(const RealCoeff& coeff_p, const RealCoeff& coeff_q, double t0, cplx y0,
                                              cplx yp0, double t1, std::size_t steps);

/// Hl(z) and Hl'(z) by integrating the Heun equation along the ray from the
/// origin to z, starting at |t| = start with u = 1 + q/(a gamma) t and
/// u' = q/(a gamma). Requires Re(gamma) > 0 for the start to be accurate.
HeunValue heun_ode_oracle(const HeunParams& p, cplx z, double tol = 1e-12, double start = 1e-8);

struct ResidualReport {
  double max_rel_residual = 0.0;
  std::vector<double> per_point;
};

/// max over the grid of |psi'' + I_S psi| / (|psi''| + |I_S psi| + 1e-30), with
/// psi'' from Richardson-refined central differences at h = max(1e-4, spacing/4).
ResidualReport schrodinger_residual(const std::function<cplx(double)>& psi, const std::function<cplx(double)>& is_fun,
                                    std::span<const double> grid);

}  // namespace heunpot
