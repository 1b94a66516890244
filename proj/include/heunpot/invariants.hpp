#pragma once

// Normal-form invariants. For u'' + f(z) u' + g(z) u = 0 the invariant is
// I(z) = g - f'/2 - f^2/4; equations with equal invariants are equivalent.

#include <functional>
#include <span>
#include <vector>

#include "heunpot/heun_core.hpp"

namespace heunpot {

/// Coefficients f, f' and g of a second-order linear ODE, together with the
/// points where the caller declares f or g singular.
struct CoeffFunctions {
  std::function<cplx(cplx)> f;
  std::function<cplx(cplx)> f_z;
  std::function<cplx(cplx)> g;
  std::vector<cplx> singularities;
};

inline constexpr double kInvariantCollar = 1e-8;

cplx normal_form_invariant(const CoeffFunctions& cf, cplx z);

/// Largest |f_z - (f(z+h) - f(z-h)) / 2h| over the probe points.
double coeff_consistency(const CoeffFunctions& cf, std::span<const cplx> probes, double h = 1e-5);

/// f, f' and g of the Heun equation.
CoeffFunctions heun_coeff_functions(const HeunParams& p);

/// Numerator of the Heun invariant written as
/// (A z^4 + B z^3 + C z^2 + D z + F) / (z^2 (z-1)^2 (z-a)^2).
struct InvariantCoeffs {
  cplx A, B, C, D, F;

  cplx numerator(cplx z) const noexcept { return (((A * z + B) * z + C) * z + D) * z + F; }
};

InvariantCoeffs invariant_coeffs(const HeunParams& p);

/// Heun invariant from its defining sum of pole terms.
cplx heun_invariant(const HeunParams& p, cplx z);

/// Heun invariant from the quartic numerator.
cplx heun_invariant_quartic(const HeunParams& p, cplx z);

/// Similarity factor phi = rho^(-1/2) z^(gamma/2) (z-1)^(delta/2) (z-a)^(epsilon/2).
///
/// All powers use the principal branch with the cut along the negative real
/// axis. A negative-zero imaginary part is treated as +0, so points on the
/// cut take the value from the upper half plane.
cplx phi_factor(const HeunParams& p, cplx rho_at_z, cplx z);

}  // namespace heunpot
