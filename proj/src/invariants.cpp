#include "heunpot/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heunpot {
namespace {

void check_collar(const HeunParams& p, cplx z) {
  if (std::abs(z) < kInvariantCollar || std::abs(z - 1.0) < kInvariantCollar ||
      std::abs(z - p.a()) < kInvariantCollar) {
    std::ostringstream os;
    os << "z = " << z << " inside the singularity collar";
    throw Error(ErrorKind::TooCloseToSingularity, os.str());
  }
}

cplx upper_side(cplx w) { return w.imag() == 0.0 ? cplx(w.real(), 0.0) : w; }

cplx principal_pow(cplx base, cplx exponent) {
  if (exponent == cplx(0.0)) {
    return 1.0;
  }
  return std::exp(exponent * std::log(upper_side(base)));
}

}  // namespace

cplx normal_form_invariant(const CoeffFunctions& cf, cplx z) {
  for (const cplx& s : cf.singularities) {
    if (std::abs(z - s) < kInvariantCollar) {
      std::ostringstream os;
      os << "z = " << z << " at declared singularity " << s;
      throw Error(ErrorKind::DomainError, os.str());
    }
  }
  const cplx f = cf.f(z);
  const cplx result = cf.g(z) - 0.5 * cf.f_z(z) - 0.25 * f * f;
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw Error(ErrorKind::DomainError, "coefficient functions are not finite at this point");
  }
  return result;
}

double coeff_consistency(const CoeffFunctions& cf, std::span<const cplx> probes, double h) {
  double worst = 0.0;
  for (const cplx& z : probes) {
    const cplx fd = (cf.f(z + h) - cf.f(z - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(cf.f_z(z) - fd));
  }
  return worst;
}

CoeffFunctions heun_coeff_functions(const HeunParams& p) {
  CoeffFunctions cf;
  cf.f = [p](cplx z) { return p.gamma() / z + p.delta() / (z - 1.0) + p.epsilon() / (z - p.a()); };
  cf.f_z = [p](cplx z) {
    const cplx z1 = z - 1.0, za = z - p.a();
    return -p.gamma() / (z * z) - p.delta() / (z1 * z1) - p.epsilon() / (za * za);
  };
  cf.g = [p](cplx z) { return (p.alpha() * p.beta() * z - p.q()) / (z * (z - 1.0) * (z - p.a())); };
  cf.singularities = {0.0, 1.0, p.a()};
  return cf;
}

InvariantCoeffs invariant_coeffs(const HeunParams& p) {
  const cplx a = p.a(), q = p.q();
  const cplx ab = p.alpha() * p.beta();
  const cplx g = p.gamma(), d = p.delta(), e = p.epsilon();
  const cplx s = g + d + e;
  InvariantCoeffs c;
  c.A = 0.25 * (4.0 * ab - (s - 2.0) * s);
  c.B = 0.5 * (-2.0 * (a + 1.0) * ab + (s - 2.0) * (a * g + a * d + g + e) - 2.0 * q);
  c.C = 0.25 * (a * a * (-(g + d - 2.0)) * (g + d) +
                a * (4.0 * ab - 2.0 * e * (2.0 * g + d) - 4.0 * g * (g + d - 2.0)) +
                4.0 * (a + 1.0) * q - (g + e - 2.0) * (g + e));
  c.D = 0.5 * a * (g * (a * (g + d - 2.0) + g + e - 2.0) - 2.0 * q);
  c.F = -0.25 * a * a * g * (g - 2.0);
  return c;
}

cplx heun_invariant(const HeunParams& p, cplx z) {
  check_collar(p, z);
  const cplx a = p.a();
  const cplx first = (p.alpha() * p.beta() * z - p.q()) / (z * (z - 1.0) * (z - a));
  const cplx sum = p.gamma() / z + p.delta() / (z - 1.0) + p.epsilon() / (z - a);
  const cplx one_minus = 1.0 - z, a_minus = a - z;
  const cplx squares = p.gamma() / (z * z) + p.delta() / (one_minus * one_minus) + p.epsilon() / (a_minus * a_minus);
  return first - 0.25 * sum * sum + 0.5 * squares;
}

cplx heun_invariant_quartic(const HeunParams& p, cplx z) {
  check_collar(p, z);
  const InvariantCoeffs c = invariant_coeffs(p);
  const cplx den = z * (z - 1.0) * (z - p.a());
  return c.numerator(z) / (den * den);
}

cplx phi_factor(const HeunParams& p, cplx rho_at_z, cplx z) {
  if (std::abs(rho_at_z) == 0.0) {
    throw Error(ErrorKind::ZeroRho, "rho vanishes; the similarity factor is undefined");
  }
  check_collar(p, z);
  return principal_pow(rho_at_z, -0.5) * principal_pow(z, 0.5 * p.gamma()) *
         principal_pow(z - 1.0, 0.5 * p.delta()) * principal_pow(z - p.a(), 0.5 * p.epsilon());
}

}  // namespace heunpot
