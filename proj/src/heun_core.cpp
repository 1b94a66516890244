#include "heunpot/heun_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace heunpot {
namespace {

void check_singular_points(const cplx& a) {
  if (std::abs(a) < kSingularPointSeparation || std::abs(a - 1.0) < kSingularPointSeparation) {
    std::ostringstream os;
    os << "singular point a = " << a << " coincides with 0 or 1";
    throw Error(ErrorKind::DegenerateSingularity, os.str());
  }
}

void check_gamma(const cplx& gamma) {
  const double re = gamma.real();
  if (std::abs(gamma.imag()) < 1e-12 && re < 0.5 && std::abs(re - std::round(re)) < 1e-12) {
    std::ostringstream os;
    os << "gamma = " << gamma << " is a non-positive integer; the series about z = 0 does not exist";
    throw Error(ErrorKind::GammaNonPositiveInteger, os.str());
  }
}

// Coefficients of the recurrence
//   a (k+1)(k+gamma) c_{k+1} = [k((k-1+gamma)(1+a) + a delta + epsilon) + q] c_k
//                             - (k-1+alpha)(k-1+beta) c_{k-1}
// obtained by substituting sum c_k z^k into z(z-1)(z-a) u'' + ... = 0.
class Recurrence {
 public:
  explicit Recurrence(const HeunParams& p) : p_(p) {}

  cplx next(std::size_t k, const cplx& ck, const cplx& ckm1) const {
    const double kd = static_cast<double>(k);
    const cplx& a = p_.a();
    const cplx mid = kd * ((kd - 1.0 + p_.gamma()) * (1.0 + a) + a * p_.delta() + p_.epsilon()) + p_.q();
    const cplx low = (kd - 1.0 + p_.alpha()) * (kd - 1.0 + p_.beta());
    const cplx denom = a * (kd + 1.0) * (kd + p_.gamma());
    return (mid * ck - low * ckm1) / denom;
  }

 private:
  const HeunParams& p_;
};

}  // namespace

cplx HeunParams::fuchsian_defect() const noexcept {
  return p_.alpha + p_.beta + 1.0 - (p_.gamma + p_.delta + p_.epsilon);
}

HeunParams HeunParams::validate(const RawHeunParams& raw) {
  HeunParams p(raw);
  const cplx defect = p.fuchsian_defect();
  if (!(std::abs(defect) <= kFuchsianTolerance)) {
    std::ostringstream os;
    os << "Fuchsian relation alpha + beta + 1 = gamma + delta + epsilon violated by " << std::abs(defect);
    throw Error(ErrorKind::FuchsianViolation, os.str());
  }
  check_singular_points(raw.a);
  return p;
}

HeunParams HeunParams::with_solved_epsilon(const RawHeunParams& raw) {
  RawHeunParams fixed = raw;
  fixed.epsilon = raw.alpha + raw.beta + 1.0 - raw.gamma - raw.delta;
  return validate(fixed);
}

HeunParams validate_params(const RawHeunParams& raw) { return HeunParams::validate(raw); }

double series_radius(const HeunParams& p) noexcept {
  return 0.9 * std::min(1.0, std::abs(p.a()));
}

SeriesSolution heun_series_coeffs(const HeunParams& p, std::size_t n, double radius) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "series needs at least two terms");
  }
  check_gamma(p.gamma());
  SeriesSolution out;
  out.radius = radius > 0.0 ? radius : series_radius(p);
  out.coeffs.reserve(n);
  out.coeffs.push_back(1.0);
  const Recurrence rec(p);
  cplx prev = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cplx next = rec.next(k, out.coeffs[k], prev);
    prev = out.coeffs[k];
    out.coeffs.push_back(next);
  }
  out.n_terms = n;

  // Geometric tail bound from the last two retained terms, with the ratio
  // r / R where R = min(1, |a|) is the distance to the nearest singularity.
  // The running minimum keeps the estimate monotone in n.
  const double ratio = out.radius / std::min(1.0, std::abs(p.a()));
  if (ratio >= 1.0) {
    out.trunc_estimate = std::numeric_limits<double>::infinity();
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  double rpow = 1.0;
  std::vector<double> mags(n);
  for (std::size_t k = 0; k < n; ++k) {
    mags[k] = std::abs(out.coeffs[k]) * rpow;
    rpow *= out.radius;
  }
  for (std::size_t m = 2; m <= n; ++m) {
    const double tail = (mags[m - 1] + mags[m - 2]) * ratio / (1.0 - ratio);
    best = std::min(best, tail);
  }
  out.trunc_estimate = best;
  return out;
}

Jet heun_local_jet(const HeunParams& p, cplx z) {
  check_gamma(p.gamma());
  const double rmax = series_radius(p);
  if (!(std::abs(z) < rmax)) {
    std::ostringstream os;
    os << "|z| = " << std::abs(z) << " outside the series disc of radius " << rmax;
    throw Error(ErrorKind::OutsideConvergenceDomain, os.str());
  }
  constexpr double kTol = 1e-14;
  const Recurrence rec(p);

  Jet sum{1.0, 0.0, 0.0};
  cplx c_prev = 0.0;
  cplx c_cur = 1.0;
  // z^(k-2), z^(k-1), z^k for the current k
  cplx zkm2 = 0.0, zkm1 = 0.0, zk = 1.0;
  double last_t0 = 1.0, last_t1 = 0.0, last_t2 = 0.0;
  for (std::size_t k = 1; k < kMaxSeriesTerms; ++k) {
    const cplx c_next = rec.next(k - 1, c_cur, c_prev);
    c_prev = c_cur;
    c_cur = c_next;
    zkm2 = zkm1;
    zkm1 = zk;
    zk *= z;
    const double kd = static_cast<double>(k);
    const cplx t0 = c_cur * zk;
    const cplx t1 = kd * c_cur * zkm1;
    const cplx t2 = (k >= 2) ? kd * (kd - 1.0) * c_cur * zkm2 : cplx(0.0);
    sum.value += t0;
    sum.d1 += t1;
    sum.d2 += t2;
    const double m0 = std::abs(t0), m1 = std::abs(t1), m2 = std::abs(t2);
    if (k >= 3) {
      const double s0 = std::abs(sum.value);
      const double s1 = s0 + std::abs(sum.d1);
      const double s2 = s1 + std::abs(sum.d2);
      if (m0 + last_t0 <= kTol * s0 && m1 + last_t1 <= kTol * s1 && m2 + last_t2 <= kTol * s2) {
        return sum;
      }
    }
    if (!std::isfinite(m0) || !std::isfinite(m2)) {
      break;
    }
    last_t0 = m0;
    last_t1 = m1;
    last_t2 = m2;
  }
  std::ostringstream os;
  os << "series at z = " << z << " did not reach tolerance within " << kMaxSeriesTerms << " terms";
  throw Error(ErrorKind::SlowConvergence, os.str());
}

HeunValue heun_local(const HeunParams& p, cplx z) {
  const Jet j = heun_local_jet(p, z);
  return {j.value, j.d1};
}

namespace {

void check_residual_point(const HeunParams& p, cplx z) {
  constexpr double kCollar = 1e-6;
  if (std::abs(z) < kCollar || std::abs(z - 1.0) < kCollar || std::abs(z - p.a()) < kCollar) {
    std::ostringstream os;
    os << "z = " << z << " within " << kCollar << " of a singular point";
    throw Error(ErrorKind::TooCloseToSingularity, os.str());
  }
}

HeunResidual assemble(const HeunParams& p, cplx z, const Jet& u) {
  const cplx f = p.gamma() / z + p.delta() / (z - 1.0) + p.epsilon() / (z - p.a());
  const cplx g = (p.alpha() * p.beta() * z - p.q()) / (z * (z - 1.0) * (z - p.a()));
  const cplx t1 = f * u.d1;
  const cplx t2 = g * u.value;
  return {std::abs(u.d2 + t1 + t2), std::abs(u.d2) + std::abs(t1) + std::abs(t2)};
}

}  // namespace

HeunResidual heun_ode_residual(const HeunParams& p, const std::function<cplx(cplx)>& u, cplx z) {
  check_residual_point(p, z);
  const double h = 1e-5 * std::max(1.0, std::abs(z));
  const cplx up = u(z + h), u0 = u(z), um = u(z - h);
  const Jet jet{u0, (up - um) / (2.0 * h), (up - 2.0 * u0 + um) / (h * h)};
  return assemble(p, z, jet);
}

HeunResidual heun_ode_residual_jet(const HeunParams& p, const std::function<Jet(cplx)>& u, cplx z) {
  check_residual_point(p, z);
  return assemble(p, z, u(z));
}

}  // namespace heunpot
