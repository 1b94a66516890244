#include <doctest.h>

#include <random>

#include "heunpot/heun_core.hpp"
#include "heunpot/verify_oracle.hpp"

using namespace heunpot;

namespace {

RawHeunParams unit_params() { return RawHeunParams{2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}; }

using Poly = std::vector<cplx>;

Poly mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

Poly add(Poly x, const Poly& y) {
  if (y.size() > x.size()) x.resize(y.size(), 0.0);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
  return x;
}

Poly deriv(const Poly& x) {
  Poly out(std::max<std::size_t>(x.size(), 2) - 1, 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) out[i - 1] = static_cast<double>(i) * x[i];
  return out;
}

// Coefficient of z^k after substituting the polynomial u into
// z(z-1)(z-a) u'' + [g(z-1)(z-a) + d z(z-a) + e z(z-1)] u' + (ab z - q) u.
cplx substituted(const RawHeunParams& p, const Poly& u, std::size_t k) {
  const Poly z{0.0, 1.0}, zm1{-1.0, 1.0}, zma{-p.a, 1.0};
  const Poly lead = mul(mul(z, zm1), zma);
  const Poly mid = add(add(mul(Poly{p.gamma}, mul(zm1, zma)), mul(Poly{p.delta}, mul(z, zma))),
                       mul(Poly{p.epsilon}, mul(z, zm1)));
  const Poly last{-p.q, p.alpha * p.beta};
  const Poly r = add(add(mul(lead, deriv(deriv(u))), mul(mid, deriv(u))), mul(last, u));
  return k < r.size() ? r[k] : 0.0;
}

// Solves the z^(k-1) equation for c_k, which enters it linearly.
Poly coefficients_by_substitution(const RawHeunParams& p, std::size_t n) {
  Poly c{1.0};
  for (std::size_t k = 1; k < n; ++k) {
    Poly with0 = c, with1 = c;
    with0.push_back(0.0);
    with1.push_back(1.0);
    const cplx r0 = substituted(p, with0, k - 1);
    const cplx r1 = substituted(p, with1, k - 1);
    c.push_back(-r0 / (r1 - r0));
  }
  return c;
}

}  // namespace

TEST_CASE("validation follows the Fuchsian relation") {
  CHECK_NOTHROW(HeunParams::validate(unit_params()));
  RawHeunParams bad = unit_params();
  bad.epsilon = 2.0;
  try {
    (void)HeunParams::validate(bad);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FuchsianViolation);
  }
}

TEST_CASE("a colliding with another singular point is rejected") {
  for (cplx a : {cplx(1.0), cplx(0.0), cplx(1.0 + 1e-12)}) {
    RawHeunParams raw{a, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    try {
      (void)HeunParams::validate(raw);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateSingularity);
    }
  }
}

TEST_CASE("epsilon solved from the relation leaves no defect") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    RawHeunParams raw{cplx(u(rng) + 4.0, u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)),
                      cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), 0.0};
    const HeunParams p = HeunParams::with_solved_epsilon(raw);
    CHECK(std::abs(p.fuchsian_defect()) <= 1e-14);
  }
}

TEST_CASE("first coefficient matches the z^0 balance") {
  RawHeunParams raw{2.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
  const HeunParams p = HeunParams::with_solved_epsilon(raw);
  const SeriesSolution s = heun_series_coeffs(p, 4);
  CHECK(s.coeffs[0] == cplx(1.0));
  CHECK(std::abs(s.coeffs[1] - 0.5) <= 1e-15);
}

TEST_CASE("second coefficient matches polynomial substitution") {
  const Poly oracle = coefficients_by_substitution(unit_params(), 3);
  // Frozen from the substitution oracle.
  CHECK(std::abs(oracle[1] - 0.5) <= 1e-15);
  CHECK(std::abs(oracle[2] - 0.3125) <= 1e-15);
  const SeriesSolution s = heun_series_coeffs(HeunParams::validate(unit_params()), 3);
  CHECK(std::abs(s.coeffs[2] - 0.3125) <= 1e-15);
}

TEST_CASE("recurrence agrees with substitution on complex parameters") {
  RawHeunParams raw{cplx(3.0, 1.0), cplx(0.4, -1.2), cplx(1.5, 0.3), cplx(-0.7, 0.2), cplx(1.3, -0.4),
                    cplx(0.6, 0.9), 0.0};
  const HeunParams p = HeunParams::with_solved_epsilon(raw);
  const Poly oracle = coefficients_by_substitution(p.raw(), 12);
  const SeriesSolution s = heun_series_coeffs(p, 12);
  for (std::size_t k = 0; k < 12; ++k) {
    CHECK(std::abs(s.coeffs[k] - oracle[k]) <= 1e-13 * (1.0 + std::abs(oracle[k])));
  }
}

TEST_CASE("constant solution when q and alpha beta vanish") {
  RawHeunParams raw{2.0, 0.0, 0.0, 1.5, 1.0, 0.5, 0.0};
  const HeunParams p = HeunParams::with_solved_epsilon(raw);
  const SeriesSolution s = heun_series_coeffs(p, 20);
  for (std::size_t k = 1; k < 20; ++k) CHECK(s.coeffs[k] == cplx(0.0));
  for (cplx z : {cplx(0.1), cplx(-0.5, 0.3), cplx(0.0, 0.8)}) {
    const HeunValue v = heun_local(p, z);
    CHECK(v.value == cplx(1.0));
    CHECK(v.derivative == cplx(0.0));
  }
  const HeunResidual r = heun_ode_residual(p, [](cplx) { return cplx(1.0); }, 0.3);
  CHECK(r.residual == 0.0);
}

TEST_CASE("normalization at the origin") {
  const HeunParams p = HeunParams::validate(unit_params());
  const HeunValue v = heun_local(p, 0.0);
  CHECK(v.value == cplx(1.0));
  CHECK(v.derivative == p.q() / (p.a() * p.gamma()));
}

TEST_CASE("series against the integration oracle at z = 0.3") {
  const HeunParams p = HeunParams::validate(unit_params());
  const cplx series = heun_local(p, 0.3).value;
  const cplx oracle = heun_ode_oracle(p, 0.3).value;
  CHECK(std::abs(series - oracle) <= 1e-8 * std::abs(oracle));
}

TEST_CASE("evaluation outside the disc is refused") {
  const HeunParams p = HeunParams::validate(unit_params());
  CHECK(series_radius(p) == doctest::Approx(0.9));
  try {
    (void)heun_local(p, 0.95);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideConvergenceDomain);
  }
  RawHeunParams near{cplx(0.5), 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK(series_radius(HeunParams::with_solved_epsilon(near)) == doctest::Approx(0.45));
}

TEST_CASE("gamma at a non-positive integer has no series") {
  for (double g : {0.0, -1.0, -3.0}) {
    RawHeunParams raw{2.0, 1.0, 1.0, 1.0, g, 1.0, 0.0};
    const HeunParams p = HeunParams::with_solved_epsilon(raw);
    try {
      (void)heun_series_coeffs(p, 5);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GammaNonPositiveInteger);
    }
  }
}

TEST_CASE("truncation estimate shrinks with more terms") {
  const HeunParams p = HeunParams::validate(unit_params());
  double last = INFINITY;
  for (std::size_t n : {10, 20, 40, 80}) {
    const SeriesSolution s = heun_series_coeffs(p, n, 0.5);
    CHECK(s.trunc_estimate <= last);
    last = s.trunc_estimate;
  }
  CHECK(last < 1e-15);
  CHECK_THROWS_AS(heun_series_coeffs(p, 1), Error);
}

TEST_CASE("series solves the ODE across the disc") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RawHeunParams raw{cplx(2.5, 0.5), cplx(0.3, 0.7), cplx(1.2, -0.3), cplx(0.4, 0.2), cplx(1.4, 0.1), cplx(-0.3, 0.5),
                    0.0};
  const HeunParams p = HeunParams::with_solved_epsilon(raw);
  auto jet = [&](cplx z) { return heun_local_jet(p, z); };
  int checked = 0;
  while (checked < 100) {
    const cplx z(0.85 * u(rng), 0.85 * u(rng));
    if (std::abs(z) >= 0.85 || std::abs(z) < 1e-3) continue;
    CHECK(heun_ode_residual_jet(p, jet, z).relative() <= 1e-8);
    ++checked;
  }
}

TEST_CASE("finite-difference residual of the series and of a wrong function") {
  const HeunParams p = HeunParams::validate(unit_params());
  const HeunResidual good = heun_ode_residual(p, [&](cplx z) { return heun_local(p, z).value; }, 0.2);
  // Central differences at h = 1e-5 resolve u'' only to about 1e-6.
  CHECK(good.relative() <= 1e-5);
  CHECK(heun_ode_residual_jet(p, [&](cplx z) { return heun_local_jet(p, z); }, 0.2).relative() <= 1e-8);
  const HeunResidual bad = heun_ode_residual(p, [](cplx z) { return z; }, 0.2);
  CHECK(bad.relative() > 0.1);
}

TEST_CASE("residual refuses points next to a singularity") {
  const HeunParams p = HeunParams::validate(unit_params());
  for (cplx z : {cplx(1e-8), cplx(1.0 + 1e-8), cplx(2.0, 1e-8)}) {
    try {
      (void)heun_ode_residual(p, [](cplx) { return cplx(1.0); }, z);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooCloseToSingularity);
    }
  }
}
