#include <doctest.h>

#include <random>

#include "heunpot/invariants.hpp"

using namespace heunpot;

namespace {

HeunParams params(cplx a, cplx q, cplx alpha, cplx beta, cplx gamma, cplx delta) {
  return HeunParams::with_solved_epsilon(RawHeunParams{a, q, alpha, beta, gamma, delta, 0.0});
}

HeunParams unit() { return HeunParams::validate(RawHeunParams{2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}); }

HeunParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const cplx a = std::polar(std::uniform_real_distribution<double>(1.5, 5.0)(rng), u(rng) * 1.5);
  return params(a, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)});
}

}  // namespace

TEST_CASE("normal form of simple equations") {
  CoeffFunctions constant{[](cplx) { return cplx(0.0); }, [](cplx) { return cplx(0.0); },
                          [](cplx) { return cplx(5.0); }, {}};
  CHECK(normal_form_invariant(constant, 0.7) == cplx(5.0));

  CoeffFunctions euler{[](cplx z) { return 2.0 / z; }, [](cplx z) { return -2.0 / (z * z); },
                       [](cplx) { return cplx(0.0); }, {0.0}};
  CHECK(std::abs(normal_form_invariant(euler, 1.0)) <= 1e-15);
  CHECK_THROWS_AS(normal_form_invariant(euler, 0.0), Error);
}

TEST_CASE("three routes to the Heun invariant agree") {
  const HeunParams p = unit();
  const cplx direct = heun_invariant(p, 0.5);
  CHECK(std::abs(normal_form_invariant(heun_coeff_functions(p), 0.5) - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  CHECK(std::abs(heun_invariant_quartic(p, 0.5) - direct) <= 1e-12 * (1.0 + std::abs(direct)));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const HeunParams r = random_params(rng);
    const cplx z(u(rng), u(rng));
    const cplx d = heun_invariant(r, z);
    const double tol = 1e-10 * (1.0 + std::abs(d));
    CHECK(std::abs(heun_invariant_quartic(r, z) - d) <= tol);
    CHECK(std::abs(normal_form_invariant(heun_coeff_functions(r), z) - d) <= tol);
  }
}

TEST_CASE("quartic numerator reproduces the direct form at random points") {
  const HeunParams p = unit();
  const InvariantCoeffs c = invariant_coeffs(p);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    const cplx z(u(rng), u(rng));
    const cplx den = z * z * (z - 1.0) * (z - 1.0) * (z - p.a()) * (z - p.a());
    CHECK(std::abs(c.numerator(z) - heun_invariant(p, z) * den) <= 1e-11 * (1.0 + std::abs(c.numerator(z))));
  }
}

TEST_CASE("Heun coefficient derivative is consistent") {
  std::mt19937_64 rng(9);
  const HeunParams p = random_params(rng);
  const std::vector<cplx> probes{cplx(0.3, 0.2), cplx(-0.7, 0.1), cplx(1.6, -0.4)};
  CHECK(coeff_consistency(heun_coeff_functions(p), probes) <= 1e-7);
}

TEST_CASE("F vanishes for gamma 0 and 2") {
  for (double g : {0.0, 2.0}) {
    const HeunParams p = params(cplx(3.0, -1.0), 0.7, cplx(0.3, 0.2), -1.1, g, 0.4);
    CHECK(invariant_coeffs(p).F == cplx(0.0));
  }
  CHECK(invariant_coeffs(unit()).F == cplx(-0.25 * 4.0 * 1.0 * (1.0 - 2.0)));
}

TEST_CASE("A vanishes when alpha beta = 0 and gamma + delta + epsilon is 0 or 2") {
  // With alpha beta = 0 the relation forces gamma + delta + epsilon = 1 + alpha + beta.
  CHECK(invariant_coeffs(params(2.0, 1.0, 0.0, 1.0, 0.7, 0.4)).A == cplx(0.0));
  CHECK(std::abs(invariant_coeffs(params(2.0, 1.0, 0.0, -1.0, 0.7, 0.4)).A) <= 1e-16);
}

TEST_CASE("only the epsilon pole survives") {
  const HeunParams p = HeunParams::validate(RawHeunParams{2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  for (cplx z : {cplx(0.4), cplx(3.0, 1.0), cplx(-2.0)}) {
    const cplx expect = 0.25 / ((z - 2.0) * (z - 2.0));
    CHECK(std::abs(heun_invariant(p, z) - expect) <= 1e-15 * std::abs(expect));
    CHECK(std::abs(heun_invariant_quartic(p, z) - expect) <= 1e-14 * std::abs(expect));
  }
}

TEST_CASE("invariant decays like A / z^2") {
  const HeunParams p = unit();
  const cplx A = invariant_coeffs(p).A;
  for (double z : {1e3, 1e4}) {
    const cplx scaled = heun_invariant_quartic(p, z) * z * z;
    CHECK(std::abs(scaled - A) <= 10.0 / z);
  }
}

TEST_CASE("invariants refuse the singular points") {
  const HeunParams p = unit();
  for (cplx z : {cplx(0.0), cplx(1.0), cplx(2.0 + 1e-10)}) {
    CHECK_THROWS_AS(heun_invariant(p, z), Error);
    CHECK_THROWS_AS(heun_invariant_quartic(p, z), Error);
  }
}

TEST_CASE("similarity factor") {
  // gamma = delta = epsilon = 0 leaves rho^(-1/2)
  const HeunParams bare = HeunParams::validate(RawHeunParams{2.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(std::abs(phi_factor(bare, 4.0, 0.3) - 0.5) <= 1e-15);
  const HeunParams g2 = HeunParams::validate(RawHeunParams{2.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.0});
  CHECK(std::abs(phi_factor(g2, 1.0, 3.0) - 3.0) <= 1e-14);
  CHECK_THROWS_AS(phi_factor(g2, 0.0, 3.0), Error);
}

TEST_CASE("log derivative of phi^2 rho is f") {
  std::mt19937_64 rng(21);
  const HeunParams p = random_params(rng);
  const CoeffFunctions cf = heun_coeff_functions(p);
  const cplx rho = cplx(0.8, -0.3);
  for (cplx z : {cplx(0.3, 0.4), cplx(-0.6, 0.5), cplx(1.7, 1.1)}) {
    const double h = 1e-5;
    auto phi = [&](cplx w) { return phi_factor(p, rho, w); };
    const cplx lhs = 2.0 * (phi(z + h) - phi(z - h)) / (2.0 * h) / phi(z);
    CHECK(std::abs(lhs - cf.f(z)) <= 1e-6 * (1.0 + std::abs(cf.f(z))));
  }
}
