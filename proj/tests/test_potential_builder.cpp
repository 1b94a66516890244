#include <doctest.h>

#include <numeric>

#include "heunpot/potential_builder.hpp"
#include "heunpot/verify_oracle.hpp"

using namespace heunpot;

namespace {

HeunParams unit() { return HeunParams::validate(RawHeunParams{2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}); }

HeunParams generic() {
  return HeunParams::with_solved_epsilon(
      RawHeunParams{cplx(3.0, 0.5), cplx(0.7, -0.2), cplx(1.3, 0.1), cplx(-0.4, 0.3), cplx(1.6, -0.2), 0.8, 0.0});
}

std::vector<double> grid(double lo, double hi, int n) { return make_grid({lo, hi, static_cast<std::size_t>(n)}); }

}  // namespace

TEST_CASE("linear family matches its printed closed form") {
  const HeunParams p = generic();
  const family::Linear lin{1.0, Branch::Plus};
  const cplx direct = schrodinger_invariant_direct(p, lin, 0.37);
  const cplx printed = printed_display_invariant(PrintedDisplay::H5Plus, p, lin, 0.37);
  CHECK(std::abs(direct - printed) <= 1e-12 * std::abs(direct));
}

TEST_CASE("every printed display agrees with the direct assembly") {
  const HeunParams p = generic();
  const std::vector<TransformFamily> fams = {
      family::Exponential{0.6, 0.9, Branch::Plus}, family::Exponential{0.6, 0.9, Branch::Minus},
      family::CoshSq{0.8}, family::SinhSq{0.8}, family::CosSq{1.1}, family::SinSq{1.1}, family::Quadratic{0.7},
      family::Linear{1.3, Branch::Plus}, family::Linear{1.3, Branch::Minus}};
  for (const auto& fam : fams) {
    const auto d = display_for(fam);
    REQUIRE(d.has_value());
    const ClaimVerdict v = cross_check_display(p, *d, fam, grid(0.1, 1.9, 50));
    CHECK_MESSAGE(v.verdict == Verdict::Confirmed, to_string(*d), " ", v.max_rel_error);
  }
}

TEST_CASE("exponential invariant approaches its constant") {
  const HeunParams p = generic();
  const family::Exponential ex{0.5, 0.8, Branch::Plus};
  const cplx k2 = energy_constant(p, ex);
  const double s = 0.8;
  CHECK(std::abs(k2 - s * s * (4.0 * invariant_coeffs(p).A - 1.0)) <= 1e-15);
  double last = INFINITY;
  for (double x : {4.0, 8.0, 12.0}) {
    const double gap = std::abs(schrodinger_invariant_direct(p, ex, x) - k2);
    CHECK(gap < last);
    last = gap;
  }
  CHECK(last <= 1e-6);
}

TEST_CASE("vanishing Heun invariant leaves half the Schwarzian") {
  const HeunParams p = HeunParams::validate(RawHeunParams{2.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.0});
  for (const TransformFamily& fam : std::vector<TransformFamily>{family::CosSq{1.0}, family::Quadratic{2.0},
                                                                family::Exponential{1.0, 0.4, Branch::Minus}}) {
    for (double x : {0.3, 0.7}) {
      const ZPoint pt = special_case_z(fam, x);
      const cplx half = 0.5 * schwarzian_closed(induced_rho(fam), pt.z);
      CHECK(std::abs(schrodinger_invariant_direct(p, fam, x) - half) <= 1e-12 * (1.0 + std::abs(half)));
    }
  }
}

TEST_CASE("quadratic table: leading small-x behaviour") {
  const HeunParams p = unit();
  const family::Quadratic quad{1.0};
  const ExpandedCoeffs c = printed_expanded_coeffs(ExpandedCase::CaseIV, p, quad);
  const cplx F = invariant_coeffs(p).F;
  const cplx a2 = p.a() * p.a();
  CHECK(std::abs(c.coeffs[0].value - (16.0 * F - 3.0 * a2) / (4.0 * a2)) <= 1e-15);
  // Below the profile collar, so go through z directly.
  const double x = 1e-3;
  const cplx is = schrodinger_invariant_at_z(p, induced_rho(quad), special_case_z(quad, x).z);
  CHECK(std::abs(is * x * x - c.coeffs[0].value) <= 1e-5);
}

TEST_CASE("linear minus table: the 1/x^2 coefficient is F / a^2") {
  const HeunParams p = generic();
  ExpandedCoeffs c = printed_expanded_coeffs(ExpandedCase::CaseVMinus, p, family::Linear{1.0, Branch::Minus});
  CHECK(std::abs(c.at("B5-") - invariant_coeffs(p).F / (p.a() * p.a())) <= 1e-15);
}

TEST_CASE("tables confirmed where the rate equals a and flagged elsewhere") {
  const HeunParams p = unit();
  const std::vector<double> g = grid(-2.0, 2.0, 50);
  const ExpandedCoeffs at_a = printed_expanded_coeffs(ExpandedCase::CaseIPlus, p, family::Exponential{1.0, 2.0, Branch::Plus});
  CHECK(cross_check_table(p, at_a, g).verdict == Verdict::Confirmed);
  const ExpandedCoeffs off = printed_expanded_coeffs(ExpandedCase::CaseIPlus, p, family::Exponential{1.0, 1.0, Branch::Plus});
  const ClaimVerdict v = cross_check_table(p, off, g);
  CHECK(v.verdict == Verdict::Erratum);
  CHECK(v.refit_max_rel_error <= 1e-8);
  CHECK(v.refit.size() == v.printed.size());
}

TEST_CASE("refit coefficients fed back are confirmed") {
  const HeunParams p = unit();
  const family::Exponential ex{1.0, 1.0, Branch::Plus};
  const std::vector<double> g = grid(-2.0, 2.0, 50);
  ExpandedCoeffs c = printed_expanded_coeffs(ExpandedCase::CaseIPlus, p, ex);
  const ClaimVerdict v = cross_check_table(p, c, g);
  c.coeffs = v.refit;
  CHECK(cross_check_table(p, c, g).verdict == Verdict::Confirmed);
}

TEST_CASE("corrupted coefficient is flagged") {
  const HeunParams p = unit();
  const family::Quadratic quad{1.0};
  const std::vector<double> g = grid(0.05, 3.0, 50);
  ExpandedCoeffs c = printed_expanded_coeffs(ExpandedCase::CaseIV, p, quad);
  CHECK(cross_check_table(p, c, g).verdict == Verdict::Confirmed);
  c.at("A4") += 1.0;
  const ClaimVerdict v = cross_check_table(p, c, g);
  CHECK(v.verdict == Verdict::Erratum);
  CHECK(v.max_rel_error > 1e-3);
}

TEST_CASE("linear minus table on a 50-point grid gets a verdict") {
  const HeunParams p = generic();
  const auto claims = cross_check_expansion(p, family::Linear{1.0, Branch::Minus}, grid(0.05, 3.0, 50));
  REQUIRE(claims.size() == 2);
  for (const auto& v : claims) CHECK(v.verdict == Verdict::Confirmed);
}

TEST_CASE("energy split") {
  const HeunParams p = generic();
  const family::Linear lin{1.0, Branch::Minus};
  CHECK(energy_constant(p, lin) == cplx(0.0));
  const std::vector<cplx> is{cplx(1.0, 2.0), cplx(-3.0, 0.5)};
  const EnergySplit s = split_energy_potential(is, p, lin);
  CHECK(s.v_values[0] == -is[0]);
  CHECK(s.v_values[1] == -is[1]);
  // A = 1/4 removes the constant
  const HeunParams quarter = HeunParams::validate(RawHeunParams{2.0, 1.0, 0.5, 0.5, 1.0, 0.5, 0.5});
  CHECK(invariant_coeffs(quarter).A == cplx(0.25));
  CHECK(energy_constant(quarter, family::Exponential{1.0, 1.3, Branch::Plus}) == cplx(0.0));
}

TEST_CASE("wavefunction near the origin of the linear family") {
  const HeunParams p = unit();
  const family::Linear lin{1.0, Branch::Plus};
  for (double x : {0.01, 0.02}) {
    const cplx ratio = wavefunction(p, lin, x) / phi_factor(p, 1.0, x);
    CHECK(std::abs(ratio - heun_local(p, x).value) <= 1e-14);
    CHECK(std::abs(ratio - 1.0) <= 0.51 * x);  // Hl = 1 + x/2 + ...
  }
}

TEST_CASE("bare similarity factor") {
  const HeunParams p = HeunParams::validate(RawHeunParams{2.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0});
  const family::Quadratic quad{0.5};
  for (double x : {0.3, 0.9}) {
    const ZPoint pt = special_case_z(quad, x);
    CHECK(std::abs(phi_factor(p, pt.dz, pt.z) - 1.0 / std::sqrt(pt.dz)) <= 1e-14);
  }
}

TEST_CASE("wavefunction solves the Schrodinger equation at x = 0.2") {
  const HeunParams p = unit();
  const family::Linear lin{1.0, Branch::Plus};
  const std::vector<double> pt{0.2};
  const ResidualReport r = schrodinger_residual([&](double x) { return wavefunction(p, lin, x); },
                                                [&](double x) { return schrodinger_invariant_direct(p, lin, x); }, pt);
  CHECK(r.max_rel_residual <= 1e-6);
}

TEST_CASE("cosh and cos families are continuations of each other") {
  const HeunParams p = generic();
  const double b = 0.8;
  for (double x : {0.3, 0.9, 1.4}) {
    const cplx h = schrodinger_invariant_direct(p, family::CoshSq{cplx(0.0, b)}, x);
    const cplx t = schrodinger_invariant_direct(p, family::CosSq{b}, x);
    CHECK(std::abs(h - t) <= 1e-12 * std::abs(t));
  }
}

TEST_CASE("profiles") {
  const HeunParams p = unit();
  const family::Linear lin{1.0, Branch::Plus};
  const PotentialProfile prof = build_profile(p, lin, {0.05, 3.0, 201});
  CHECK(prof.xs.size() + prof.excluded.size() == 201);
  for (std::size_t i = 0; i < prof.xs.size(); ++i) CHECK(prof.v_values[i] == prof.k_squared - prof.is_values[i]);
  const auto inside = std::count_if(prof.psi_values.begin(), prof.psi_values.end(), [](auto& v) { return v.has_value(); });
  CHECK(inside > 0);
  CHECK(static_cast<std::size_t>(inside) < prof.xs.size());

  const PotentialProfile expanded = build_profile(p, family::Quadratic{1.0}, {0.05, 3.0, 51}, ConstructionPath::Expanded);
  const PotentialProfile direct = build_profile(p, family::Quadratic{1.0}, {0.05, 3.0, 51});
  REQUIRE(expanded.xs.size() == direct.xs.size());
  for (std::size_t i = 0; i < direct.xs.size(); ++i) {
    CHECK(std::abs(expanded.is_values[i] - direct.is_values[i]) <= 1e-9 * (1.0 + std::abs(direct.is_values[i])));
  }
  CHECK_THROWS_AS(build_profile(p, family::SinhSq{1.0}, {0.1, 1.0, 5}, ConstructionPath::Expanded), Error);
  CHECK_THROWS_AS(make_grid({1.0, 0.0, 10}), Error);
  CHECK_THROWS_AS(make_grid({0.0, 1.0, 2}), Error);
}
