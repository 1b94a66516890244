#include "heunpot/potential_builder.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace heunpot {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void family_mismatch(std::string_view what, const TransformFamily& fam) {
  std::ostringstream os;
  os << what << " does not apply to family " << family_name(fam);
  throw Error(ErrorKind::InvalidArgument, os.str());
}

void check_collar(const HeunParams& p, const TransformFamily& fam, double x) {
  if (in_singularity_collar(p, special_case_z(fam, x))) {
    std::ostringstream os;
    os << "x = " << x << " lies in a singularity collar of " << family_name(fam);
    throw Error(ErrorKind::SingularityCollar, os.str());
  }
}

template <class F>
const F& family_as(const TransformFamily& fam, std::string_view what) {
  const F* f = std::get_if<F>(&fam);
  if (f == nullptr) {
    family_mismatch(what, fam);
  }
  return *f;
}

cplx sq(cplx v) { return v * v; }

}  // namespace

bool in_singularity_collar(const HeunParams& p, const ZPoint& pt) {
  return std::abs(pt.z) < kProfileCollar || std::abs(pt.z - 1.0) < kProfileCollar ||
         std::abs(pt.z - p.a()) < kProfileCollar || std::abs(pt.dz) < kProfileCollar;
}

cplx schrodinger_invariant_at_z(const HeunParams& p, const QuadraticRho& r, cplx z) {
  return rho_squared(r, z) * heun_invariant(p, z) + 0.5 * schwarzian_closed(r, z);
}

cplx schrodinger_invariant_direct(const HeunParams& p, const TransformFamily& fam, double x) {
  const ZPoint pt = special_case_z(fam, x);
  if (in_singularity_collar(p, pt)) {
    std::ostringstream os;
    os << "x = " << x << " lies in a singularity collar of " << family_name(fam);
    throw Error(ErrorKind::SingularityCollar, os.str());
  }
  return schrodinger_invariant_at_z(p, induced_rho(fam), pt.z);
}

std::string to_string(PrintedDisplay d) {
  switch (d) {
    case PrintedDisplay::H1Plus: return "display H1+";
    case PrintedDisplay::H1Minus: return "display H1-";
    case PrintedDisplay::H2a: return "display H2a";
    case PrintedDisplay::H2b: return "display H2b";
    case PrintedDisplay::H3a: return "display H3a";
    case PrintedDisplay::H3b: return "display H3b";
    case PrintedDisplay::H4: return "display H4";
    case PrintedDisplay::H5Plus: return "display H5+";
    case PrintedDisplay::H5Minus: return "display H5-";
  }
  return "display ?";
}

std::optional<PrintedDisplay> display_for(const TransformFamily& fam) {
  return std::visit(
      Overloaded{
          [](const family::Exponential& f) -> std::optional<PrintedDisplay> {
            return f.sign == Branch::Plus ? PrintedDisplay::H1Plus : PrintedDisplay::H1Minus;
          },
          [](const family::CoshSq&) -> std::optional<PrintedDisplay> { return PrintedDisplay::H2a; },
          [](const family::SinhSq&) -> std::optional<PrintedDisplay> { return PrintedDisplay::H2b; },
          [](const family::CosSq&) -> std::optional<PrintedDisplay> { return PrintedDisplay::H3a; },
          [](const family::SinSq&) -> std::optional<PrintedDisplay> { return PrintedDisplay::H3b; },
          [](const family::Quadratic&) -> std::optional<PrintedDisplay> { return PrintedDisplay::H4; },
          [](const family::Linear& f) -> std::optional<PrintedDisplay> {
            return f.sign == Branch::Plus ? PrintedDisplay::H5Plus : PrintedDisplay::H5Minus;
          },
          [](const family::General&) -> std::optional<PrintedDisplay> { return std::nullopt; },
      },
      fam);
}

cplx printed_display_invariant(PrintedDisplay d, const HeunParams& p, const TransformFamily& fam, double x) {
  check_collar(p, fam, x);
  const InvariantCoeffs k = invariant_coeffs(p);
  const cplx A = k.A, B = k.B, C = k.C, D = k.D, F = k.F;
  const cplx a = p.a();
  const std::string what = to_string(d);

  // Bracketed polynomial shared by the hyperbolic and trigonometric forms.
  const cplx c8 = 4.0 - 16.0 * A;
  const cplx c6 = 2.0 * a + 4.0 * B + 1.0;
  const cplx c4 = 4.0 * a * (a + 2.0) - 16.0 * C + 3.0;
  const cplx c2 = a * (2.0 * a + 3.0) + 8.0 * D;
  auto bracket = [&](cplx w) {
    return 3.0 * a * a + c8 * sq(sq(w)) - 4.0 * c6 * w * w * w + c4 * w * w - 2.0 * c2 * w - 16.0 * F;
  };

  switch (d) {
    case PrintedDisplay::H1Plus: {
      const auto& f = family_as<family::Exponential>(fam, what);
      if (f.sign != Branch::Plus) family_mismatch(what, fam);
      const cplx e = f.g * std::exp(2.0 * f.s * x);
      const cplx num = e * (e * (e * (A * e + B) + C) + D) + F;
      return f.s * f.s * (4.0 * num / (sq(a - e) * sq(e - 1.0)) - 1.0);
    }
    case PrintedDisplay::H1Minus: {
      const auto& f = family_as<family::Exponential>(fam, what);
      if (f.sign != Branch::Minus) family_mismatch(what, fam);
      const cplx e = std::exp(2.0 * f.s * x);
      const cplx g = f.g;
      const cplx num = B * g * g * g * e + C * g * g * e * e + D * g * e * e * e + F * sq(sq(e)) + A * sq(sq(g));
      return f.s * f.s * (4.0 * num / (sq(e - g) * sq(g - a * e)) - 1.0);
    }
    case PrintedDisplay::H2a: {
      const auto& f = family_as<family::CoshSq>(fam, what);
      const cplx ch2 = sq(std::cosh(f.s * x));
      const cplx csch2 = 1.0 / sq(std::sinh(2.0 * f.s * x));
      return -f.s * f.s * csch2 / sq(ch2 - a) * bracket(ch2);
    }
    case PrintedDisplay::H2b: {
      const auto& f = family_as<family::SinhSq>(fam, what);
      const cplx sh2 = sq(std::sinh(f.s * x));
      const cplx cs = 1.0 / sh2;
      const cplx th2 = sq(std::tanh(f.s * x));
      const cplx inner = (3.0 * a * a - 16.0 * F) * sq(sq(cs)) + 4.0 * c6 * cs + c4 * cs * cs + 2.0 * c2 * cs * cs * cs -
                         16.0 * A + 4.0;
      return -f.s * f.s * sh2 * sh2 * th2 / (4.0 * sq(sh2 + a)) * inner;
    }
    case PrintedDisplay::H3a:
    case PrintedDisplay::H3b: {
      cplx b, w;
      if (d == PrintedDisplay::H3a) {
        b = family_as<family::CosSq>(fam, what).b;
        w = sq(std::cos(b * x));
      } else {
        b = family_as<family::SinSq>(fam, what).b;
        w = sq(std::sin(b * x));
      }
      const cplx csc2 = 1.0 / sq(std::sin(2.0 * b * x));
      return -b * b * csc2 / sq(w - a) * bracket(w);
    }
    case PrintedDisplay::H4: {
      const auto& f = family_as<family::Quadratic>(fam, what);
      const cplx w = f.c * x * x;
      const cplx num = w * (w * (w * (A * w + B) + C) + D) + F;
      return 16.0 * num / (4.0 * x * x * sq(w - 1.0) * sq(a - w)) - 3.0 / (4.0 * x * x);
    }
    case PrintedDisplay::H5Plus:
    case PrintedDisplay::H5Minus: {
      const auto& f = family_as<family::Linear>(fam, what);
      const double sg = d == PrintedDisplay::H5Plus ? 1.0 : -1.0;
      if (sign_of(f.sign) != sg) family_mismatch(what, fam);
      const cplx t = f.sigma * x;
      const cplx num = t * (t * (t * (A * t + sg * B) + C) + sg * D) + F;
      return num / (x * x * sq(t - sg) * sq(a - sg * t));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown display");
}

std::string to_string(ExpandedCase c) {
  switch (c) {
    case ExpandedCase::CaseIPlus: return "table i+";
    case ExpandedCase::CaseIIa: return "table ii-a";
    case ExpandedCase::CaseIIIa: return "table iii-a";
    case ExpandedCase::CaseIV: return "table iv";
    case ExpandedCase::CaseVMinus: return "table v-";
  }
  return "table ?";
}

std::optional<ExpandedCase> expanded_case_for(const TransformFamily& fam) {
  return std::visit(Overloaded{
                        [](const family::Exponential& f) -> std::optional<ExpandedCase> {
                          if (f.sign == Branch::Plus) return ExpandedCase::CaseIPlus;
                          return std::nullopt;
                        },
                        [](const family::CoshSq&) -> std::optional<ExpandedCase> { return ExpandedCase::CaseIIa; },
                        [](const family::CosSq&) -> std::optional<ExpandedCase> { return ExpandedCase::CaseIIIa; },
                        [](const family::Quadratic&) -> std::optional<ExpandedCase> { return ExpandedCase::CaseIV; },
                        [](const family::Linear& f) -> std::optional<ExpandedCase> {
                          if (f.sign == Branch::Minus) return ExpandedCase::CaseVMinus;
                          return std::nullopt;
                        },
                        [](const auto&) -> std::optional<ExpandedCase> { return std::nullopt; },
                    },
                    fam);
}

cplx& ExpandedCoeffs::at(std::string_view name) {
  for (auto& c : coeffs) {
    if (c.name == name) return c.value;
  }
  throw Error(ErrorKind::InvalidArgument, "no coefficient named " + std::string(name));
}

ExpandedCoeffs printed_expanded_coeffs(ExpandedCase which, const HeunParams& p, const TransformFamily& fam) {
  const InvariantCoeffs k = invariant_coeffs(p);
  const cplx A = k.A, B = k.B, C = k.C, D = k.D, F = k.F;
  const cplx a = p.a();
  const cplx a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
  const cplx am1 = a - 1.0;
  const cplx am1_2 = am1 * am1, am1_3 = am1_2 * am1;
  const std::string what = to_string(which);
  ExpandedCoeffs out{which, a, fam, {}};
  switch (which) {
    case ExpandedCase::CaseIPlus: {
      const auto& f = family_as<family::Exponential>(fam, what);
      if (f.sign != Branch::Plus) family_mismatch(what, fam);
      out.coeffs = {
          {"k", a2 * (4.0 * A - 1.0)},
          {"A1+", 4.0 * (a2 * A + a2 * B + a2 * C + a2 * D + a2 * F) / am1_2},
          {"B1+", 4.0 * (4.0 * a3 * A + 3.0 * a3 * B + 2.0 * a3 * C + a3 * D - 2.0 * a2 * A - a2 * B + a2 * D + 2.0 * a2 * F) / am1_3},
          {"C1+", 4.0 * (2.0 * a6 * A - 4.0 * a5 * A + a5 * B - 3.0 * a4 * B - 2.0 * a3 * C - a3 * D - a2 * D - 2.0 * a2 * F) / am1_3},
          {"D1+", 4.0 * (a6 * A + a5 * B + a4 * C + a3 * D + a2 * F) / am1_2},
      };
      break;
    }
    case ExpandedCase::CaseIIa: {
      (void)family_as<family::CoshSq>(fam, what);
      out.coeffs = {
          {"A2a", a2 * (16.0 * F - 3.0 * a2)},
          {"B2a", a2 * (a * (2.0 * a + 3.0) + 8.0 * D) / 2.0},
          {"C2a", a2 * (4.0 * a * (a + 2.0) - 16.0 * C + 3.0) / 4.0},
          {"D2a", a2 * (2.0 * a + 4.0 * B + 1.0)},
          {"E2a", a2 * (4.0 * A - 1.0)},
      };
      break;
    }
    case ExpandedCase::CaseIIIa: {
      const cplx b = family_as<family::CosSq>(fam, what).b;
      const cplx b2 = b * b;
      out.coeffs = {
          {"A3a", b2 * (16.0 * F - 3.0 * a2)},
          {"B3a", b2 * (a * (2.0 * a + 3.0) + 8.0 * D) / 2.0},
          {"C3a", b2 * (4.0 * a * (2.0 + a) - 16.0 * C + 3.0) / 4.0},
          {"D3a", b2 * (2.0 * a + 4.0 * B + 1.0)},
          {"E3a", b2 * (4.0 * A - 1.0)},
      };
      break;
    }
    case ExpandedCase::CaseIV: {
      const cplx c = family_as<family::Quadratic>(fam, what).c;
      out.coeffs = {
          {"A4", (16.0 * F - 3.0 * a2) / (4.0 * a2)},
          {"B4", 4.0 * c * (a4 * A + a3 * B + a2 * C + a * D + F) / (am1_2 * a)},
          {"C4", 4.0 * c * (a5 * A - 3.0 * a4 * A - 2.0 * a3 * B - a3 * C - a2 * C - 2.0 * a2 * D - 3.0 * a * F + F) / (am1_3 * a2)},
          {"D4", 4.0 * c * (A + B + C + D + F) / am1_2},
          {"E4", 4.0 * c * (3.0 * a * A + 2.0 * a * B + a * C - a * F - A + C + 2.0 * D + 3.0 * F) / am1_3},
      };
      break;
    }
    case ExpandedCase::CaseVMinus: {
      const auto& f = family_as<family::Linear>(fam, what);
      if (f.sign != Branch::Minus) family_mismatch(what, fam);
      const cplx s = f.sigma, s2 = s * s;
      out.coeffs = {
          {"A5-", -s * (a * D + 2.0 * a * F + 2.0 * F) / a3},
          {"B5-", F / a2},
          {"C5-", s2 * (a4 * A + a3 * B + a2 * C + a * D + F) / (am1_2 * a2)},
          {"D5-", s2 * (2.0 * a4 * A + a4 * B + a3 * B + 2.0 * a3 * C + 3.0 * a2 * D - a * D + 4.0 * a * F - 2.0 * F) / (am1_3 * a3)},
          {"E5-", s2 * (A + B + C + D + F) / am1_2},
          {"F5-", s2 * (-2.0 * a * A - a * B + a * D + 2.0 * a * F - B - 2.0 * C - 3.0 * D - 4.0 * F) / am1_3},
      };
      break;
    }
  }
  return out;
}

std::vector<cplx> expansion_basis(ExpandedCase which, cplx a, const TransformFamily& fam, double x) {
  const std::string what = to_string(which);
  switch (which) {
    case ExpandedCase::CaseIPlus: {
      const auto& f = family_as<family::Exponential>(fam, what);
      const cplx e = f.g * std::exp(2.0 * f.s * x);
      return {1.0, 1.0 / sq(e - 1.0), 1.0 / (e - 1.0), 1.0 / (e - a), 1.0 / sq(e - a)};
    }
    case ExpandedCase::CaseIIa: {
      const cplx s = family_as<family::CoshSq>(fam, what).s;
      const cplx ch2 = sq(std::cosh(s * x));
      const cplx coth2 = 1.0 / sq(std::tanh(s * x));
      const cplx den = sq(ch2 - a);
      return {1.0 / sq(std::sinh(2.0 * s * x)) / den, 1.0 / sq(std::sinh(s * x)) / den, -coth2 / den,
              ch2 * coth2 / den, ch2 * ch2 * coth2 / den};
    }
    case ExpandedCase::CaseIIIa: {
      const cplx b = family_as<family::CosSq>(fam, what).b;
      const cplx c2 = sq(std::cos(b * x));
      const cplx cot2 = 1.0 / sq(std::tan(b * x));
      const cplx den = sq(c2 - a);
      return {1.0 / sq(std::sin(2.0 * b * x)) / den, 1.0 / sq(std::sin(b * x)) / den, -cot2 / den, c2 * cot2 / den,
              c2 * c2 * cot2 / den};
    }
    case ExpandedCase::CaseIV: {
      const cplx w = family_as<family::Quadratic>(fam, what).c * x * x;
      return {1.0 / (x * x), 1.0 / sq(w - a), 1.0 / (w - a), 1.0 / sq(w - 1.0), 1.0 / (w - 1.0)};
    }
    case ExpandedCase::CaseVMinus: {
      const cplx t = family_as<family::Linear>(fam, what).sigma * x;
      return {1.0 / x, 1.0 / (x * x), 1.0 / sq(a + t), 1.0 / (a + t), 1.0 / sq(t + 1.0), 1.0 / (t + 1.0)};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expansion");
}

cplx expanded_invariant(const ExpandedCoeffs& c, double x) {
  const ZPoint pt = special_case_z(c.family, x);
  if (std::abs(pt.z) < kProfileCollar || std::abs(pt.z - 1.0) < kProfileCollar ||
      std::abs(pt.z - c.heun_a) < kProfileCollar || std::abs(pt.dz) < kProfileCollar) {
    std::ostringstream os;
    os << "x = " << x << " lies in a singularity collar of " << family_name(c.family);
    throw Error(ErrorKind::SingularityCollar, os.str());
  }
  const std::vector<cplx> basis = expansion_basis(c.which, c.heun_a, c.family, x);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    sum += c.coeffs.at(i).value * basis[i];
  }
  return sum;
}

std::string to_string(Verdict v) { return v == Verdict::Confirmed ? "CONFIRMED" : "ERRATUM"; }

namespace {

struct Samples {
  std::vector<double> xs;
  std::vector<cplx> direct;
};

Samples direct_samples(const HeunParams& p, const TransformFamily& fam, std::span<const double> grid) {
  Samples s;
  for (double x : grid) {
    if (in_singularity_collar(p, special_case_z(fam, x))) continue;
    s.xs.push_back(x);
    s.direct.push_back(schrodinger_invariant_direct(p, fam, x));
  }
  return s;
}

double rms(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& c : v) acc += std::norm(c);
  return v.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(v.size()));
}

// Fills per_point and max_rel_error, returns the max.
double compare(const std::vector<cplx>& direct, const std::vector<cplx>& claimed, std::vector<double>& per_point) {
  const double floor = std::max(rms(direct), 1e-300);
  per_point.resize(direct.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < direct.size(); ++i) {
    const double e = std::abs(direct[i] - claimed[i]) / std::max(std::abs(direct[i]), floor);
    per_point[i] = std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
    worst = std::max(worst, per_point[i]);
  }
  return worst;
}

std::vector<cplx> least_squares(const std::vector<std::vector<cplx>>& rows, const std::vector<cplx>& rhs) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto k = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXcd m(n, k);
  Eigen::VectorXcd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    b(i) = rhs[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd scale = m.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (scale(j) == 0.0) scale(j) = 1.0;
    m.col(j) /= scale(j);
  }
  Eigen::VectorXcd sol = m.colPivHouseholderQr().solve(b);
  std::vector<cplx> out(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = sol(j) / scale(j);
  return out;
}

}  // namespace

ClaimVerdict cross_check_table(const HeunParams& p, const ExpandedCoeffs& c, std::span<const double> grid, double tol) {
  ClaimVerdict v;
  v.claim = to_string(c.which);
  v.family = family_name(c.family);
  v.printed = c.coeffs;
  const Samples s = direct_samples(p, c.family, grid);
  v.xs = s.xs;
  if (s.xs.size() < c.coeffs.size()) {
    throw Error(ErrorKind::InvalidArgument, "grid has too few points outside the collars for a refit");
  }
  std::vector<std::vector<cplx>> rows;
  std::vector<cplx> claimed;
  for (double x : s.xs) {
    rows.push_back(expansion_basis(c.which, c.heun_a, c.family, x));
    cplx sum = 0.0;
    for (std::size_t i = 0; i < rows.back().size(); ++i) sum += c.coeffs[i].value * rows.back()[i];
    claimed.push_back(sum);
  }
  v.max_rel_error = compare(s.direct, claimed, v.per_point);
  v.verdict = v.max_rel_error <= tol ? Verdict::Confirmed : Verdict::Erratum;

  const std::vector<cplx> fit = least_squares(rows, s.direct);
  std::vector<cplx> refit_values;
  for (std::size_t i = 0; i < fit.size(); ++i) v.refit.push_back({c.coeffs[i].name, fit[i]});
  for (const auto& row : rows) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) sum += fit[i] * row[i];
    refit_values.push_back(sum);
  }
  std::vector<double> scratch;
  v.refit_max_rel_error = compare(s.direct, refit_values, scratch);
  return v;
}

ClaimVerdict cross_check_display(const HeunParams& p, PrintedDisplay d, const TransformFamily& fam,
                                 std::span<const double> grid, double tol) {
  ClaimVerdict v;
  v.claim = to_string(d);
  v.family = family_name(fam);
  const Samples s = direct_samples(p, fam, grid);
  v.xs = s.xs;
  std::vector<cplx> claimed;
  for (double x : s.xs) claimed.push_back(printed_display_invariant(d, p, fam, x));
  v.max_rel_error = compare(s.direct, claimed, v.per_point);
  v.verdict = v.max_rel_error <= tol ? Verdict::Confirmed : Verdict::Erratum;
  return v;
}

std::vector<ClaimVerdict> cross_check_expansion(const HeunParams& p, const TransformFamily& fam,
                                                std::span<const double> grid, double tol) {
  std::vector<ClaimVerdict> out;
  if (const auto d = display_for(fam)) {
    out.push_back(cross_check_display(p, *d, fam, grid, tol));
  }
  if (const auto c = expanded_case_for(fam)) {
    out.push_back(cross_check_table(p, printed_expanded_coeffs(*c, p, fam), grid, tol));
  }
  return out;
}

cplx energy_constant(const HeunParams& p, const TransformFamily& fam) {
  if (const auto* f = std::get_if<family::Exponential>(&fam)) {
    return f->s * f->s * (4.0 * invariant_coeffs(p).A - 1.0);
  }
  return 0.0;
}

EnergySplit split_energy_potential(std::span<const cplx> is_values, const HeunParams& p, const TransformFamily& fam) {
  EnergySplit out{energy_constant(p, fam), {}};
  out.v_values.reserve(is_values.size());
  for (const cplx& v : is_values) out.v_values.push_back(out.k_squared - v);
  return out;
}

cplx wavefunction(const HeunParams& p, const TransformFamily& fam, double x) {
  const ZPoint pt = special_case_z(fam, x);
  if (in_singularity_collar(p, pt)) {
    std::ostringstream os;
    os << "x = " << x << " lies in a singularity collar of " << family_name(fam);
    throw Error(ErrorKind::SingularityCollar, os.str());
  }
  return phi_factor(p, pt.dz, pt.z) * heun_local(p, pt.z).value;
}

std::string to_string(ConstructionPath path) { return path == ConstructionPath::Direct ? "direct" : "expanded"; }

GridSpec default_window(const TransformFamily& fam) {
  if (std::holds_alternative<family::Quadratic>(fam) || std::holds_alternative<family::Linear>(fam)) {
    return {0.05, 3.0, 201};
  }
  return {-2.0, 2.0, 201};
}

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.count < 3 || !(spec.min < spec.max)) {
    throw Error(ErrorKind::InvalidArgument, "grid needs min < max and at least 3 points");
  }
  std::vector<double> xs(spec.count);
  const double step = (spec.max - spec.min) / static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) xs[i] = spec.min + step * static_cast<double>(i);
  xs.back() = spec.max;
  return xs;
}

PotentialProfile build_profile(const HeunParams& p, const TransformFamily& fam, const GridSpec& grid,
                               ConstructionPath path) {
  std::optional<ExpandedCoeffs> table;
  if (path == ConstructionPath::Expanded) {
    const auto which = expanded_case_for(fam);
    if (!which) family_mismatch("an expanded construction", fam);
    table = printed_expanded_coeffs(*which, p, fam);
  }
  PotentialProfile prof{fam, p, path, {}, {}, {}, 0.0, {}, {}, {}};
  for (double x : make_grid(grid)) {
    const ZPoint pt = special_case_z(fam, x);
    if (in_singularity_collar(p, pt)) {
      prof.excluded.push_back(x);
      continue;
    }
    prof.xs.push_back(x);
    prof.zs.push_back(pt.z);
    prof.is_values.push_back(table ? expanded_invariant(*table, x) : schrodinger_invariant_at_z(p, induced_rho(fam), pt.z));
    std::optional<cplx> psi;
    try {
      psi = wavefunction(p, fam, x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutsideConvergenceDomain && e.kind() != ErrorKind::SlowConvergence &&
          e.kind() != ErrorKind::GammaNonPositiveInteger) {
        throw;
      }
    }
    prof.psi_values.push_back(psi);
  }
  EnergySplit split = split_energy_potential(prof.is_values, p, fam);
  prof.k_squared = split.k_squared;
  prof.v_values = std::move(split.v_values);
  return prof;
}

}  // namespace heunpot
