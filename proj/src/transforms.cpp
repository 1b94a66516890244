#include "heunpot/transforms.hpp"

#include <cmath>
#include <sstream>

#include "heunpot/finite_difference.hpp"

namespace heunpot {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

QuadraticRho QuadraticRho::make(cplx alpha1, cplx beta1, cplx gamma1) {
  if (alpha1 == 0.0 && beta1 == 0.0 && gamma1 == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "rho^2 ansatz with all coefficients zero");
  }
  return QuadraticRho(alpha1, beta1, gamma1);
}

std::string family_name(const TransformFamily& fam) {
  return std::visit(
      Overloaded{
          [](const family::Exponential& f) { return std::string(f.sign == Branch::Plus ? "exp+" : "exp-"); },
          [](const family::CoshSq&) { return std::string("cosh2"); },
          [](const family::SinhSq&) { return std::string("sinh2"); },
          [](const family::CosSq&) { return std::string("cos2"); },
          [](const family::SinSq&) { return std::string("sin2"); },
          [](const family::Quadratic&) { return std::string("quad"); },
          [](const family::Linear& f) { return std::string(f.sign == Branch::Plus ? "linear+" : "linear-"); },
          [](const family::General&) { return std::string("general"); },
      },
      fam);
}

QuadraticRho induced_rho(const TransformFamily& fam) {
  return std::visit(Overloaded{
                        [](const family::Exponential& f) { return QuadraticRho::make(4.0 * f.s * f.s, 0.0, 0.0); },
                        [](const family::CoshSq& f) {
                          const cplx k = 4.0 * f.s * f.s;
                          return QuadraticRho::make(k, -k, 0.0);
                        },
                        [](const family::SinhSq& f) {
                          const cplx k = 4.0 * f.s * f.s;
                          return QuadraticRho::make(k, -k, 0.0);
                        },
                        [](const family::CosSq& f) {
                          const cplx k = 4.0 * f.b * f.b;
                          return QuadraticRho::make(-k, k, 0.0);
                        },
                        [](const family::SinSq& f) {
                          const cplx k = 4.0 * f.b * f.b;
                          return QuadraticRho::make(-k, k, 0.0);
                        },
                        [](const family::Quadratic& f) { return QuadraticRho::make(0.0, 4.0 * f.c, 0.0); },
                        [](const family::Linear& f) { return QuadraticRho::make(0.0, 0.0, f.sigma * f.sigma); },
                        [](const family::General& f) { return f.rho; },
                    },
                    fam);
}

cplx rho_squared(const QuadraticRho& r, cplx z) { return (r.alpha1() * z + r.beta1()) * z + r.gamma1(); }

cplx schwarzian_closed(const QuadraticRho& r, cplx z) {
  const cplx rho2 = rho_squared(r, z);
  if (std::abs(rho2) < 1e-12) {
    std::ostringstream os;
    os << "rho^2 = " << rho2 << " at z = " << z;
    throw Error(ErrorKind::ZeroRho, os.str());
  }
  return -0.5 * r.alpha1() - 0.375 * r.discriminant() / rho2;
}

double default_schwarzian_step(double) { return 5e-2; }

cplx schwarzian_numeric(const RealCurve& zfun, double x, double h) {
  if (h <= 0.0) {
    h = default_schwarzian_step(x);
  }
  const cplx z1 = fd::d1(zfun, x, h);
  const cplx z0 = zfun(x);
  if (std::abs(z1) <= 1e-10 * std::max(1.0, std::abs(z0))) {
    std::ostringstream os;
    os << "z'(" << x << ") vanishes";
    throw Error(ErrorKind::ZeroDerivative, os.str());
  }
  const cplx ratio2 = fd::d2(zfun, x, h) / z1;
  return fd::d3(zfun, x, h) / z1 - 1.5 * ratio2 * ratio2;
}

cplx default_general_c1(const QuadraticRho& r) {
  if (r.alpha1() == 0.0) {
    return 0.0;
  }
  return 1.0 / (2.0 * r.alpha1());
}

ZPoint solve_z_general(const QuadraticRho& r, cplx c1, Branch branch, double x) {
  const double sg = sign_of(branch);
  const cplx a1 = r.alpha1(), b1 = r.beta1(), g1 = r.gamma1();
  if (a1 != 0.0) {
    const cplx root = std::sqrt(a1);
    const cplx disc = r.discriminant();
    cplx amp_up = c1;
    cplx amp_down = 0.0;
    if (c1 != 0.0) {
      amp_down = disc / (4.0 * a1 * a1 * c1);
    } else if (disc != 0.0) {
      throw Error(ErrorKind::UnsupportedDegenerateCase,
                  "c1 = 0 cannot satisfy C D = (beta1^2 - 4 alpha1 gamma1) / (4 alpha1^2) with a nonzero discriminant");
    }
    const cplx w = std::exp(sg * root * x);
    const cplx up = amp_up * w, down = amp_down / w;
    return {-b1 / (2.0 * a1) + 0.5 * (up + down), 0.5 * sg * root * (up - down)};
  }
  if (b1 != 0.0) {
    const cplx t = sg * x + c1;
    return {0.25 * b1 * t * t - g1 / b1, 0.5 * sg * b1 * t};
  }
  const cplx slope = sg * std::sqrt(g1);
  return {slope * x + c1, slope};
}

ZPoint special_case_z(const TransformFamily& fam, double x) {
  return std::visit(Overloaded{
                        [x](const family::Exponential& f) -> ZPoint {
                          const double sg = sign_of(f.sign);
                          const cplx z = f.g * std::exp(sg * 2.0 * f.s * x);
                          return {z, sg * 2.0 * f.s * z};
                        },
                        [x](const family::CoshSq& f) -> ZPoint {
                          const cplx c = std::cosh(f.s * x);
                          return {c * c, f.s * std::sinh(2.0 * f.s * x)};
                        },
                        [x](const family::SinhSq& f) -> ZPoint {
                          const cplx sh = std::sinh(f.s * x);
                          return {-sh * sh, -f.s * std::sinh(2.0 * f.s * x)};
                        },
                        [x](const family::CosSq& f) -> ZPoint {
                          const cplx c = std::cos(f.b * x);
                          return {c * c, -f.b * std::sin(2.0 * f.b * x)};
                        },
                        [x](const family::SinSq& f) -> ZPoint {
                          const cplx sn = std::sin(f.b * x);
                          return {sn * sn, f.b * std::sin(2.0 * f.b * x)};
                        },
                        [x](const family::Quadratic& f) -> ZPoint { return {f.c * x * x, 2.0 * f.c * x}; },
                        [x](const family::Linear& f) -> ZPoint {
                          const double sg = sign_of(f.sign);
                          return {sg * f.sigma * x, sg * f.sigma};
                        },
                        [x](const family::General& f) -> ZPoint { return solve_z_general(f.rho, f.c1, f.branch, x); },
                    },
                    fam);
}

Mobius Mobius::make(cplx a1, cplx b1, cplx c1, cplx d1) {
  Mobius m(a1, b1, c1, d1);
  if (std::abs(m.det()) < 1e-12) {
    throw Error(ErrorKind::SingularMobius, "A1 D1 - B1 C1 vanishes");
  }
  return m;
}

double mobius_invariance_check(const Mobius& m, const RealCurve& zfun, double x, double h) {
  if (std::abs(m.det()) < 1e-12) {
    throw Error(ErrorKind::SingularMobius, "A1 D1 - B1 C1 vanishes");
  }
  if (h <= 0.0) {
    h = default_schwarzian_step(x);
  }
  for (double off : {-2.0 * h, -h, 0.0, h, 2.0 * h}) {
    const cplx z = zfun(x + off);
    if (std::abs(m.denominator(z)) < 1e-6 * std::max(1.0, std::abs(z))) {
      std::ostringstream os;
      os << "C1 z + D1 vanishes near x = " << x;
      throw Error(ErrorKind::PoleCrossing, os.str());
    }
  }
  const RealCurve composed = [&](double t) { return m(zfun(t)); };
  return std::abs(schwarzian_numeric(composed, x, h) - schwarzian_numeric(zfun, x, h));
}

}  // namespace heunpot
