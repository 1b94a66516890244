#pragma once

// Coordinate transforms z(x) whose Jacobian obeys the quadratic ansatz
// (z')^2 = alpha1 z^2 + beta1 z + gamma1, the special families it contains,
// and the Schwarzian derivative {z, x} = z'''/z' - (3/2)(z''/z')^2.

#include <functional>
#include <string>
#include <variant>

#include "heunpot/error.hpp"

namespace heunpot {

enum class Branch { Plus, Minus };

inline double sign_of(Branch b) noexcept { return b == Branch::Plus ? 1.0 : -1.0; }

class QuadraticRho {
 public:
  /// Rejects the all-zero ansatz.
  static QuadraticRho make(cplx alpha1, cplx beta1, cplx gamma1);

  const cplx& alpha1() const noexcept { return alpha1_; }
  const cplx& beta1() const noexcept { return beta1_; }
  const cplx& gamma1() const noexcept { return gamma1_; }
  /// beta1^2 - 4 alpha1 gamma1
  cplx discriminant() const noexcept { return beta1_ * beta1_ - 4.0 * alpha1_ * gamma1_; }

 private:
  QuadraticRho(cplx a, cplx b, cplx c) : alpha1_(a), beta1_(b), gamma1_(c) {}
  cplx alpha1_, beta1_, gamma1_;
};

// The transform rate is called s throughout (not a) so that it cannot be
// confused with the Heun singular point.
namespace family {
struct Exponential {  // z = g exp(+-2 s x)
  cplx g{1.0};
  cplx s{1.0};
  Branch sign = Branch::Plus;
};
struct CoshSq {  // z = cosh^2(s x)
  cplx s{1.0};
};
struct SinhSq {  // z = -sinh^2(s x)
  cplx s{1.0};
};
struct CosSq {  // z = cos^2(b x)
  cplx b{1.0};
};
struct SinSq {  // z = sin^2(b x)
  cplx b{1.0};
};
struct Quadratic {  // z = c x^2
  cplx c{1.0};
};
struct Linear {  // z = +-sigma x
  cplx sigma{1.0};
  Branch sign = Branch::Plus;
};
/// Solution of the full ansatz; c1 is the amplitude of the growing exponential
/// (alpha1 != 0) or the translation constant (alpha1 == 0).
struct General {
  QuadraticRho rho;
  cplx c1;
  Branch branch = Branch::Plus;
};
}  // namespace family

using TransformFamily =
    std::variant<family::Exponential, family::CoshSq, family::SinhSq, family::CosSq, family::SinSq,
                 family::Quadratic, family::Linear, family::General>;

/// Short selector name as used on the command line, e.g. "exp+" or "cosh2".
std::string family_name(const TransformFamily& fam);

QuadraticRho induced_rho(const TransformFamily& fam);

struct ZPoint {
  cplx z;
  cplx dz;
};

cplx rho_squared(const QuadraticRho& r, cplx z);

/// -alpha1/2 - (3/8)(beta1^2 - 4 alpha1 gamma1) / rho^2(z)
cplx schwarzian_closed(const QuadraticRho& r, cplx z);

using RealCurve = std::function<cplx(double)>;

/// Initial step of the extrapolated differences in schwarzian_numeric.
double default_schwarzian_step(double x);

/// Finite-difference Schwarzian. h <= 0 selects default_schwarzian_step(x).
cplx schwarzian_numeric(const RealCurve& zfun, double x, double h = 0.0);

/// General solution z = -beta1/(2 alpha1) + (C w + D / w) / 2, w = exp(+-sqrt(alpha1) x),
/// with C = c1 and C D = (beta1^2 - 4 alpha1 gamma1) / (4 alpha1^2). Degenerate
/// alpha1 = 0 ansatzes dispatch to the parabolic or affine solution.
ZPoint solve_z_general(const QuadraticRho& r, cplx c1, Branch branch, double x);

/// Amplitude that reproduces the normalization z = -beta1/(2 alpha1) + (w^-1 disc + w)/(4 alpha1).
cplx default_general_c1(const QuadraticRho& r);

ZPoint special_case_z(const TransformFamily& fam, double x);

class Mobius {
 public:
  static Mobius make(cplx a1, cplx b1, cplx c1, cplx d1);
  static Mobius identity() { return Mobius(1.0, 0.0, 0.0, 1.0); }

  cplx det() const noexcept { return a1_ * d1_ - b1_ * c1_; }
  cplx denominator(cplx z) const noexcept { return c1_ * z + d1_; }
  cplx operator()(cplx z) const noexcept { return (a1_ * z + b1_) / (c1_ * z + d1_); }

 private:
  Mobius(cplx a, cplx b, cplx c, cplx d) : a1_(a), b1_(b), c1_(c), d1_(d) {}
  cplx a1_, b1_, c1_, d1_;
};

/// |{m o z, x} - {z, x}| with both Schwarzians taken numerically.
double mobius_invariance_check(const Mobius& m, const RealCurve& zfun, double x, double h = 0.0);

}  // namespace heunpot
