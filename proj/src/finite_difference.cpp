#include "heunpot/finite_difference.hpp"

#include <array>
#include <cmath>

namespace heunpot::fd {
namespace {

using Stencil = cplx (*)(const RealToComplex&, double, double);

cplx d1_raw(const RealToComplex& f, double x, double h) { return (f(x + h) - f(x - h)) / (2.0 * h); }

cplx d3_raw(const RealToComplex& f, double x, double h) {
  return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h);
}

// Neville tableau over h, h/1.4, h/1.4^2, ...; keeps the entry with the
// smallest difference to its neighbours and stops once round-off takes over.
cplx extrapolate(Stencil stencil, const RealToComplex& f, double x, double h) {
  constexpr int kLevels = 12;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  std::array<std::array<cplx, kLevels>, kLevels> t{};
  t[0][0] = stencil(f, x, h);
  cplx best = t[0][0];
  double best_err = INFINITY;
  for (int i = 1; i < kLevels; ++i) {
    h /= kShrink;
    t[0][i] = stencil(f, x, h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      t[j][i] = (t[j - 1][i] * fac - t[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double err = std::max(std::abs(t[j][i] - t[j - 1][i]), std::abs(t[j][i] - t[j - 1][i - 1]));
      if (err <= best_err) {
        best_err = err;
        best = t[j][i];
      }
    }
    if (std::abs(t[i][i] - t[i - 1][i - 1]) >= 2.0 * best_err) break;
  }
  return best;
}

}  // namespace

cplx d2_raw(const RealToComplex& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

cplx d1(const RealToComplex& f, double x, double h) { return extrapolate(d1_raw, f, x, h); }

cplx d2(const RealToComplex& f, double x, double h) { return extrapolate(d2_raw, f, x, h); }

cplx d3(const RealToComplex& f, double x, double h) { return extrapolate(d3_raw, f, x, h); }

}  // namespace heunpot::fd
