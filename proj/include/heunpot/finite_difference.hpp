#pragma once

// Central-difference derivatives of x -> complex functions, extrapolated to
// zero step from a sequence of steps starting at h. The widest stencil reaches
// x +- h (x +- 2h for d3), so h must stay below the distance to the nearest
// singularity of f.

#include <functional>

#include "heunpot/error.hpp"

namespace heunpot::fd {

using RealToComplex = std::function<cplx(double)>;

cplx d1(const RealToComplex& f, double x, double h);
cplx d2(const RealToComplex& f, double x, double h);
/// Five-point stencil (f(x+2h) - 2f(x+h) + 2f(x-h) - f(x-2h)) / 2h^3.
cplx d3(const RealToComplex& f, double x, double h);

/// Unrefined three-point second difference, and the same at h/2; callers that
/// need to judge whether a stencil resolves the function compare the two.
cplx d2_raw(const RealToComplex& f, double x, double h);

}  // namespace heunpot::fd
