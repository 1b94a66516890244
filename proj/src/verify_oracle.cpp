#include "heunpot/verify_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "heunpot/finite_difference.hpp"

namespace heunpot {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kB5{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr std::array<double, 7> kB4{5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct State {
  cplx y;
  cplx yp;
};

class Rhs {
 public:
  Rhs(const RealCoeff& p, const RealCoeff& q) : p_(p), q_(q) {}

  State operator()(double t, const State& s) const {
    const cplx pv = p_(t), qv = q_(t);
    if (!std::isfinite(pv.real()) || !std::isfinite(pv.imag()) || !std::isfinite(qv.real()) ||
        !std::isfinite(qv.imag())) {
      std::ostringstream os;
      os << "coefficient not finite at t = " << t;
      throw Error(ErrorKind::NonFiniteCoefficient, os.str());
    }
    return {s.yp, -pv * s.yp - qv * s.y};
  }

 private:
  const RealCoeff& p_;
  const RealCoeff& q_;
};

struct StepOutcome {
  State next;
  double err;
};

StepOutcome dp_step(const Rhs& f, double t, const State& s, double h) {
  std::array<State, 7> k;
  for (int i = 0; i < 7; ++i) {
    State arg = s;
    for (int j = 0; j < i; ++j) {
      arg.y += h * kA[i][j] * k[j].y;
      arg.yp += h * kA[i][j] * k[j].yp;
    }
    k[i] = f(t + kC[i] * h, arg);
  }
  State hi = s;
  cplx dy = 0.0, dyp = 0.0;
  for (int i = 0; i < 7; ++i) {
    hi.y += h * kB5[i] * k[i].y;
    hi.yp += h * kB5[i] * k[i].yp;
    dy += h * (kB5[i] - kB4[i]) * k[i].y;
    dyp += h * (kB5[i] - kB4[i]) * k[i].yp;
  }
  return {hi, std::max(std::abs(dy), std::abs(dyp))};
}

void record(IntegrationResult& r, double t, const State& s) {
  r.ts.push_back(t);
  r.values.push_back(s.y);
  r.derivs.push_back(s.yp);
}

}  // namespace

IntegrationResult integrate_linear_ode2(const RealCoeff& coeff_p, const RealCoeff& coeff_q, double t0, cplx y0,
                                        cplx yp0, double t1, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  }
  const Rhs f(coeff_p, coeff_q);
  IntegrationResult out;
  State s{y0, yp0};
  record(out, t0, s);
  const double span = t1 - t0;
  if (span == 0.0) return out;
  const double dir = span > 0.0 ? 1.0 : -1.0;
  const double length = std::abs(span);
  double h = dir * std::min(length, std::max(1e-3 * length, 1e-2 * std::abs(t0)));
  double t = t0;
  constexpr double kRoundoff = 4e-16;
  for (std::size_t step = 0; step < kMaxIntegratorSteps; ++step) {
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    const StepOutcome o = dp_step(f, t, s, h);
    const double scale = std::max({1.0, std::abs(s.y), std::abs(s.yp)});
    const double allowed = std::max(tol * std::abs(h) / length, kRoundoff * scale);
    if (o.err <= allowed) {
      t = (std::abs(t1 - (t + h)) <= 1e-15 * std::max(1.0, std::abs(t1))) ? t1 : t + h;
      s = o.next;
      out.est_error += o.err;
      record(out, t, s);
      if (t == t1) return out;
    }
    const double ratio = o.err > 0.0 ? allowed / o.err : 1e10;
    const double factor = std::clamp(0.9 * std::pow(ratio, 0.2), 0.2, 5.0);
    h *= factor;
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t))) {
      std::ostringstream os;
      os << "step size underflow at t = " << t;
      throw Error(ErrorKind::StepLimit, os.str());
    }
  }
  throw Error(ErrorKind::StepLimit, "exceeded the maximum number of integrator steps");
}

IntegrationResult integrate_linear_ode2_fixed(const RealCoeff& coeff_p, const RealCoeff& coeff_q, double t0, cplx y0,
                                              cplx yp0, double t1, std::size_t steps) {
  if (steps == 0) {
    throw Error(ErrorKind::InvalidArgument, "at least one step is required");
  }
  const Rhs f(coeff_p, coeff_q);
  IntegrationResult out;
  State s{y0, yp0};
  record(out, t0, s);
  const double h = (t1 - t0) / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    const StepOutcome o = dp_step(f, t, s, h);
    s = o.next;
    out.est_error += o.err;
    record(out, i + 1 == steps ? t1 : t + h, s);
  }
  return out;
}

HeunValue heun_ode_oracle(const HeunParams& p, cplx z, double tol, double start) {
  const double r = std::abs(z);
  if (r <= start) {
    throw Error(ErrorKind::InvalidArgument, "end point must lie beyond the start radius");
  }
  const cplx dir = z / r;
  const cplx c1 = p.q() / (p.a() * p.gamma());
  // u(t) = Hl(t dir):  u_tt + dir f(t dir) u_t + dir^2 g(t dir) u = 0
  const RealCoeff cp = [&](double t) {
    const cplx w = t * dir;
    return dir * (p.gamma() / w + p.delta() / (w - 1.0) + p.epsilon() / (w - p.a()));
  };
  const RealCoeff cq = [&](double t) {
    const cplx w = t * dir;
    return dir * dir * (p.alpha() * p.beta() * w - p.q()) / (w * (w - 1.0) * (w - p.a()));
  };
  const IntegrationResult res = integrate_linear_ode2(cp, cq, start, 1.0 + c1 * start * dir, c1 * dir, r, tol);
  return {res.values.back(), res.derivs.back() / dir};
}

ResidualReport schrodinger_residual(const std::function<cplx(double)>& psi, const std::function<cplx(double)>& is_fun,
                                    std::span<const double> grid) {
  ResidualReport out;
  out.per_point.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double spacing = std::numeric_limits<double>::infinity();
    if (i > 0) spacing = std::min(spacing, std::abs(grid[i] - grid[i - 1]));
    if (i + 1 < grid.size()) spacing = std::min(spacing, std::abs(grid[i + 1] - grid[i]));
    if (!std::isfinite(spacing)) spacing = 4e-4;
    const double h = std::max(1e-4, spacing / 4.0);
    const double x = grid[i];
    const cplx coarse = fd::d2_raw(psi, x, h);
    const cplx fine = fd::d2_raw(psi, x, 0.5 * h);
    const cplx d2 = (4.0 * fine - coarse) / 3.0;
    const cplx v = is_fun(x) * psi(x);
    // The Richardson correction must be a small fraction of the quantities it
    // refines, or the stencil is not resolving psi.
    if (std::abs(fine - coarse) > 0.1 * (std::abs(d2) + std::abs(v)) + 1e-30) {
      std::ostringstream os;
      os << "stencil step " << h << " does not resolve psi at x = " << x;
      throw Error(ErrorKind::GridTooCoarse, os.str());
    }
    const double rel = std::abs(d2 + v) / (std::abs(d2) + std::abs(v) + 1e-30);
    out.per_point.push_back(rel);
    out.max_rel_residual = std::max(out.max_rel_residual, rel);
  }
  return out;
}

}  // namespace heunpot
