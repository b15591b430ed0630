#pragma once

// Half-line coefficients reflected onto t = |x| >= 0, plus segment-wise
// integration that restarts at every breakpoint and, for weights with a
// |x|^alpha singularity (alpha < 0), integrates in s = t^(alpha + 1).

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "krein/coefficient.hpp"
#include "krein/ode.hpp"
#include "krein/sl_ode.hpp"

namespace krein::detail {

struct HalfLineView {
  Coefficient q, w;
  double sgn = 1.0;
  double e = 1.0;
  std::vector<double> breaks;  // in t, strictly positive, sorted
  double q_support_end = Coefficient::kInf;

  HalfLineView(const Coefficient& q_, const Coefficient& w_, Side side) : q(q_), w(w_) {
    sgn = sign_of(side);
    const double a = w.singular_exponent();
    if (a < 0.0) e = 1.0 + a;
    for (const Coefficient* c : {&q, &w})
      for (double b : c->breakpoints()) {
        const double t = sgn * b;
        if (t > 0) breaks.push_back(t);
      }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    q_support_end = side == Side::Plus ? std::max(0.0, q.support_upper())
                                       : std::max(0.0, -q.support_lower());
  }
  explicit HalfLineView(const HalfLineProblem& p) : HalfLineView(p.q, p.weight, p.side) {}

  double qt(double t) const { return q(sgn * t); }
  double wt(double t) const { return w(sgn * t); }
  double s_of_t(double t) const { return e == 1.0 ? t : std::pow(t, e); }
  double t_of_s(double s) const { return e == 1.0 ? s : std::pow(s, 1.0 / e); }
  double dt_ds(double s) const { return e == 1.0 ? 1.0 : std::pow(s, 1.0 / e - 1.0) / e; }

  // Breakpoints strictly between a and b, ordered from a towards b, with the ends.
  std::vector<double> nodes(double a, double b) const {
    std::vector<double> n{a};
    const double lo = std::min(a, b), hi = std::max(a, b);
    std::vector<double> inner;
    for (double t : breaks)
      if (t > lo && t < hi) inner.push_back(t);
    if (a > b) std::reverse(inner.begin(), inner.end());
    n.insert(n.end(), inner.begin(), inner.end());
    n.push_back(b);
    return n;
  }
};

// Integrates dy/dt = F(t, q(t), w(t), y) from t0 to t1 across breakpoints.
// `stop(t, y)` may end the integration early; the stopping t is returned.
template <std::size_t N, class F, class Stop = ode::NeverStop>
double integrate_halfline(const HalfLineView& v, F&& rhs, double t0, double t1, ode::State<N>& y,
                          const ode::Options& opt, Stop&& stop = Stop{}) {
  const std::vector<double> nd = v.nodes(t0, t1);
  for (std::size_t k = 0; k + 1 < nd.size(); ++k) {
    const double ta = std::min(nd[k], nd[k + 1]);
    const double tb = std::max(nd[k], nd[k + 1]);
    if (tb - ta <= 0) continue;
    const double nudge = 1e-13 * std::max(1.0, tb);
    // At a weight singularity w and the Jacobian are evaluated at the same
    // point so that their product stays exact.
    const double lo = (ta == 0.0 && v.e != 1.0) ? std::numeric_limits<double>::min()
                                                 : ta + std::min(nudge, 0.25 * (tb - ta));
    const double hi = tb - std::min(nudge, 0.25 * (tb - ta));
    auto f = [&](double s, const ode::State<N>& st) {
      const double t = std::clamp(v.t_of_s(s), lo, hi);
      const double jac = v.dt_ds(v.s_of_t(t));
      ode::State<N> d = rhs(t, v.qt(t), v.wt(t), st);
      if (jac != 1.0)
        for (auto& x : d) x *= jac;
      return d;
    };
    const double s0 = v.s_of_t(nd[k]);
    const double s1 = v.s_of_t(nd[k + 1]);
    const double reached = ode::integrate<N>(
        f, s0, s1, y, opt, [&](double s, const ode::State<N>& st) { return stop(v.t_of_s(s), st); });
    if (reached != s1) return v.t_of_s(reached);
  }
  return t1;
}

}  // namespace krein::detail
