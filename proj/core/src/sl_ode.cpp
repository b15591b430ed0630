#include "krein/sl_ode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "halfline_view.hpp"
#include "krein/errors.hpp"

namespace krein {

using detail::HalfLineView;
using detail::integrate_halfline;

std::vector<FundamentalSample> solve_cs(const HalfLineProblem& p, cplx lambda,
                                        std::span<const double> x_targets, const SolveOptions& opt) {
  const HalfLineView v(p);
  std::vector<std::size_t> order(x_targets.size());
  std::iota(order.begin(), order.end(), 0);
  for (double x : x_targets)
    if (v.sgn * x < 0) throw DomainError("solve_cs: target on the wrong half-line");
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(x_targets[a]) < std::abs(x_targets[b]);
  });

  ode::Options o;
  o.rtol = opt.rtol;
  o.atol = opt.atol;
  auto rhs = [lambda](double, double q, double w, const ode::State<4>& y) {
    const cplx k = q - lambda * w;
    return ode::State<4>{y[1], k * y[0], y[3], k * y[2]};
  };
  ode::State<4> y{1.0, 0.0, 0.0, 1.0};
  double t = 0.0;
  std::vector<FundamentalSample> out(x_targets.size());
  for (std::size_t idx : order) {
    const double target = std::abs(x_targets[idx]);
    integrate_halfline<4>(v, rhs, t, target, y, o);
    t = target;
    FundamentalSample s{x_targets[idx], y[0], y[1], y[2], y[3]};
    if (v.sgn < 0) s = {x_targets[idx], y[0], -y[1], -y[2], y[3]};
    out[idx] = s;
  }
  return out;
}

namespace {

// Im of the WKB phase integral of sqrt(lambda w - q) over [0, X].
double wkb_decay(const HalfLineView& v, cplx lambda, double X) {
  const int n = 4000;
  const double h = X / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = (k + 0.5) * h;
    acc += sqrt_cut(lambda * v.wt(t) - v.qt(t)).imag();
  }
  return acc * h;
}

struct InwardResult {
  cplx u0;  // f'(0)/f(0)
  double J0;  // integral of |f|^2 w over [0, X] divided by |f(0)|^2
};

InwardResult integrate_inward(const HalfLineView& v, cplx lambda, double X, double rtol) {
  // Liouville-Green start: u = i k - (1/4) (log(lambda w - q))'.
  auto g = [&](double t) { return lambda * v.wt(t) - v.qt(t); };
  const cplx k = sqrt_cut(g(X));
  if (!(k.imag() > 1e-14 * std::abs(k)))
    throw NonDecayingTail("no decaying solution at the truncation radius (lambda on the continuous spectrum?)");
  const double dh = 1e-4 * X;
  const cplx dlog = (std::log(g(X + dh)) - std::log(g(X - dh))) / (2 * dh);
  cplx u = cplx(0, 1) * k - 0.25 * dlog;
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag()) || u.real() >= 0) u = cplx(0, 1) * k;
  if (u.real() >= 0) throw NonDecayingTail("initial Riccati value is not decaying");

  ode::Options o;
  o.rtol = rtol;
  o.atol = 1e-14;
  constexpr double kPoleSwitch = 1e6;
  constexpr double kPoleReturn = 1e3;

  double t = X;
  ode::State<2> ric{u, 0.0};
  bool linear = false;
  ode::State<3> lin{};
  auto ric_rhs = [lambda](double, double q, double w, const ode::State<2>& y) {
    return ode::State<2>{q - lambda * w - y[0] * y[0], -2.0 * y[0].real() * y[1] - w};
  };
  auto lin_rhs = [lambda](double, double q, double w, const ode::State<3>& y) {
    return ode::State<3>{y[1], (q - lambda * w) * y[0], -std::norm(y[0]) * w};
  };
  for (int guard = 0; guard < 10000 && t > 0; ++guard) {
    if (!linear) {
      t = integrate_halfline<2>(v, ric_rhs, t, 0.0, ric, o, [&](double, const ode::State<2>& y) {
        return std::abs(y[0]) > kPoleSwitch;
      });
      if (t > 0) {
        lin = {1.0, ric[0], ric[1]};
        linear = true;
      }
    } else {
      t = integrate_halfline<3>(v, lin_rhs, t, 0.0, lin, o, [&](double, const ode::State<3>& y) {
        return std::abs(y[1]) < kPoleReturn * std::abs(y[0]);
      });
      if (t > 0) {
        const double n2 = std::norm(lin[0]);
        ric = {lin[1] / lin[0], lin[2] / n2};
        linear = false;
      }
    }
  }
  if (linear) {
    if (lin[0] == cplx(0.0))
      throw PoleEncountered("lambda is a Dirichlet eigenvalue of the truncated problem");
    return {lin[1] / lin[0], lin[2].real() / std::norm(lin[0])};
  }
  return {ric[0], ric[1].real()};
}

}  // namespace

double truncation_radius(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt) {
  if (opt.X > 0) return opt.X;
  if (p.X > 0) return p.X;
  const HalfLineView v(p);
  const double mod = std::abs(lambda);
  if (mod == 0.0) throw DomainError("m_numeric: lambda = 0");
  double X = std::max(40.0, 40.0 / std::sqrt(mod));
  if (p.weight.kind() == CoefficientKind::PowerTimesSmooth) {
    const double a = p.weight.singular_exponent();
    X = std::max(X, std::pow(1e3 / mod, 1.0 / (a + 2.0)));
  }
  if (std::isfinite(v.q_support_end)) X = std::max(X, v.q_support_end + 1.0);
  while (wkb_decay(v, lambda, X) < opt.decay_target) {
    X *= 2.0;
    if (X > opt.max_X) {
      std::ostringstream os;
      os << "truncation radius exceeds " << opt.max_X << " at lambda = " << lambda;
      throw TruncationUnconverged(os.str());
    }
  }
  return X;
}

WeylSolutionSample m_numeric(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt) {
  if (lambda.imag() == 0.0 && lambda.real() >= 0.0)
    throw NonDecayingTail("m_numeric: lambda must lie off [0, inf)");
  const HalfLineView v(p);
  const double X = truncation_radius(p, lambda, opt);
  const double rtol = 0.1 * opt.tolerance;

  auto finish = [&](const InwardResult& r) {
    if (p.boundary == Boundary::Dirichlet) return std::pair<cplx, double>{r.u0, r.J0};
    if (r.u0 == cplx(0.0)) throw PoleEncountered("lambda is a Neumann eigenvalue");
    return std::pair<cplx, double>{-1.0 / r.u0, r.J0 / std::norm(r.u0)};
  };

  const auto [m1, n1] = finish(integrate_inward(v, lambda, X, rtol));
  WeylSolutionSample out{lambda, m1, n1, opt.tolerance * std::abs(m1), X};
  if (!opt.check_truncation) return out;

  const auto [m2, n2] = finish(integrate_inward(v, lambda, 2.0 * X, rtol));
  const double diff = std::abs(m2 - m1);
  if (diff > 100.0 * opt.tolerance * std::max(1.0, std::abs(m2))) {
    std::ostringstream os;
    os << "m changes by " << diff << " between X = " << X << " and 2X at lambda = " << lambda;
    throw TruncationUnconverged(os.str());
  }
  out.m = m2;
  out.psi_norm_sq = n2;
  out.error_estimate = diff + opt.tolerance * std::abs(m2);
  out.X = 2.0 * X;
  return out;
}

PsiIdentity verify_psi_identity(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt) {
  if (lambda.imag() == 0.0) throw DomainError("verify_psi_identity: lambda must be non-real");
  const WeylSolutionSample s = m_numeric(p, lambda, opt);
  return {s.psi_norm_sq, s.m.imag() / lambda.imag()};
}

S0Report s0_boundedness(const Coefficient& q, double X, Side side) {
  if (!(X > 0)) throw DomainError("s0_boundedness: X must be positive");
  const HalfLineView v(q, Coefficient::constant(1.0), side);
  ode::Options o;
  o.rtol = 1e-11;
  o.atol = 1e-14;
  auto rhs = [](double, double qq, double, const ode::State<2>& y) {
    return ode::State<2>{y[1], qq * y[0]};
  };
  ode::State<2> y{0.0, 1.0};
  integrate_halfline<2>(v, rhs, 0.0, X, y, o);
  const int n = 65;
  std::vector<double> xs(n), ss(n);
  double t = X;
  for (int k = 0; k < n; ++k) {
    const double target = X + X * k / (n - 1);
    integrate_halfline<2>(v, rhs, t, target, y, o);
    t = target;
    xs[k] = target;
    ss[k] = y[0].real();
  }
  const double xm = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double sm = std::accumulate(ss.begin(), ss.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (int k = 0; k < n; ++k) {
    sxy += (xs[k] - xm) * (ss[k] - sm);
    sxx += (xs[k] - xm) * (xs[k] - xm);
  }
  S0Report r{};
  r.slope = sxy / sxx;
  r.s_at_X = ss.front();
  r.threshold = 1e-3 * std::max(1.0, std::abs(r.s_at_X) / X);
  const double a = std::abs(r.slope);
  r.verdict = a < r.threshold ? Boundedness::Bounded
              : a > 10.0 * r.threshold ? Boundedness::Unbounded
                                      : Boundedness::Inconclusive;
  const int m = 2000;
  const double h = X / m;
  for (int k = 0; k < m; ++k) {
    const double tt = X + (k + 0.5) * h;
    r.tail_mass += (1.0 + tt) * std::abs(v.qt(tt)) * h;
  }
  r.tail_warning = r.tail_mass > 1e-3;
  return r;
}

bool limit_point_proxy(const HalfLineProblem& p, double X) {
  if (!(X > 1)) throw DomainError("limit_point_proxy: X must exceed 1");
  const HalfLineView v(p);
  const int n = 4000;
  const double h = (X - 1.0) / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 1.0 + (k + 0.5) * h;
    acc += t * t * v.wt(t) * h;
  }
  return acc >= X;
}

}  // namespace krein
