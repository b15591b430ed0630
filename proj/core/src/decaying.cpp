#include <cmath>
#include <sstream>

#include "halfline_view.hpp"
#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

namespace krein {

namespace {

double tail_mass(const detail::HalfLineView& v, double X) {
  // (1 + t)|q| over [X, 1e3 X] on a logarithmic grid.
  const int n = 4000;
  const double r = std::log(1e3);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double u = (k + 0.5) / n * r;
    const double t = X * std::exp(u);
    acc += (1.0 + t) * std::abs(v.qt(t)) * t * (r / n);
  }
  return acc;
}

double integration_end(const detail::HalfLineView& v, const DecayingOptions& opt) {
  if (std::isfinite(v.q_support_end)) return v.q_support_end;
  for (double X = 10.0; X <= 1e4; X *= 2)
    if (tail_mass(v, X) < opt.tail_tolerance) return X;
  throw TailMassTooLarge("first moment of |q| not small beyond X = 1e4");
}

ode::State<6> integrate_ab(const detail::HalfLineView& v, cplx lambda, cplx k, double X,
                           double rtol) {
  const cplx I(0.0, 1.0);
  auto rhs = [&](double t, double q, double, const ode::State<6>& y) {
    const cplx e = std::exp(I * k * t);
    const cplx g = q - lambda;
    return ode::State<6>{y[1], g * y[0], y[3], g * y[2], q * e * y[2], q * e * y[0]};
  };
  ode::State<6> y{1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
  ode::Options o;
  o.rtol = rtol;
  o.atol = 1e-15;
  detail::integrate_halfline<6>(v, rhs, 0.0, X, y, o);
  return y;
}

void require_unit_weight(const HalfLineProblem& p) {
  const Coefficient& w = p.weight;
  if (w.kind() != CoefficientKind::PiecewiseConstant || w(1.0) != 1.0 || w(-1.0) != 1.0 ||
      !w.breakpoints().empty())
    throw DomainError("decaying representation requires |r| = 1");
}

}  // namespace

ABValue decaying_ab(const HalfLineProblem& p, cplx lambda, const DecayingOptions& opt) {
  require_unit_weight(p);
  if (lambda == cplx(0.0)) throw DomainError("decaying_ab: lambda = 0");
  const detail::HalfLineView v(p);
  const double X = integration_end(v, opt);
  const cplx k = sqrt_cut(lambda);
  if (k.imag() * X > 600.0) throw DomainError("decaying_ab: exponential growth overflows at this lambda");
  const ode::State<6> y = integrate_ab(v, lambda, k, X, opt.rtol);
  const cplx I(0.0, 1.0);
  ABValue r;
  r.a_tilde = 1.0 + y[4];
  r.b_tilde = y[5];
  r.a = I / (2.0 * k) * r.a_tilde;
  r.b = 0.5 + I / (2.0 * k) * r.b_tilde;
  return r;
}

cplx m_decaying_ab(const HalfLineProblem& p, cplx lambda, const DecayingOptions& opt) {
  const ABValue ab = decaying_ab(p, lambda, opt);
  const cplx den = ab.b_tilde - cplx(0.0, 1.0) * sqrt_cut(lambda);
  if (std::abs(den) <= 1e-14 * (std::abs(ab.a_tilde) + 1.0)) throw PoleEncountered("m_decaying_ab: pole");
  return ab.a_tilde / den;
}

ABConstants ab_constants(const Coefficient& q, Side side, const DecayingOptions& opt) {
  const detail::HalfLineView v(q, Coefficient::constant(1.0), side);
  const double X = integration_end(v, opt);
  const ode::State<6> y = integrate_ab(v, 0.0, 0.0, X, opt.rtol);
  return {1.0 + y[4].real(), y[5].real()};
}

}  // namespace krein
