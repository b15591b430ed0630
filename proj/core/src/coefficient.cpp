#include "krein/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "krein/errors.hpp"

namespace krein {

struct Coefficient::Impl {
  Fn f;
  CoefficientKind kind = CoefficientKind::Callable;
  std::vector<double> breaks;
  std::optional<double> period;
  double alpha = 0.0;
  double lo = -kInf;
  double hi = kInf;
  std::string label;
};

namespace {

std::vector<double> merged(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

Coefficient::Coefficient(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Coefficient::Coefficient() {
  auto p = std::make_shared<Impl>();
  p->f = [](double) { return 0.0; };
  p->kind = CoefficientKind::PiecewiseConstant;
  p->lo = 0.0;
  p->hi = 0.0;
  p->label = "0";
  impl_ = std::move(p);
}

Coefficient Coefficient::constant(double c) {
  if (c == 0.0) return Coefficient();
  auto p = std::make_shared<Impl>();
  p->f = [c](double) { return c; };
  p->kind = CoefficientKind::PiecewiseConstant;
  p->label = num(c);
  return Coefficient(std::move(p));
}

Coefficient Coefficient::piecewise_constant(std::vector<double> breaks, std::vector<double> values) {
  if (values.size() != breaks.size() + 1)
    throw DomainError("piecewise_constant: need one more value than breakpoints");
  if (!std::is_sorted(breaks.begin(), breaks.end()))
    throw DomainError("piecewise_constant: breakpoints must be sorted");
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::PiecewiseConstant;
  p->breaks = breaks;
  if (!breaks.empty()) {
    if (values.front() == 0.0) p->lo = breaks.front();
    if (values.back() == 0.0) p->hi = breaks.back();
  }
  p->f = [b = std::move(breaks), v = std::move(values)](double x) {
    const auto it = std::upper_bound(b.begin(), b.end(), x);
    return v[static_cast<std::size_t>(it - b.begin())];
  };
  p->label = "piecewise_constant";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::characteristic(double a, double b, double height) {
  if (!(a < b)) throw DomainError("characteristic: need a < b");
  auto c = piecewise_constant({a, b}, {0.0, height, 0.0});
  auto p = std::make_shared<Impl>(*c.impl_);
  p->label = num(height) + "*chi[" + num(a) + "," + num(b) + "]";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::polynomial(std::vector<double> coeffs, double a, double b) {
  if (!(a < b)) throw DomainError("polynomial: need a < b");
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::PiecewisePolynomial;
  p->breaks = {a, b};
  p->lo = a;
  p->hi = b;
  p->f = [c = std::move(coeffs), a, b](double x) {
    if (x < a || x > b) return 0.0;
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  };
  p->label = "polynomial";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::power(double alpha, double scale) {
  if (!(alpha > -1.0)) throw DomainError("power: alpha > -1 required");
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::PowerTimesSmooth;
  p->alpha = alpha;
  if (alpha != 0.0) p->breaks = {0.0};
  p->f = [alpha, scale](double x) { return scale * std::pow(std::abs(x), alpha); };
  p->label = num(scale) + "*|x|^" + num(alpha);
  return Coefficient(std::move(p));
}

Coefficient Coefficient::cosine(double amplitude, double frequency, double phase, double offset) {
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::Callable;
  if (frequency != 0.0) p->period = 2.0 * std::numbers::pi / std::abs(frequency);
  p->f = [=](double x) { return amplitude * std::cos(frequency * x + phase) + offset; };
  p->label = num(amplitude) + "*cos(" + num(frequency) + "x+" + num(phase) + ")+" + num(offset);
  return Coefficient(std::move(p));
}

Coefficient Coefficient::inverse_power_tail(double coef, double start, double pw) {
  if (start < 0.0) throw DomainError("inverse_power_tail: start must be non-negative");
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::Callable;
  p->breaks = start > 0 ? std::vector<double>{-start, start} : std::vector<double>{0.0};
  p->f = [=](double x) {
    const double a = std::abs(x);
    return a > start ? coef / std::pow(1.0 + a - start, pw) : 0.0;
  };
  p->label = num(coef) + "/(1+|x|-" + num(start) + ")^" + num(pw);
  return Coefficient(std::move(p));
}

Coefficient Coefficient::callable(Fn f, std::vector<double> breaks, std::string label) {
  auto p = std::make_shared<Impl>();
  p->kind = CoefficientKind::Callable;
  std::sort(breaks.begin(), breaks.end());
  p->breaks = std::move(breaks);
  p->f = std::move(f);
  p->label = std::move(label);
  return Coefficient(std::move(p));
}

double Coefficient::operator()(double x) const { return impl_->f(x); }
CoefficientKind Coefficient::kind() const { return impl_->kind; }
const std::vector<double>& Coefficient::breakpoints() const { return impl_->breaks; }
std::optional<double> Coefficient::period() const { return impl_->period; }
double Coefficient::singular_exponent() const { return impl_->alpha; }
double Coefficient::support_lower() const { return impl_->lo; }
double Coefficient::support_upper() const { return impl_->hi; }
const std::string& Coefficient::label() const { return impl_->label; }

Coefficient Coefficient::operator+(const Coefficient& other) const {
  const bool zero_a = impl_->lo == 0.0 && impl_->hi == 0.0 && impl_->label == "0";
  const bool zero_b = other.impl_->lo == 0.0 && other.impl_->hi == 0.0 && other.impl_->label == "0";
  if (zero_a) return other;
  if (zero_b) return *this;
  auto p = std::make_shared<Impl>();
  const auto& a = *impl_;
  const auto& b = *other.impl_;
  p->f = [fa = a.f, fb = b.f](double x) { return fa(x) + fb(x); };
  p->kind = a.kind == b.kind ? a.kind : CoefficientKind::Callable;
  if (a.kind == CoefficientKind::PowerTimesSmooth || b.kind == CoefficientKind::PowerTimesSmooth)
    p->kind = CoefficientKind::PowerTimesSmooth;
  p->breaks = merged(a.breaks, b.breaks);
  if (a.period && b.period && std::abs(*a.period - *b.period) < 1e-14 * *a.period) p->period = a.period;
  p->alpha = std::min(a.alpha, b.alpha);
  p->lo = std::min(a.lo, b.lo);
  p->hi = std::max(a.hi, b.hi);
  p->label = a.label + " + " + b.label;
  return Coefficient(std::move(p));
}

Coefficient Coefficient::operator*(double s) const {
  if (s == 0.0) return Coefficient();
  auto p = std::make_shared<Impl>(*impl_);
  p->f = [f = impl_->f, s](double x) { return s * f(x); };
  p->label = num(s) + "*(" + impl_->label + ")";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::shifted(double c) const { return *this + constant(c); }

Coefficient Coefficient::reflected() const {
  auto p = std::make_shared<Impl>(*impl_);
  p->f = [f = impl_->f](double x) { return f(-x); };
  p->breaks.clear();
  for (double b : impl_->breaks) p->breaks.push_back(-b);
  std::sort(p->breaks.begin(), p->breaks.end());
  p->lo = -impl_->hi;
  p->hi = -impl_->lo;
  p->label = "(" + impl_->label + ")(-x)";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::even_extension() const {
  auto p = std::make_shared<Impl>(*impl_);
  p->f = [f = impl_->f](double x) { return f(std::abs(x)); };
  std::vector<double> br;
  for (double b : impl_->breaks)
    if (b >= 0) {
      br.push_back(b);
      br.push_back(-b);
    }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  p->breaks = std::move(br);
  const double ext = std::max(0.0, impl_->hi);
  p->lo = -ext;
  p->hi = ext;
  p->period.reset();
  p->label = "(" + impl_->label + ")(|x|)";
  return Coefficient(std::move(p));
}

Coefficient Coefficient::with_period(double T) const {
  if (!(T > 0)) throw DomainError("with_period: period must be positive");
  auto p = std::make_shared<Impl>(*impl_);
  p->period = T;
  return Coefficient(std::move(p));
}

}  // namespace krein
