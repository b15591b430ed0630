#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace krein {

enum class CoefficientKind { PiecewiseConstant, PiecewisePolynomial, PowerTimesSmooth, Callable };

// A real coefficient on the whole line (potential q or weight |r|).
// Carries the metadata the integrators need: points where the function or
// its derivatives jump, the support extent, a power-type singularity at the
// origin and an optional period.
class Coefficient {
 public:
  using Fn = std::function<double(double)>;
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  Coefficient();  // identically zero

  static Coefficient constant(double c);
  // values.size() == breaks.size() + 1; values[0] applies left of breaks[0].
  static Coefficient piecewise_constant(std::vector<double> breaks, std::vector<double> values);
  static Coefficient characteristic(double a, double b, double height = 1.0);
  // sum_k coeffs[k] * x^k on [a, b], zero elsewhere.
  static Coefficient polynomial(std::vector<double> coeffs, double a, double b);
  // scale * |x|^alpha
  static Coefficient power(double alpha, double scale = 1.0);
  // amplitude * cos(frequency * x + phase) + offset
  static Coefficient cosine(double amplitude, double frequency, double phase = 0.0,
                            double offset = 0.0);
  // coef / (1 + |x| - start)^p for |x| > start, zero otherwise.
  static Coefficient inverse_power_tail(double coef, double start, double p);
  static Coefficient callable(Fn f, std::vector<double> breaks = {}, std::string label = "callable");

  double operator()(double x) const;

  CoefficientKind kind() const;
  const std::vector<double>& breakpoints() const;
  std::optional<double> period() const;
  // Exponent a of a |x|^a factor at the origin (0 when regular).
  double singular_exponent() const;
  // The coefficient vanishes outside [support_lower(), support_upper()].
  double support_lower() const;
  double support_upper() const;
  const std::string& label() const;

  Coefficient operator+(const Coefficient& other) const;
  Coefficient operator*(double s) const;
  Coefficient shifted(double c) const;   // f + c
  Coefficient reflected() const;         // f(-x)
  Coefficient even_extension() const;    // f(|x|)
  Coefficient with_period(double T) const;

 private:
  struct Impl;
  explicit Coefficient(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace krein
