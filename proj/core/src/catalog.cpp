#include <cmath>
#include <numbers>

#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

namespace krein {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

cplx checked_ratio(cplx num, cplx den, const char* where) {
  if (std::abs(den) <= 1e-14 * (std::abs(num) + 1.0))
    throw PoleEncountered(std::string(where) + ": pole at this lambda");
  return num / den;
}

// Propagates a Neumann m through a constant segment of length L where
// -y'' + c y = lambda y, given the m of the remaining half-line.
cplx through_segment(cplx inner_m, cplx lambda, double c, double L, const char* where) {
  const cplx k2 = lambda - c;
  const cplx k = std::sqrt(k2);
  const cplx co = std::cos(k * L);
  const cplx si = std::abs(k) < 1e-8 ? cplx(L) : std::sin(k * L) / k;  // sin(kL)/k
  return checked_ratio(si + inner_m * co, co - inner_m * k2 * si, where);
}
}  // namespace

double power_constant(double alpha) {
  if (!(alpha > -1.0)) throw DomainError("power weight: alpha > -1 required");
  const double nu = 1.0 / (alpha + 2.0);
  return gamma(1.0 + nu) / (std::pow(nu, 2.0 * nu) * gamma(1.0 - nu));
}

cplx m_power(double alpha, cplx lambda) {
  const double c = power_constant(alpha);
  if (lambda == cplx(0.0)) throw DomainError("m_power: lambda = 0");
  const double nu = 1.0 / (alpha + 2.0);
  return c * std::polar(1.0, kPi * nu) / power_cut(lambda, nu);
}

cplx m_inverse_square_tail(cplx lambda) {
  const cplx r = sqrt_cut(lambda);
  return checked_ratio(1.0 - I * r, 1.0 - I * r - lambda, "m_inverse_square_tail");
}

cplx m_example_q0(cplx lambda) {
  return through_segment(m_inverse_square_tail(lambda), lambda, -1.0, kPi / 4, "m_example_q0");
}

cplx m_example_A1(cplx lambda) {
  return through_segment(m_inverse_square_tail(lambda), lambda, 0.0, kPi / 4, "m_example_A1");
}

Coefficient example_q0_potential() {
  return Coefficient::characteristic(-kPi / 4, kPi / 4, -1.0) +
         Coefficient::inverse_power_tail(2.0, kPi / 4, 2.0);
}

Coefficient example_A1_potential() { return Coefficient::inverse_power_tail(2.0, kPi / 4, 2.0); }

}  // namespace krein
