#include "krein/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "krein/errors.hpp"
#include "krein/ode.hpp"

namespace krein {

namespace {

constexpr double kPi = std::numbers::pi;
using ld = long double;
using cld = std::complex<ld>;

constexpr double kSeriesReach = 19.0;
constexpr double kAsymptoticRadius = 20.0;

}  // namespace

cplx sqrt_cut(cplx z) {
  cplx w = std::sqrt(z);
  if (w.imag() < 0.0) w = -w;
  return w;
}

cplx power_cut(cplx z, double nu) {
  if (z == cplx(0.0, 0.0)) throw DomainError("power_cut: z = 0");
  double arg = std::atan2(z.imag(), z.real());
  if (arg < 0.0) arg += 2.0 * kPi;
  return std::polar(std::pow(std::abs(z), nu), nu * arg);
}

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  const double y = x - 1.0;
  double a = p[0];
  const double t = y + 7.5;
  for (int i = 1; i < 9; ++i) a += p[i] / (y + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, y + 0.5) * std::exp(-t) * a;
}

namespace {

// J_mu(z) for real mu (non-negative integer or any non-integer), extended precision.
cld bessel_j_series(ld mu, cld z) {
  const cld zh = z / ld(2);
  const cld zh2 = -zh * zh;
  cld term = std::exp(mu * std::log(zh)) / std::tgamma(mu + 1);
  cld sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= zh2 / (ld(k) * (ld(k) + mu));
    sum += term;
    if (k > std::abs(z) && std::abs(term) < 1e-22L * std::abs(sum)) break;
  }
  return sum;
}

ld digamma_int(int m) {  // psi(m), m >= 1
  ld s = -0.57721566490153286060651209L;
  for (int j = 1; j < m; ++j) s += ld(1) / j;
  return s;
}

cld bessel_y_integer_series(int n, cld z) {
  const ld pi = std::numbers::pi_v<ld>;
  const cld zh = z / ld(2);
  cld first = 0;
  for (int k = 0; k < n; ++k) {
    ld fac = std::tgamma(ld(n - k)) / std::tgamma(ld(k + 1));
    first += fac * std::pow(zh, 2 * k - n);
  }
  const cld jn = bessel_j_series(ld(n), z);
  const cld zh2 = -zh * zh;
  cld term = std::pow(zh, n) / std::tgamma(ld(n + 1));
  cld third = (digamma_int(1) + digamma_int(n + 1)) * term;
  for (int k = 1; k < 400; ++k) {
    term *= zh2 / (ld(k) * ld(n + k));
    const cld add = (digamma_int(k + 1) + digamma_int(n + k + 1)) * term;
    third += add;
    if (k > std::abs(z) && std::abs(add) < 1e-22L * std::abs(third)) break;
  }
  return -first / pi + ld(2) / pi * std::log(zh) * jn - third / pi;
}

cplx h1_series(double mu, cplx zd) {
  const cld z(zd.real(), zd.imag());
  const ld pi = std::numbers::pi_v<ld>;
  const ld m = mu;
  const ld nearest = std::round(m);
  cld h;
  if (std::abs(m - nearest) < 1e-12L) {
    const int n = static_cast<int>(nearest);
    h = bessel_j_series(ld(n), z) + cld(0, 1) * bessel_y_integer_series(n, z);
  } else {
    const cld jm = bessel_j_series(-m, z);
    const cld jp = bessel_j_series(m, z);
    h = (jm - std::exp(cld(0, -m * pi)) * jp) / (cld(0, 1) * std::sin(m * pi));
  }
  return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

HankelValue h1_asymptotic(double mu, cplx z) {
  const cplx i(0, 1);
  const cplx pref = std::sqrt(2.0 / (kPi * z));
  const cplx e = std::exp(i * (z - mu * kPi / 2 - kPi / 4));
  const double four_mu2 = 4 * mu * mu;
  cplx s = 1.0, ds = 0.0;
  cplx zk = 1.0;     // z^-k
  cplx ik = 1.0;     // i^k
  double a = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    a *= (four_mu2 - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
    zk /= z;
    ik *= i;
    const cplx term = ik * a * zk;
    const double mag = std::abs(term);
    if (k > 3 && mag > prev) break;
    s += term;
    ds += -double(k) * term / z;
    if (mag < 1e-17 * std::abs(s) || a == 0.0) break;
    prev = mag;
  }
  return {pref * e * s, pref * e * (s * (i - 0.5 / z) + ds)};
}

HankelValue h1_series_pair(double mu, cplx z) {
  const cplx h = h1_series(mu, z);
  const cplx hp = h1_series(mu + 1.0, z);
  return {h, mu / z * h - hp};
}

// Integrates Bessel's equation along the ray through z, inward from |z| = 20.
HankelValue h1_ray(double mu, cplx z) {
  const double theta = std::arg(z);
  const cplx dir = std::polar(1.0, theta);
  const HankelValue start = h1_asymptotic(mu, kAsymptoticRadius * dir);
  ode::State<2> y{start.value, start.derivative};
  const double mu2 = mu * mu;
  auto rhs = [&](double rho, const ode::State<2>& w) {
    const cplx zz = rho * dir;
    return ode::State<2>{dir * w[1], dir * (-w[1] / zz - (1.0 - mu2 / (zz * zz)) * w[0])};
  };
  ode::Options opt;
  opt.rtol = 1e-13;
  opt.atol = 1e-300;
  ode::integrate<2>(rhs, kAsymptoticRadius, std::abs(z), y, opt);
  return {y[0], y[1]};
}

HankelValue h1_auto(double mu, cplx z) {
  const double r = std::abs(z);
  if (r >= kAsymptoticRadius) return h1_asymptotic(mu, z);
  if (r + std::max(0.0, z.imag()) <= kSeriesReach) return h1_series_pair(mu, z);
  return h1_ray(mu, z);
}

void check_domain(double nu, cplx z) {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("hankel: order must lie in (0, 1]");
  if (z == cplx(0.0, 0.0)) throw DomainError("hankel: z = 0");
  if (std::abs(std::arg(z)) > kPi - 0.01) throw DomainError("hankel: |arg z| exceeds pi - 0.01");
}

}  // namespace

HankelValue hankel_with_derivative(double nu, cplx z, HankelKind kind, HankelMethod method) {
  check_domain(nu, z);
  const bool second = kind == HankelKind::Second;
  const cplx w = second ? std::conj(z) : z;
  HankelValue v;
  switch (method) {
    case HankelMethod::Series: v = h1_series_pair(nu, w); break;
    case HankelMethod::RayIntegration: v = h1_ray(nu, w); break;
    case HankelMethod::Asymptotic: v = h1_asymptotic(nu, w); break;
    default: v = h1_auto(nu, w); break;
  }
  if (second) v = {std::conj(v.value), std::conj(v.derivative)};
  return v;
}

cplx hankel(double nu, cplx z, HankelKind kind, HankelMethod method) {
  check_domain(nu, z);
  const bool second = kind == HankelKind::Second;
  const cplx w = second ? std::conj(z) : z;
  cplx v;
  switch (method) {
    case HankelMethod::Series: v = h1_series(nu, w); break;
    case HankelMethod::RayIntegration: v = h1_ray(nu, w).value; break;
    case HankelMethod::Asymptotic: v = h1_asymptotic(nu, w).value; break;
    default: {
      const double r = std::abs(w);
      if (r < kAsymptoticRadius && r + std::max(0.0, w.imag()) <= kSeriesReach)
        v = h1_series(nu, w);
      else
        v = h1_auto(nu, w).value;
    }
  }
  return second ? std::conj(v) : v;
}

cplx hankel_leading(double nu, cplx z, HankelKind kind) {
  check_domain(nu, z);
  const double sgn = kind == HankelKind::First ? 1.0 : -1.0;
  return std::sqrt(2.0 / (kPi * z)) * std::exp(cplx(0, sgn) * (z - nu * kPi / 2 - kPi / 4));
}

}  // namespace krein
