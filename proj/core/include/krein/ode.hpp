#pragma once

// Adaptive Dormand-Prince 5(4) integrator for small complex systems.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>

#include "krein/errors.hpp"

namespace krein::ode {

template <std::size_t N>
using State = std::array<std::complex<double>, N>;

struct Options {
  double rtol = 1e-10;
  double atol = 1e-13;
  double initial_step = 0.0;  // 0: derived from the interval length
  std::size_t max_steps = 5'000'000;
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

struct NeverStop {
  template <class S>
  bool operator()(double, const S&) const { return false; }
};

namespace detail {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace detail

// Integrates y' = f(t, y) from t0 to t1 (either direction). After every
// accepted step `stop(t, y)` is consulted; when it returns true integration
// halts and the current t is returned. Otherwise returns t1.
template <std::size_t N, class F, class Stop = NeverStop>
double integrate(F&& f, double t0, double t1, State<N>& y, const Options& opt = {},
                 Stop&& stop = Stop{}, Stats* stats = nullptr) {
  using namespace detail;
  using S = State<N>;
  const double span = t1 - t0;
  if (span == 0.0) return t1;
  const double dir = span > 0 ? 1.0 : -1.0;
  double t = t0;
  double h = opt.initial_step > 0 ? opt.initial_step : std::abs(span) * 1e-3;
  h = std::min(h, std::abs(span));
  const double hmin = 1e-14 * std::max({1.0, std::abs(t0), std::abs(t1)});

  S k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  k1 = f(t, y);
  std::size_t steps = 0;
  auto fail = [&](const char* why) {
    std::ostringstream os;
    os << why << " at x = " << t;
    throw IntegrationFailure(os.str());
  };

  while (dir * (t1 - t) > 0) {
    if (++steps > opt.max_steps) fail("step budget exhausted");
    const bool last = h >= std::abs(t1 - t);
    const double hs = last ? (t1 - t) : dir * h;

    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a21 * k1[i]);
    k2 = f(t + c2 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(t + c3 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(t + c4 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(t + c5 * hs, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const double tnew = last ? t1 : t + hs;
    k6 = f(tnew, tmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f(tnew, ynew);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < N; ++i) {
      const std::complex<double> e =
          hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(e) / sc;
      if (!std::isfinite(r)) finite = false;
      err = std::max(err, r);
    }
    if (!finite) {
      h *= 0.25;
      if (h < hmin) fail("non-finite state");
      if (stats) ++stats->rejected;
      continue;
    }
    if (err <= 1.0) {
      t = tnew;
      y = ynew;
      k1 = k7;
      if (stats) ++stats->accepted;
      const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h = std::abs(hs) * fac;
      if (stop(t, y)) return t;
    } else {
      if (stats) ++stats->rejected;
      h = std::abs(hs) * std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < hmin) fail("step size underflow");
    }
  }
  return t1;
}

}  // namespace krein::ode
