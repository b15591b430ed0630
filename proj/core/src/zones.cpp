#include <algorithm>
#include <cmath>
#include <sstream>

#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

namespace krein {

namespace {
const cplx I(0.0, 1.0);

// Branch of the square root of (l - mu_r0) prod (l - mu_l)(l - mu_r), each
// gap factor divided by norm[j] (pass 1 for the unnormalised product).
cplx band_product(double mu_r0, const std::vector<double>& mu_l, const std::vector<double>& mu_r,
                  const std::vector<double>& norm, cplx lambda) {
  const std::size_t N = mu_l.size();
  cplx val = sqrt_cut(lambda - (N == 0 ? mu_r0 : mu_r[N - 1]));
  for (std::size_t j = 0; j < N; ++j) {
    const double lo = j == 0 ? mu_r0 : mu_r[j - 1];
    val *= std::sqrt(lambda - lo) * std::sqrt(lambda - mu_l[j]) / norm[j];
  }
  return val;
}

void check_order(double mu_r0, const std::vector<double>& mu_l, const std::vector<double>& mu_r,
                 const std::vector<double>& xi, const std::vector<int>& eps) {
  const std::size_t N = xi.size();
  if (mu_l.size() != N || mu_r.size() != N || eps.size() != N)
    throw DomainError("zone data: mu_l, mu_r, xi, eps must have equal length");
  double prev = mu_r0;
  for (std::size_t j = 0; j < N; ++j) {
    if (!(mu_l[j] > prev) || !(mu_r[j] >= mu_l[j]))
      throw DomainError("zone data: need mu_r0 < mu_l1 <= mu_r1 < mu_l2 <= ...");
    if (xi[j] < mu_l[j] || xi[j] > mu_r[j]) throw DomainError("zone data: xi_j outside its gap");
    if (eps[j] != 1 && eps[j] != -1) throw DomainError("zone data: eps_j must be +1 or -1");
    prev = mu_r[j];
  }
}
// Ascending long double coefficients; the zone polynomials are assembled in
// extended precision and rounded once at the end.
using LPoly = std::vector<long double>;

LPoly lmul(const LPoly& a, const LPoly& b) {
  LPoly c(a.size() + b.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

LPoly ladd(LPoly a, const LPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0L);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

LPoly lfrom_roots(const std::vector<double>& roots) {
  LPoly p{1.0L};
  for (double r : roots) p = lmul(p, {-static_cast<long double>(r), 1.0L});
  return p;
}

// Quotient by a monic divisor; the remainder is left in `num`.
LPoly ldiv_monic(LPoly& num, const LPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0.0L};
  LPoly q(num.size() - dn, 0.0L);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + dn];
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= q[k] * den[j];
  }
  num.resize(dn);
  return q;
}

Polynomial to_poly(const LPoly& p) {
  std::vector<double> c(p.begin(), p.end());
  return Polynomial(std::move(c));
}

}  // namespace

void ZoneData::validate() const { check_order(mu_r0, mu_l, mu_r, xi, eps); }

ZonePolynomials finitezone_build(const ZoneData& z) {
  z.validate();
  const int N = z.N();
  ZonePolynomials out;
  out.P = Polynomial::from_roots(z.xi);
  std::vector<double> edges{z.mu_r0};
  edges.insert(edges.end(), z.mu_l.begin(), z.mu_l.end());
  edges.insert(edges.end(), z.mu_r.begin(), z.mu_r.end());
  out.R = Polynomial::from_roots(edges);

  // Q interpolates eps_j sqrt(-R(xi_j)); R(xi_j) is taken from the product form.
  LPoly Q{0.0L};
  for (int j = 0; j < N; ++j) {
    long double r = 1.0L;
    for (double e : edges) r *= static_cast<long double>(z.xi[j]) - e;
    LPoly basis{z.eps[j] * std::sqrt(std::max(0.0L, -r))};
    for (int k = 0; k < N; ++k)
      if (k != j) {
        const long double d = static_cast<long double>(z.xi[j]) - z.xi[k];
        basis = lmul(basis, {-static_cast<long double>(z.xi[k]) / d, 1.0L / d});
      }
    Q = ladd(Q, basis);
  }
  LPoly rem = ladd(lmul(Q, Q), lfrom_roots(edges));
  const LPoly S = ldiv_monic(rem, lfrom_roots(z.xi));
  long double rem_norm = 0.0L;
  for (long double c : rem) rem_norm = std::max(rem_norm, std::abs(c));
  out.Q = to_poly(Q);
  out.S = to_poly(S);
  const Polynomial& Qd = out.Q;
  const double rnorm = out.R.norm_inf();
  out.residual = (out.P * out.S - Qd * Qd - out.R).norm_inf() / rnorm;
  if (rem_norm > 1e-8L * rnorm || out.residual > 1e-10) {
    std::ostringstream os;
    os << "finitezone_build: P S - Q^2 = R fails (residual " << out.residual << ", remainder "
       << static_cast<double>(rem_norm / rnorm) << ")";
    throw IdentityViolated(os.str());
  }
  const auto roots = out.S.roots();
  bool real = true;
  for (auto r : roots) {
    out.tau.push_back(r.real());
    if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r))) real = false;
  }
  std::sort(out.tau.begin(), out.tau.end());
  out.interlacing = real && static_cast<int>(out.tau.size()) == N + 1;
  if (out.interlacing) {
    auto tol = [](double v) { return 1e-8 * std::max(1.0, std::abs(v)); };
    if (out.tau[0] > z.mu_r0 + tol(z.mu_r0)) out.interlacing = false;
    for (int j = 0; j < N; ++j) {
      const double t = out.tau[j + 1];
      if (t < z.mu_l[j] - tol(z.mu_l[j]) || t > z.mu_r[j] + tol(z.mu_r[j])) out.interlacing = false;
    }
  }
  return out;
}

cplx sqrt_band_product(double mu_r0, const std::vector<double>& mu_l, const std::vector<double>& mu_r,
                       cplx lambda) {
  return band_product(mu_r0, mu_l, mu_r, std::vector<double>(mu_l.size(), 1.0), lambda);
}

cplx m_finitezone(const ZoneData& z, const ZonePolynomials& poly, cplx lambda, Side side,
                  ZoneForm form) {
  const cplx sr = sqrt_band_product(z.mu_r0, z.mu_l, z.mu_r, lambda);
  const cplx P = poly.P(lambda), Q = poly.Q(lambda);
  cplx num, den;
  if (form == ZoneForm::PQ) {
    num = side == Side::Plus ? P : -P;
    den = side == Side::Plus ? Q - I * sr : Q + I * sr;
  } else {
    num = side == Side::Plus ? Q + I * sr : -(Q - I * sr);
    den = poly.S(lambda);
  }
  if (std::abs(den) <= 1e-14 * (std::abs(num) + 1.0)) throw PoleEncountered("m_finitezone: pole");
  return num / den;
}

ZoneData random_zone_data(std::mt19937_64& rng, int N, bool mu_r0_zero) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const double span = 10.0 * std::max(N, 1);
  for (;;) {
    std::vector<double> e(static_cast<std::size_t>(2 * N + 1));
    for (auto& v : e) v = span * U(rng);
    std::sort(e.begin(), e.end());
    if (mu_r0_zero) e[0] = 0.0;
    bool ok = true;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] - e[i - 1] < 0.02 * span / (2 * N + 1)) ok = false;
    if (!ok) continue;
    ZoneData z;
    z.mu_r0 = e[0];
    for (int j = 0; j < N; ++j) {
      z.mu_l.push_back(e[static_cast<std::size_t>(2 * j + 1)]);
      z.mu_r.push_back(e[static_cast<std::size_t>(2 * j + 2)]);
      z.xi.push_back(z.mu_l.back() + U(rng) * (z.mu_r.back() - z.mu_l.back()));
      z.eps.push_back(U(rng) < 0.5 ? -1 : 1);
    }
    return z;
  }
}

// ---------------------------------------------------------------- infinite zone

ZoneSequenceData ZoneSequenceData::geometric() {
  ZoneSequenceData z;
  z.mu_r0 = 0.0;
  z.mu_l = [](int j) { return double(j) * j; };
  z.mu_r = [](int j) { return double(j) * j + std::pow(4.0, -j); };
  z.xi = [](int j) { return double(j) * j + 0.5 * std::pow(4.0, -j); };
  z.eps = [](int) { return 1; };
  z.label = "geometric";
  return z;
}

SummabilityReport summability(const ZoneSequenceData& z, int N) {
  auto gap = [&](int j) { return z.mu_r(j) * (z.mu_r(j) - z.mu_l(j)); };
  auto inv = [&](int j) { return 1.0 / z.mu_l(j); };
  SummabilityReport r{};
  for (int j = 1; j <= N; ++j) {
    r.gap_sum += gap(j);
    r.inv_sum += inv(j);
  }
  double g1 = 0, g2 = 0, i1 = 0, i2 = 0;
  for (int j = N + 1; j <= 2 * N; ++j) {
    g1 += gap(j);
    i1 += inv(j);
  }
  for (int j = 2 * N + 1; j <= 4 * N; ++j) {
    g2 += gap(j);
    i2 += inv(j);
  }
  r.gap_block_ratio = g1 > 0 ? g2 / g1 : 0.0;
  r.inv_block_ratio = i1 > 0 ? i2 / i1 : 0.0;
  r.passes = std::isfinite(r.gap_sum) && std::isfinite(r.inv_sum) && r.gap_block_ratio < 0.9 &&
             r.inv_block_ratio < 0.9;
  return r;
}

InfZoneTruncation::InfZoneTruncation(const ZoneSequenceData& z, int N) : mu_r0_(z.mu_r0) {
  if (N < 1) throw DomainError("InfZoneTruncation: N >= 1 required");
  report_ = summability(z, N);
  if (!report_.passes) {
    std::ostringstream os;
    os << "summability tails do not decay (block ratios " << report_.gap_block_ratio << ", "
       << report_.inv_block_ratio << ")";
    throw SummabilityFailed(os.str());
  }
  std::vector<int> eps;
  for (int j = 1; j <= N; ++j) {
    mu_l_.push_back(z.mu_l(j));
    mu_r_.push_back(z.mu_r(j));
    xi_.push_back(z.xi(j));
    eps.push_back(z.eps(j));
  }
  check_order(mu_r0_, mu_l_, mu_r_, xi_, eps);
  for (int j = 0; j < N; ++j)
    w_.push_back(eps[static_cast<std::size_t>(j)] * std::sqrt(std::max(0.0, -f(xi_[static_cast<std::size_t>(j)]).real())));

  // Roots of h: one left of mu_r0, one in each gap.
  auto bisect = [&](double a, double b, double fa) {
    for (int it = 0; it < 200 && b - a > 4e-16 * std::max(1.0, std::abs(b)); ++it) {
      const double c = 0.5 * (a + b);
      const double fc = h_real(c);
      if (fc == 0.0) return c;
      if ((fc > 0) == (fa > 0)) {
        a = c;
        fa = fc;
      } else {
        b = c;
      }
    }
    return 0.5 * (a + b);
  };
  {
    const double f0 = h_real(mu_r0_);
    double t0 = mu_r0_;
    if (f0 != 0.0) {
      double d = 1e-3 * std::max(1.0, mu_l_[0] - mu_r0_);
      double x = mu_r0_ - d;
      while (h_real(x) > 0) {
        d *= 2;
        x = mu_r0_ - d;
        if (d > 1e12) throw RootNotBracketed("h_N: no root left of mu_r0");
      }
      t0 = bisect(x, mu_r0_, h_real(x));
    }
    tau_.push_back(t0);
  }
  for (int j = 0; j < N; ++j) {
    const double a = mu_l_[static_cast<std::size_t>(j)], b = mu_r_[static_cast<std::size_t>(j)];
    if (b - a <= 1e-13 * a) {
      tau_.push_back(a);
      continue;
    }
    const double fa = h_real(a), fb = h_real(b);
    if (fa == 0.0) {
      tau_.push_back(a);
    } else if (fb == 0.0) {
      tau_.push_back(b);
    } else if ((fa > 0) == (fb > 0)) {
      throw RootNotBracketed("h_N: no sign change in a gap");
    } else {
      tau_.push_back(bisect(a, b, fa));
    }
  }
}

double InfZoneTruncation::h_real(double x) const {
  for (std::size_t j = 0; j < xi_.size(); ++j) {
    const double width = std::max(mu_r_[j] - mu_l_[j], 1e-300);
    const double d = 1e-6 * width;
    if (std::abs(x - xi_[j]) < d) return 0.5 * (h_quotient(xi_[j] - 2 * d).real() + h_quotient(xi_[j] + 2 * d).real());
  }
  return h_quotient(x).real();
}

cplx InfZoneTruncation::g(cplx l) const {
  cplx v = 1.0;
  for (std::size_t j = 0; j < xi_.size(); ++j) v *= (xi_[j] - l) / mu_l_[j];
  return v;
}

cplx InfZoneTruncation::f(cplx l) const {
  cplx v = l - mu_r0_;
  for (std::size_t j = 0; j < xi_.size(); ++j) v *= (l - mu_l_[j]) / mu_l_[j] * ((l - mu_r_[j]) / mu_l_[j]);
  return v;
}

cplx InfZoneTruncation::sqrt_f(cplx l) const { return band_product(mu_r0_, mu_l_, mu_r_, mu_l_, l); }

cplx InfZoneTruncation::k(cplx l) const {
  cplx s = 0.0;
  for (std::size_t j = 0; j < xi_.size(); ++j) {
    if (w_[j] == 0.0) continue;
    cplx b = w_[j];
    for (std::size_t i = 0; i < xi_.size(); ++i)
      if (i != j) b *= (xi_[i] - l) / (xi_[i] - xi_[j]);
    s += b;
  }
  return s;
}

cplx InfZoneTruncation::h(cplx l) const {
  cplx v = l - tau_[0];
  for (std::size_t j = 0; j < xi_.size(); ++j) v *= (tau_[j + 1] - l) / mu_l_[j];
  return v;
}

cplx InfZoneTruncation::h_quotient(cplx l) const {
  const cplx kk = k(l);
  return (f(l) + kk * kk) / g(l);
}

double InfZoneTruncation::identity_residual(cplx l) const {
  const cplx hg = h(l) * g(l), k2 = k(l) * k(l), ff = f(l);
  const double scale = std::max({std::abs(hg), std::abs(k2), std::abs(ff)});
  return std::abs(hg - k2 - ff) / scale;
}

double InfZoneTruncation::f_prime_zero() const {
  double v = 1.0;
  for (std::size_t j = 0; j < xi_.size(); ++j)
    v *= (mu_r0_ - mu_l_[j]) / mu_l_[j] * ((mu_r0_ - mu_r_[j]) / mu_l_[j]);
  return v;
}

cplx m_infzone_truncated(const InfZoneTruncation& t, cplx lambda, Side side) {
  const cplx sf = t.sqrt_f(lambda), gg = t.g(lambda), kk = t.k(lambda);
  const cplx den = side == Side::Plus ? kk - I * sf : kk + I * sf;
  if (std::abs(den) <= 1e-14 * (std::abs(gg) + 1.0)) throw PoleEncountered("m_infzone_truncated: pole");
  return (side == Side::Plus ? gg : -gg) / den;
}

}  // namespace krein
