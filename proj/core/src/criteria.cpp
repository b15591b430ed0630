#include "krein/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "krein/errors.hpp"

namespace krein {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (t == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(10);
  os << z;
  return os.str();
}

// Least squares for complex y ~ sum_j c_j basis_j.
Eigen::VectorXcd lsq(const std::vector<std::vector<cplx>>& basis, const std::vector<cplx>& y) {
  const Eigen::Index n = static_cast<Eigen::Index>(y.size());
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd A(n, k);
  Eigen::VectorXcd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) A(i, j) = basis[j][i];
    b(i) = y[i];
  }
  return A.colPivHouseholderQr().solve(b);
}

}  // namespace

double ratio(const MEvaluator& Mp, const MEvaluator& Mm, cplx lambda, double C) {
  const cplx p = Mp.M(lambda), m = Mm.M(lambda);
  const cplx den = p - m;
  if (std::abs(den) <= 1e-12 * (std::abs(p) + std::abs(m)))
    throw DenominatorVanishes("M+ - M- vanishes at " + describe(lambda) +
                              " (a nonreal eigenvalue candidate)");
  return std::abs((p + m - C) / den);
}

// ---------------------------------------------------------------- regions

ScanRegion ScanRegion::near_zero(double R, double decades) {
  ScanRegion r;
  r.kind = RegionKind::NearZero;
  r.R = R;
  r.decades = decades;
  return r;
}

ScanRegion ScanRegion::near_infinity(double R, double decades) {
  ScanRegion r;
  r.kind = RegionKind::NearInfinity;
  r.R = R;
  r.decades = decades;
  return r;
}

ScanRegion ScanRegion::full(double rmin, double rmax) {
  ScanRegion r;
  r.kind = RegionKind::FullUpperHalfPlane;
  r.rmin = rmin;
  r.rmax = rmax;
  return r;
}

void ScanRegion::validate() const {
  if (kind == RegionKind::FullUpperHalfPlane) {
    if (!(rmin > 0) || !(rmax > rmin)) throw DomainError("scan region: need 0 < rmin < rmax");
  } else if (!(R > 0) || !(decades > 0)) {
    throw DomainError("scan region: need R > 0 and decades > 0");
  }
  if (radial_points < 2) throw DomainError("scan region: radial_points >= 2 required");
  if (angles.empty() && angular_points < 1) throw DomainError("scan region: empty angular grid");
  for (double a : angles)
    if (!(a > 0 && a < kPi)) throw DomainError("scan region: angles must lie in (0, pi)");
}

std::vector<double> ScanRegion::radii() const {
  double lo, hi;
  switch (kind) {
    case RegionKind::NearZero: lo = R * std::pow(10.0, -decades), hi = R; break;
    case RegionKind::NearInfinity: lo = R, hi = R * std::pow(10.0, decades); break;
    default: lo = rmin, hi = rmax;
  }
  std::vector<double> r(static_cast<std::size_t>(radial_points));
  for (int k = 0; k < radial_points; ++k)
    r[static_cast<std::size_t>(k)] = lo * std::pow(hi / lo, double(k) / (radial_points - 1));
  return r;
}

std::vector<double> ScanRegion::angle_grid() const {
  if (!angles.empty()) return angles;
  std::vector<double> a(static_cast<std::size_t>(angular_points));
  for (int k = 0; k < angular_points; ++k) a[static_cast<std::size_t>(k)] = kPi * (k + 0.5) / angular_points;
  return a;
}

std::string to_string(CriticalVerdict v) {
  switch (v) {
    case CriticalVerdict::BoundedRatio: return "BoundedRatio";
    case CriticalVerdict::GrowthDetected: return "GrowthDetected";
    default: return "Inconclusive";
  }
}

ScanGrid evaluate_grid(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                       int threads) {
  region.validate();
  ScanGrid g;
  g.region = region;
  g.radii = region.radii();
  g.angles = region.angle_grid();
  const std::size_t n = g.radii.size() * g.angles.size();
  g.lambda.resize(n);
  g.Mp.resize(n);
  g.Mm.resize(n);
  std::vector<std::string> err(n);
  for (std::size_t i = 0; i < g.radii.size(); ++i)
    for (std::size_t j = 0; j < g.angles.size(); ++j)
      g.lambda[i * g.angles.size() + j] = std::polar(g.radii[i], g.angles[j]);
  parallel_for(n, threads, [&](std::size_t k) {
    try {
      g.Mp[k] = Mp.M(g.lambda[k]);
      g.Mm[k] = Mm.M(g.lambda[k]);
      const cplx den = g.Mp[k] - g.Mm[k];
      if (std::abs(den) <= 1e-12 * (std::abs(g.Mp[k]) + std::abs(g.Mm[k])))
        err[k] = "DenominatorVanishes";
    } catch (const Error& e) {
      err[k] = e.code() + ": " + e.what();
    }
  });
  g.valid.assign(n, true);
  for (std::size_t k = 0; k < n; ++k)
    if (!err[k].empty()) {
      g.valid[k] = false;
      g.excluded.push_back({g.lambda[k], err[k]});
    }
  return g;
}

RatioScanResult summarize(const ScanGrid& g, double C, RatioForm form) {
  RatioScanResult out;
  out.shift_C = C;
  out.excluded = g.excluded;
  const std::size_t na = g.angles.size();
  std::vector<double> lr, lv;
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    double best = -1.0;
    for (std::size_t j = 0; j < na; ++j) {
      const std::size_t k = i * na + j;
      if (!g.valid[k]) continue;
      const cplx s = g.Mp[k] + g.Mm[k], d = g.Mp[k] - g.Mm[k];
      const double v = form == RatioForm::Shifted ? std::abs((s - C) / d) : std::abs(s.imag() / d);
      out.samples.push_back({g.radii[i], g.angles[j], v});
      if (v > out.sup_value || out.samples.size() == 1) {
        out.sup_value = v;
        out.argmax_lambda = g.lambda[k];
      }
      best = std::max(best, v);
    }
    if (best > 0 && std::isfinite(best)) {
      lr.push_back(std::log(g.radii[i]));
      lv.push_back(std::log(best));
    }
  }
  if (lr.size() < 3 || (lr.back() - lr.front()) < 2.0 * std::log(10.0) - 1e-9) {
    out.verdict = CriticalVerdict::Inconclusive;
    return out;
  }
  const double n = static_cast<double>(lr.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < lr.size(); ++k) mx += lr[k] / n, my += lv[k] / n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < lr.size(); ++k) {
    sxx += (lr[k] - mx) * (lr[k] - mx);
    sxy += (lr[k] - mx) * (lv[k] - my);
  }
  const double slope = sxy / sxx;
  double rss = 0;
  for (std::size_t k = 0; k < lr.size(); ++k) {
    const double r = lv[k] - my - slope * (lr[k] - mx);
    rss += r * r;
  }
  out.fit_residual = std::sqrt(rss / n);
  switch (g.region.kind) {
    case RegionKind::NearZero: out.growth_exponent = -slope; break;
    case RegionKind::NearInfinity: out.growth_exponent = slope; break;
    default: out.growth_exponent = std::abs(slope);
  }
  if (!std::isfinite(out.sup_value) || out.growth_exponent >= 0.1)
    out.verdict = CriticalVerdict::GrowthDetected;
  else if (out.growth_exponent < 0.05)
    out.verdict = CriticalVerdict::BoundedRatio;
  else
    out.verdict = CriticalVerdict::Inconclusive;
  return out;
}

RatioScanResult scan_sup(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                         double C, int threads) {
  return summarize(evaluate_grid(Mp, Mm, region, threads), C);
}

RatioScanResult optimize_shift(const ScanGrid& g, std::optional<double> seed) {
  std::vector<cplx> S, D;
  double cmax = 1.0;
  for (std::size_t k = 0; k < g.lambda.size(); ++k) {
    if (!g.valid[k]) continue;
    S.push_back(g.Mp[k] + g.Mm[k]);
    D.push_back(std::abs(g.Mp[k] - g.Mm[k]));
    cmax = std::max(cmax, 2.0 * std::abs(S.back().real()));
  }
  if (seed) cmax = std::max(cmax, 2.0 * std::abs(*seed));
  auto obj = [&](double C) {
    double v = 0.0;
    for (std::size_t k = 0; k < S.size(); ++k) v = std::max(v, std::abs(S[k] - C) / D[k].real());
    return v;
  };
  const double f_lo = obj(-cmax), f_hi = obj(cmax), f0 = obj(0.0);
  if (S.empty() || std::max({f_lo, f_hi, f0}) - std::min({f_lo, f_hi, f0}) <= 1e-9 * std::max(f0, 1e-300)) {
    RatioScanResult r = summarize(g, 0.0);
    r.flat_objective = true;
    return r;
  }
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = -cmax, b = cmax;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = obj(x1), f2 = obj(x2);
  while (b - a > 1e-12 * cmax) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = obj(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = obj(x2);
    }
  }
  double C = 0.5 * (a + b);
  if (f0 <= obj(C)) C = 0.0;  // never worse than the unshifted ratio
  return summarize(g, C);
}

RatioScanResult optimize_shift(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                               std::optional<double> seed, int threads) {
  return optimize_shift(evaluate_grid(Mp, Mm, region, threads), seed);
}

RatioScanResult necessary_ratio_scan(const MEvaluator& Mp, const MEvaluator& Mm,
                                     const ScanRegion& region, int threads) {
  return summarize(evaluate_grid(Mp, Mm, region, threads), 0.0, RatioForm::ImaginaryPart);
}

// ---------------------------------------------------------------- Stieltjes

std::string to_string(StieltjesVerdict v) {
  switch (v) {
    case StieltjesVerdict::S: return "S";
    case StieltjesVerdict::SInverse: return "S_inverse";
    default: return "Neither";
  }
}

std::string to_string(JNonnegVerdict v) { return v == JNonnegVerdict::Likely ? "Likely" : "Violated"; }

std::vector<double> NegativeGrid::lambdas() const {
  if (!(min_abs > 0) || !(max_abs > min_abs) || points < 2) throw DomainError("negative grid: invalid range");
  std::vector<double> l(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k)
    l[static_cast<std::size_t>(k)] = -max_abs * std::pow(min_abs / max_abs, double(k) / (points - 1));
  return l;
}

namespace {

StieltjesVerdict classify_values(const std::vector<double>& v, double tol) {
  bool nonneg = true, nonpos = true, increasing = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < -tol) nonneg = false;
    if (v[k] > tol) nonpos = false;
    if (k > 0 && v[k] < v[k - 1] - tol * std::max(1.0, std::abs(v[k]))) increasing = false;
  }
  if (nonneg && increasing) return StieltjesVerdict::S;
  if (nonpos && increasing) return StieltjesVerdict::SInverse;
  return StieltjesVerdict::Neither;
}

StieltjesReport sample_negative(const std::function<cplx(double)>& f, const NegativeGrid& grid,
                                double tol) {
  StieltjesReport r{StieltjesVerdict::Neither, {}, {}, {}};
  for (double l : grid.lambdas()) {
    try {
      const cplx v = f(l);
      if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v)))
        r.failures.push_back({l, "value is not real on the negative axis"});
      r.lambda.push_back(l);
      r.value.push_back(v.real());
    } catch (const Error& e) {
      r.failures.push_back({l, e.code() + ": " + e.what()});
    }
  }
  if (r.failures.empty()) r.verdict = classify_values(r.value, tol);
  return r;
}

}  // namespace

StieltjesReport stieltjes_check(const MEvaluator& m, const NegativeGrid& grid, double tol) {
  return sample_negative([&](double l) { return m.m(l); }, grid, tol);
}

JNonnegReport j_nonneg_check(const MEvaluator& mp, const MEvaluator& mm, bool even_problem,
                             const NegativeGrid& grid, double tol) {
  JNonnegReport r;
  const StieltjesReport g = sample_negative(
      [&](double l) {
        const cplx a = mp.m(l), b = mm.m(l);
        if (a == cplx(0.0) || b == cplx(0.0)) throw PoleEncountered("m vanishes on the negative axis");
        return -1.0 / a - 1.0 / b;
      },
      grid, tol);
  r.combined = g.verdict;
  if (even_problem) r.even_shortcut = stieltjes_check(mp, grid, tol).verdict;
  r.verdict = r.combined == StieltjesVerdict::SInverse ? JNonnegVerdict::Likely : JNonnegVerdict::Violated;
  return r;
}

// ---------------------------------------------------------------- decaying

DecayingSideReport classify_decaying_side(const HalfLineProblem& p, const DecayingFitOptions& opt) {
  DecayingSideReport r;
  const double end = p.side == Side::Plus ? p.q.support_upper() : -p.q.support_lower();
  const double X = opt.s0_X > 0 ? opt.s0_X : (std::isfinite(end) ? std::max(20.0, 4.0 * end) : 200.0);
  r.s0 = s0_boundedness(p.q, X, p.side);
  r.quadrature = ab_constants(p.q, p.side);

  std::vector<cplx> lam, at, bt, m;
  const int nr = 9;
  for (int i = 0; i < nr; ++i) {
    const double rad = opt.R * std::pow(10.0, -opt.decades * (1.0 - double(i) / (nr - 1)));
    for (double th : {kPi / 4, kPi / 2, 3 * kPi / 4}) {
      const cplx l = std::polar(rad, th);
      const ABValue ab = decaying_ab(p, l);
      lam.push_back(l);
      at.push_back(ab.a_tilde);
      bt.push_back(ab.b_tilde);
      m.push_back(ab.a_tilde / (ab.b_tilde - cplx(0, 1) * sqrt_cut(l)));
    }
  }
  std::vector<cplx> one(lam.size(), 1.0), sq(lam.size()), lin(lam);
  for (std::size_t k = 0; k < lam.size(); ++k) sq[k] = sqrt_cut(lam[k]);

  auto max_rel = [&](auto&& model) {
    double worst = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k)
      worst = std::max(worst, std::abs(m[k] - model(lam[k])) / std::abs(m[k]));
    return worst;
  };

  if (r.s0.verdict == Boundedness::Unbounded) {
    const Eigen::VectorXcd ca = lsq({one, sq, lin}, at), cb = lsq({one, sq, lin}, bt);
    r.a = ca(0).real();
    r.b = cb(0).real();
    r.fit_residual = max_rel([&](cplx l) { return r.a / (r.b - cplx(0, 1) * sqrt_cut(l)); });
    r.decay_case = r.fit_residual <= opt.max_residual && r.a > 0 ? DecayCase::Unbounded : DecayCase::Inconclusive;
  } else if (r.s0.verdict == Boundedness::Bounded) {
    std::vector<cplx> kk(lam.size());
    for (std::size_t k = 0; k < lam.size(); ++k) kk[k] = m[k] / (cplx(0, 1) * sq[k]);
    const Eigen::VectorXcd ck = lsq({one, sq}, kk);
    r.k = ck(0).real();
    r.fit_residual = max_rel([&](cplx l) { return cplx(0, 1) * r.k * sqrt_cut(l); });
    r.decay_case = r.fit_residual <= opt.max_residual && r.k > 0 ? DecayCase::Bounded : DecayCase::Inconclusive;
  } else {
    r.decay_case = DecayCase::Inconclusive;
  }
  return r;
}

DecayingReport classify_decaying(const HalfLineProblem& plus, const HalfLineProblem& minus,
                                 const DecayingFitOptions& opt) {
  HalfLineProblem p = plus, q = minus;
  p.side = Side::Plus;
  q.side = Side::Minus;
  DecayingReport r{classify_decaying_side(p, opt), classify_decaying_side(q, opt), std::nullopt};
  if (r.plus.decay_case == DecayCase::Unbounded && r.minus.decay_case == DecayCase::Unbounded &&
      std::abs(r.plus.b) > 1e-8 && std::abs(r.minus.b) > 1e-8)
    r.shift_candidate = r.plus.a / r.plus.b - r.minus.a / r.minus.b;
  return r;
}

// ---------------------------------------------------------------- eigenvalues

std::vector<NonrealEig> find_nonreal_eigs(const MEvaluator& Mp, const MEvaluator& Mm,
                                          const contour::Rect& rect, double D, double C,
                                          const contour::Options& opt) {
  if (!(rect.im0 > 0) || !(rect.re1 > rect.re0) || !(rect.im1 > rect.im0))
    throw DomainError("find_nonreal_eigs: rectangle must lie in the open upper half-plane");
  auto F = contour::Analytic::from_function([&](cplx l) { return Mm.M(l) - D * Mp.M(l) - C; });
  std::vector<NonrealEig> out;
  for (const auto& z : contour::find_zeros(F, rect, opt)) out.push_back({z.z, z.multiplicity, z.residual});
  return out;
}

DefinitizingPoly definitizing_poly(const std::vector<NonrealEig>& zeros) {
  Polynomial p{0.0, 1.0};
  bool simple = true;
  for (const auto& z : zeros) {
    const Polynomial quad{std::norm(z.lambda), -2.0 * z.lambda.real(), 1.0};
    for (int k = 0; k < z.multiplicity; ++k) p = p * quad;
    if (z.multiplicity != 1) simple = false;
  }
  return {p, simple};
}

// ---------------------------------------------------------------- report

ClassificationReport classify(const EvaluatorPair& pair, const ClassifyOptions& opt) {
  ClassificationReport rep;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < opt.herglotz_samples; ++k) {
    const cplx l = std::polar(std::pow(10.0, -3.0 + 6.0 * U(rng)), 0.02 + (kPi - 0.04) * U(rng));
    for (const MEvaluator* e : {&pair.plus, &pair.minus}) {
      try {
        const double v = l.imag() * e->m(l).imag();
        rep.herglotz_min = k == 0 && e == &pair.plus ? v : std::min(rep.herglotz_min, v);
        if (v < -1e-10) rep.herglotz_ok = false;
      } catch (const Error& err) {
        rep.notes.push_back("herglotz sample skipped at " + describe(l) + ": " + err.what());
      }
    }
  }

  rep.stieltjes_verdict = stieltjes_check(pair.plus).verdict;
  rep.j_nonneg_verdict = j_nonneg_check(pair.plus, pair.minus, opt.even_problem).verdict;

  auto assess = [&](const ScanRegion& region, RatioScanResult& shifted, RatioScanResult& necessary) {
    const ScanGrid g = evaluate_grid(pair.plus, pair.minus, region, opt.threads);
    shifted = optimize_shift(g, opt.shift_seed);
    necessary = summarize(g, 0.0, RatioForm::ImaginaryPart);
    if (shifted.verdict == CriticalVerdict::BoundedRatio) return CriticalVerdict::BoundedRatio;
    if (necessary.verdict == CriticalVerdict::GrowthDetected) return CriticalVerdict::GrowthDetected;
    return CriticalVerdict::Inconclusive;
  };
  ScanRegion z = ScanRegion::near_zero(opt.near_zero_R, opt.decades);
  ScanRegion i = ScanRegion::near_infinity(opt.near_infinity_R, opt.decades);
  for (ScanRegion* r : {&z, &i}) {
    r->radial_points = opt.radial_points;
    r->angular_points = opt.angular_points;
  }
  rep.critical_point_zero = assess(z, rep.zero_scan, rep.zero_necessary);
  rep.critical_point_infinity = assess(i, rep.infinity_scan, rep.infinity_necessary);

  if (opt.eig_rect) {
    rep.nonreal_eigs = find_nonreal_eigs(pair.plus, pair.minus, *opt.eig_rect);
    rep.definitizing = definitizing_poly(rep.nonreal_eigs);
    if (!rep.nonreal_eigs.empty()) rep.j_nonneg_verdict = JNonnegVerdict::Violated;
  }
  if (rep.j_nonneg_verdict != JNonnegVerdict::Likely) {
    rep.notes.push_back("J-nonnegativity not established; critical-point verdicts downgraded to Inconclusive");
    rep.critical_point_zero = CriticalVerdict::Inconclusive;
    rep.critical_point_infinity = CriticalVerdict::Inconclusive;
  }
  return rep;
}

}  // namespace krein
