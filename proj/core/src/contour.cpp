#include "krein/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "krein/errors.hpp"

namespace krein::contour {

double Rect::diameter() const { return std::hypot(re1 - re0, im1 - im0); }

bool Rect::contains(cplx z, double pad) const {
  return z.real() >= re0 - pad && z.real() <= re1 + pad && z.imag() >= im0 - pad &&
         z.imag() <= im1 + pad;
}

Analytic Analytic::from_function(std::function<cplx(cplx)> f) {
  Analytic a;
  a.factors = [f](cplx z, std::vector<cplx>& out) {
    out.assign(1, f(z));
  };
  a.log_derivative = [f](cplx z) {
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const cplx fz = f(z);
    return (f(z + h) - f(z - h)) / (2.0 * h * fz);
  };
  a.zero_tolerance = 1e-12;
  return a;
}

namespace {

struct Sample {
  cplx z;
  std::vector<cplx> fac;
};

Sample sample(const Analytic& f, cplx z) {
  Sample s{z, {}};
  f.factors(z, s.fac);
  for (auto v : s.fac)
    if (!(std::abs(v) > f.zero_tolerance) || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "zero (or non-finite value) on the contour at " << z;
      throw ZeroOnContour(os.str());
    }
  return s;
}

// Phase increment between samples, or NaN if some factor turns too fast.
double phase_step(const Sample& a, const Sample& b, double max_step) {
  double total = 0.0;
  for (std::size_t k = 0; k < a.fac.size(); ++k) {
    const double d = std::arg(b.fac[k] / a.fac[k]);
    if (std::abs(d) > max_step) return std::numeric_limits<double>::quiet_NaN();
    total += d;
  }
  return total;
}

double edge_phase(const Analytic& f, const Sample& a, const Sample& b, const Options& opt,
                  int& budget, int depth = 0) {
  const double d = phase_step(a, b, opt.max_phase_step);
  if (!std::isnan(d)) {
    // Confirm with the midpoint so that a full turn between samples is not missed.
    if (depth > 2 || std::abs(d) < 0.05) return d;
  }
  if (--budget < 0 || depth > 60) throw ZeroOnContour("contour resolution exhausted near " + [&] {
    std::ostringstream os;
    os << a.z;
    return os.str();
  }());
  const Sample m = sample(f, 0.5 * (a.z + b.z));
  return edge_phase(f, a, m, opt, budget, depth + 1) + edge_phase(f, m, b, opt, budget, depth + 1);
}

}  // namespace

int winding_number(const Analytic& f, const Rect& r, const Options& opt) {
  const cplx corners[4] = {{r.re0, r.im0}, {r.re1, r.im0}, {r.re1, r.im1}, {r.re0, r.im1}};
  int budget = opt.max_contour_points;
  double total = 0.0;
  const int per_edge = 8;
  Sample prev = sample(f, corners[0]);
  for (int e = 0; e < 4; ++e) {
    const cplx a = corners[e], b = corners[(e + 1) % 4];
    for (int k = 1; k <= per_edge; ++k) {
      const Sample next = sample(f, a + (b - a) * (double(k) / per_edge));
      total += edge_phase(f, prev, next, opt, budget);
      prev = next;
    }
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.1) throw ZeroOnContour("winding number is not an integer");
  return static_cast<int>(rounded);
}

namespace {

bool newton(const Analytic& f, cplx& z, int mult, const Rect& box, const Options& opt,
            double& residual) {
  if (!f.log_derivative) return false;
  const double pad = 0.25 * box.diameter();
  auto accept = [&] { return box.contains(z, 1e-9 * box.diameter()); };
  for (int it = 0; it < opt.newton_max_iter; ++it) {
    const cplx ld = f.log_derivative(z);
    if (!std::isfinite(ld.real()) || ld == cplx(0.0)) return false;
    const cplx step = double(mult) / ld;
    z -= step;
    residual = std::abs(step);
    if (!box.contains(z, pad)) return false;
    if (residual <= opt.newton_tol * std::max(1.0, std::abs(z))) return accept();
  }
  return residual <= 1e3 * opt.newton_tol * std::max(1.0, std::abs(z)) && accept();
}

void refine(const Analytic& f, const Rect& box, int count, double min_size, const Options& opt,
            std::vector<Root>& out, int depth) {
  if (count <= 0) return;
  const bool small = box.diameter() <= min_size || depth > 40;
  if (count == 1 || small) {
    cplx z = box.center();
    double res = 0.0;
    if (newton(f, z, count, box, opt, res) && (count == 1 || small)) {
      out.push_back({z, count, res});
      return;
    }
    if (small) {
      out.push_back({box.center(), count, box.diameter()});
      return;
    }
  }
  // Quadrisect; the split point is nudged if a zero sits on an inner edge.
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    const double t = 0.5 + 0.037 * attempt;
    const double xm = box.re0 + t * (box.re1 - box.re0);
    const double ym = box.im0 + (1.0 - t) * (box.im1 - box.im0);
    const Rect kids[4] = {{box.re0, xm, box.im0, ym}, {xm, box.re1, box.im0, ym},
                          {box.re0, xm, ym, box.im1}, {xm, box.re1, ym, box.im1}};
    int counts[4];
    try {
      int sum = 0;
      for (int k = 0; k < 4; ++k) sum += counts[k] = winding_number(f, kids[k], opt);
      if (sum != count) continue;
    } catch (const ZeroOnContour&) {
      continue;
    }
    for (int k = 0; k < 4; ++k) refine(f, kids[k], counts[k], min_size, opt, out, depth + 1);
    return;
  }
  throw ZeroOnContour("quadrisection could not isolate the zeros");
}

}  // namespace

std::vector<Root> find_zeros(const Analytic& f, Rect r, const Options& opt) {
  const double scale = r.diameter();
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    int count;
    try {
      count = winding_number(f, r, opt);
    } catch (const ZeroOnContour&) {
      if (attempt == opt.retries) throw;
      const double d = 1e-3 * scale * (attempt + 1);
      r = {r.re0 - d, r.re1 + 0.7 * d, r.im0 + 0.3 * d * (r.im0 > 0 ? 1 : -1), r.im1 + 0.9 * d};
      continue;
    }
    std::vector<Root> out;
    refine(f, r, count, opt.isolation_size * scale, opt, out, 0);
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
      return a.z.real() < b.z.real() || (a.z.real() == b.z.real() && a.z.imag() < b.z.imag());
    });
    return out;
  }
  return {};
}

}  // namespace krein::contour
