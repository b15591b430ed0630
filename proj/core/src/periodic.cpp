#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

namespace krein {

MonodromySample monodromy(const PeriodicData& p, cplx lambda, double rtol) {
  if (!(p.period > 0)) throw DomainError("monodromy: period must be positive");
  HalfLineProblem hp{Side::Plus, p.q, Coefficient::constant(1.0), 0.0, Boundary::Neumann};
  const double target[1] = {p.period};
  SolveOptions o;
  o.rtol = rtol;
  o.atol = 1e-15;
  const FundamentalSample s = solve_cs(hp, lambda, target, o).front();
  return {lambda, s.c, s.dc, s.s, s.ds, 0.5 * (s.c + s.ds), 0.5 * (s.c - s.ds)};
}

cplx m_periodic(const PeriodicData& p, cplx lambda, Side side) {
  const MonodromySample mo = monodromy(p, lambda);
  const cplx w = std::sqrt(mo.delta_plus * mo.delta_plus - 1.0);
  const cplx r1 = mo.delta_plus + w, r2 = mo.delta_plus - w;
  const cplx big = std::abs(r1) >= std::abs(r2) ? r1 : r2;
  const cplx small = 1.0 / big;
  if (std::abs(std::abs(small) - 1.0) < 1e-12) {
    std::ostringstream os;
    os << "m_periodic: Floquet multipliers on the unit circle at lambda = " << lambda;
    throw BranchAmbiguous(os.str());
  }
  // Dirichlet-type quantity m~ = f'(0)/f(0) of the Floquet solution, from
  // whichever row of the monodromy matrix is better conditioned.
  cplx mt;
  if (side == Side::Plus) {
    const cplx d1 = mo.sT, d2 = small - mo.dsT;
    mt = std::abs(d1) >= std::abs(d2) ? (small - mo.cT) / d1 : mo.dcT / d2;
  } else {
    const cplx d1 = mo.sT, d2 = big - mo.dsT;
    mt = std::abs(d1) >= std::abs(d2) ? (mo.cT - big) / d1 : -mo.dcT / d2;
  }
  if (mt == cplx(0.0)) throw PoleEncountered("m_periodic: Neumann eigenvalue");
  return -1.0 / mt;
}

namespace {
double delta_plus_real(const PeriodicData& p, double lambda) {
  return monodromy(p, cplx(lambda, 0.0), 1e-13).delta_plus.real();
}
}  // namespace

BandEdge lowest_band_edge(const PeriodicData& p) {
  const double T = p.period;
  double qmin = p.q(0.0), qsum = 0.0;
  const int n = 2000;
  for (int k = 0; k < n; ++k) {
    const double x = (k + 0.5) * T / n;
    qmin = std::min(qmin, p.q(x));
    qsum += p.q(x);
  }
  const double qmean = qsum / n;
  const double scale = std::pow(std::numbers::pi / T, 2);
  const double step = 0.05 * scale;
  double a = qmin - 1.0;
  double fa = delta_plus_real(p, a) - 1.0;
  if (!(fa > 0)) throw RootNotBracketed("lowest_band_edge: Delta_+ <= 1 below min q");
  double b = a;
  double fb = fa;
  while (fb > 0) {
    a = b;
    fa = fb;
    b = a + step;
    if (b > qmean + 1.0 + step) throw RootNotBracketed("lowest_band_edge: no sign change up to mean q");
    fb = delta_plus_real(p, b) - 1.0;
  }
  // Illinois regula falsi.
  int side = 0;
  for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
    const double c = (a * fb - b * fa) / (fb - fa);
    const double fc = delta_plus_real(p, c) - 1.0;
    if (fc == 0.0) {
      a = b = c;
      break;
    }
    if ((fc > 0) == (fa > 0)) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  const double l0 = std::abs(fa) < std::abs(fb) ? a : b;
  const double h = 1e-5 * std::max(1.0, std::abs(l0)) * std::max(1.0, scale);
  const double d = (delta_plus_real(p, l0 + h) - delta_plus_real(p, l0 - h)) / (2 * h);
  const MonodromySample mo = monodromy(p, cplx(l0, 0.0), 1e-13);
  return {l0, d, mo.sT.real(), mo.delta_minus.real()};
}

}  // namespace krein
