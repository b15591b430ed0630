#include "krein/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "krein/errors.hpp"

namespace krein {

DiscretizedOperator discretize(const FullLineProblem& fp, double X, int n) {
  if (n < 4) throw DomainError("discretize: n >= 4 required");
  if (!(X > 0)) throw DomainError("discretize: X must be positive");
  DiscretizedOperator op;
  op.X = X;
  op.n = n;
  op.h = 2.0 * X / n;
  const double ih2 = 1.0 / (op.h * op.h);
  const std::size_t N = static_cast<std::size_t>(n);
  op.x.resize(N);
  op.q.resize(N);
  op.w.resize(N);
  op.sgn.resize(N);
  op.diag.resize(N);
  op.lower.assign(N, 0.0);
  op.upper.assign(N, 0.0);
  for (std::size_t k = 0; k < N; ++k) {
    const double x = -X + (static_cast<double>(k) + 0.5) * op.h;
    op.x[k] = x;
    op.q[k] = fp.q(x);
    op.w[k] = fp.weight(x);
    if (!(op.w[k] > 0)) throw DomainError("discretize: weight must be positive at every node");
    op.sgn[k] = x > 0 ? 1.0 : -1.0;
    const double s = op.sgn[k] / op.w[k];
    op.diag[k] = s * (2.0 * ih2 + op.q[k]);
    if (k > 0) op.lower[k] = -s * ih2;
    if (k + 1 < N) op.upper[k] = -s * ih2;
  }
  return op;
}

Eigen::MatrixXd DiscretizedOperator::dense() const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    A(k, k) = diag[i];
    if (k > 0) A(k, k - 1) = lower[i];
    if (k + 1 < n) A(k, k + 1) = upper[i];
  }
  return A;
}

Eigen::MatrixXd DiscretizedOperator::dense_weighted() const {
  Eigen::MatrixXd A = dense();
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j)
      A(i, j) *= std::sqrt(w[static_cast<std::size_t>(i)] / w[static_cast<std::size_t>(j)]);
  return A;
}

std::vector<double> DiscretizedOperator::quadrature_weights() const {
  std::vector<double> W(w);
  for (auto& v : W) v *= h;
  return W;
}

double weighted_symmetry_error(const DiscretizedOperator& op) {
  double worst = 0.0, scale = 0.0;
  for (int k = 0; k < op.n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    const double wk = op.w[i] * op.h;
    scale = std::max(scale, std::abs(wk * op.sgn[i] * op.diag[i]));
    if (k + 1 < op.n) {
      const double a = wk * op.sgn[i] * op.upper[i];
      const double b = op.w[i + 1] * op.h * op.sgn[i + 1] * op.lower[i + 1];
      worst = std::max(worst, std::abs(a - b));
      scale = std::max({scale, std::abs(a), std::abs(b)});
    }
  }
  return worst / scale;
}

double weighted_symmetry_error(const Eigen::MatrixXd& L, const Eigen::VectorXd& W) {
  const Eigen::MatrixXd WL = W.asDiagonal() * L;
  return (WL - WL.transpose()).cwiseAbs().maxCoeff() / WL.cwiseAbs().maxCoeff();
}

// ------------------------------------------------------------------ spectra

namespace {

void sort_split(const Eigen::VectorXcd& ev, double imag_tol, SpectrumResult& r) {
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    const cplx z = ev(k);
    if (std::abs(z.imag()) <= imag_tol)
      r.real_eigs.push_back(z.real());
    else if (z.imag() > 0)
      r.complex_pairs.push_back(z);
  }
  std::sort(r.real_eigs.begin(), r.real_eigs.end());
  std::sort(r.complex_pairs.begin(), r.complex_pairs.end(),
            [](cplx a, cplx b) { return a.real() < b.real(); });
}

SpectrumResult symmetric_tridiagonal(const Eigen::VectorXd& d, const Eigen::VectorXd& e,
                                     const char* method) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("EigensolverFailure", "tridiagonal eigensolver failed");
  SpectrumResult r;
  r.method = method;
  r.real_eigs.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return r;
}

}  // namespace

SpectrumResult spectrum(const Eigen::MatrixXd& A, const SpectrumOptions& opt) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, opt.eigenvectors);
  if (es.info() != Eigen::Success) throw Error("EigensolverFailure", "dense eigensolver did not converge");
  SpectrumResult r;
  r.method = "dense";
  sort_split(es.eigenvalues(), opt.imag_tol, r);
  if (opt.eigenvectors) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    r.eigvec_condition = smin > 0 ? s(0) / smin : std::numeric_limits<double>::infinity();
  }
  return r;
}

SpectrumResult spectrum(const DiscretizedOperator& op, const SpectrumOptions& opt) {
  const int n = op.n;
  const auto N = static_cast<Eigen::Index>(n);
  const bool one_sign = std::all_of(op.sgn.begin(), op.sgn.end(), [&](double s) { return s == op.sgn[0]; });
  const double ih2 = 1.0 / (op.h * op.h);

  SpectrumResult r;
  bool have = false;
  if (one_sign) {
    // W^(-1/2) K W^(-1/2) up to the common sign.
    Eigen::VectorXd d(N), e(std::max<Eigen::Index>(N - 1, 0));
    for (int k = 0; k < n; ++k) {
      d(k) = op.diag[static_cast<std::size_t>(k)];
      if (k + 1 < n)
        e(k) = -op.sgn[0] * ih2 / std::sqrt(op.w[static_cast<std::size_t>(k)] * op.w[static_cast<std::size_t>(k) + 1]);
    }
    r = symmetric_tridiagonal(d, e, "symmetric");
    have = true;
  } else {
    // K = G G^T; then G^T J W^-1 G is symmetric tridiagonal and similar to A.
    std::vector<double> g(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n), 0.0);
    bool definite = true;
    for (int k = 0; k < n && definite; ++k) {
      const std::size_t i = static_cast<std::size_t>(k);
      double piv = 2.0 * ih2 + op.q[i];
      if (k > 0) {
        s[i] = -ih2 / g[i - 1];
        piv -= s[i] * s[i];
      }
      if (!(piv > 0)) definite = false;
      else g[i] = std::sqrt(piv);
    }
    if (definite) {
      Eigen::VectorXd d(N), e(std::max<Eigen::Index>(N - 1, 0));
      for (int k = 0; k < n; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        const double dk = op.sgn[i] / op.w[i];
        d(k) = g[i] * g[i] * dk;
        if (k + 1 < n) {
          const double dn = op.sgn[i + 1] / op.w[i + 1];
          d(k) += s[i + 1] * s[i + 1] * dn;
          e(k) = s[i + 1] * g[i + 1] * dn;
        }
      }
      r = symmetric_tridiagonal(d, e, "definite");
      have = true;
    }
  }
  if (have) {
    if (opt.eigenvectors && n <= opt.dense_limit)
      r.eigvec_condition = spectrum(op.dense_weighted(), opt).eigvec_condition;
    return r;
  }
  if (n <= opt.dense_limit) {
    SpectrumOptions o = opt;
    SpectrumResult d = spectrum(op.dense_weighted(), o);
    d.method = "dense";
    return d;
  }
  const contour::Rect rect = opt.search.value_or(contour::Rect{-50.0, 50.0, std::max(opt.imag_tol, 1e-2), 50.0});
  r.method = "contour";
  r.real_eigs_complete = false;
  for (const auto& z : nonreal_eigenvalues(op, rect)) r.complex_pairs.push_back(z.z);
  return r;
}

std::vector<contour::Root> nonreal_eigenvalues(const DiscretizedOperator& op, const contour::Rect& rect,
                                               const contour::Options& opt) {
  // With a single sign change at index p the blocks on either side have real
  // spectra, and det(A - l) = det(A1 - l) det(A2 - l) (1 - c / (r s)) where r
  // and s are the last forward and first backward pivots of the blocks. The
  // nonreal eigenvalues are the zeros of G = r s - c, analytic off the axis.
  const std::size_t n = static_cast<std::size_t>(op.n);
  std::size_t p = 0;
  while (p < n && op.sgn[p] < 0) ++p;
  for (std::size_t k = p; k < n; ++k)
    if (op.sgn[k] < 0) throw DomainError("nonreal_eigenvalues: weight must change sign exactly once");
  if (p == 0 || p == n) return {};  // definite: real spectrum
  const double c = op.lower[p] * op.upper[p - 1];

  auto pivots = [&op, p, n](cplx z, cplx& r, cplx& dr, cplx& s, cplx& ds) {
    r = op.diag[0] - z;
    dr = -1.0;
    for (std::size_t k = 1; k < p; ++k) {
      const double ck = op.lower[k] * op.upper[k - 1];
      const cplx rn = op.diag[k] - z - ck / r;
      dr = -1.0 + ck * dr / (r * r);
      r = rn;
    }
    s = op.diag[n - 1] - z;
    ds = -1.0;
    for (std::size_t k = n - 1; k-- > p;) {
      const double ck = op.upper[k] * op.lower[k + 1];
      const cplx sn = op.diag[k] - z - ck / s;
      ds = -1.0 + ck * ds / (s * s);
      s = sn;
    }
  };
  contour::Analytic F;
  F.factors = [pivots, c](cplx z, std::vector<cplx>& out) {
    cplx r, dr, s, ds;
    pivots(z, r, dr, s, ds);
    out.assign(1, r * s - c);
  };
  F.log_derivative = [pivots, c](cplx z) {
    cplx r, dr, s, ds;
    pivots(z, r, dr, s, ds);
    return (dr * s + r * ds) / (r * s - c);
  };
  F.zero_tolerance = 0.0;
  return contour::find_zeros(F, rect, opt);
}

// ---------------------------------------------------------------- functional

namespace {

// Tridiagonal solve with partial pivoting; overwrites b with the solution.
void gtsv(std::vector<cplx> dl, std::vector<cplx> d, std::vector<cplx> du, std::vector<cplx>& b) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == cplx(0.0)) throw Error("SolverBreakdown", "singular shifted system");
      const cplx f = dl[i] / d[i];
      d[i + 1] -= f * du[i];
      b[i + 1] -= f * b[i];
      dl[i] = 0.0;
    } else {
      const cplx f = d[i] / dl[i];
      d[i] = dl[i];
      const cplx t = d[i + 1];
      d[i + 1] = du[i] - f * t;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -f * dl[i];
      }
      du[i] = t;
      const cplx tb = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tb - f * b[i + 1];
    }
  }
  if (d[n - 1] == cplx(0.0)) throw Error("SolverBreakdown", "singular shifted system");
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - dl[i] * b[i + 2]) / d[i];
}

template <class G>
FunctionalResult integrate_functional(G&& g, double eps, double lo, double hi,
                                      std::vector<double> breaks, const FunctionalOptions& opt) {
  using boost::math::quadrature::gauss_kronrod;
  std::vector<double> nodes{lo};
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks)
    if (b > nodes.back() + 1e-3 * eps && b < hi) nodes.push_back(b);
  nodes.push_back(hi);
  FunctionalResult r;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    double err = 0.0;
    r.window += gauss_kronrod<double, 31>::integrate(g, nodes[k], nodes[k + 1],
                                                     static_cast<unsigned>(opt.max_depth), opt.rel_tol, &err);
    r.error_bar += err;
  }
  double e1 = 0.0, e2 = 0.0;
  r.tail = gauss_kronrod<double, 31>::integrate(g, hi, std::numeric_limits<double>::infinity(),
                                                static_cast<unsigned>(opt.max_depth), opt.rel_tol, &e1) +
           gauss_kronrod<double, 31>::integrate(g, -std::numeric_limits<double>::infinity(), lo,
                                                static_cast<unsigned>(opt.max_depth), opt.rel_tol, &e2);
  r.error_bar += e1 + e2;
  r.window *= eps;
  r.tail *= eps;
  r.error_bar *= eps;
  r.value = r.window + r.tail;
  return r;
}

void check_eps(double eps) {
  if (!(eps > 0)) throw DomainError("resolvent_functional: eps must be positive");
}

}  // namespace

FunctionalResult resolvent_functional(const DiscretizedOperator& op, const Eigen::VectorXcd& f,
                                      const FunctionalOptions& opt) {
  check_eps(opt.eps);
  const std::size_t n = static_cast<std::size_t>(op.n);
  if (static_cast<std::size_t>(f.size()) != n) throw DomainError("resolvent_functional: size mismatch");
  double gersh = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    gersh = std::max(gersh, std::abs(op.diag[k]) + std::abs(op.lower[k]) + std::abs(op.upper[k]));
  const double lo = opt.eta_lo.value_or(-gersh - 10 * opt.eps);
  const double hi = opt.eta_hi.value_or(gersh + 10 * opt.eps);
  std::vector<double> breaks = opt.breakpoints;
  if (breaks.empty()) {
    SpectrumOptions so;
    so.eigenvectors = false;
    const SpectrumResult s = spectrum(op, so);
    breaks = s.real_eigs;
    for (cplx z : s.complex_pairs) breaks.push_back(z.real());
  }
  const std::vector<double> W = op.quadrature_weights();
  std::vector<cplx> dl(n > 0 ? n - 1 : 0), du(dl.size()), rhs(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    dl[k] = op.lower[k + 1];
    du[k] = op.upper[k];
  }
  auto g = [&](double eta) {
    const cplx z(eta, opt.eps);
    std::vector<cplx> d(n);
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = op.diag[k] - z;
      rhs[k] = f(static_cast<Eigen::Index>(k));
    }
    gtsv(dl, d, du, rhs);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(rhs[k]) * W[k];
    return s;
  };
  return integrate_functional(g, opt.eps, lo, hi, breaks, opt);
}

FunctionalResult resolvent_functional(const Eigen::MatrixXd& T, const Eigen::VectorXcd& f,
                                      const FunctionalOptions& opt) {
  check_eps(opt.eps);
  if (T.rows() != T.cols() || T.rows() != f.size()) throw DomainError("resolvent_functional: size mismatch");
  double gersh = 0.0;
  for (Eigen::Index i = 0; i < T.rows(); ++i) gersh = std::max(gersh, T.row(i).cwiseAbs().sum());
  const double lo = opt.eta_lo.value_or(-gersh - 10 * opt.eps);
  const double hi = opt.eta_hi.value_or(gersh + 10 * opt.eps);
  std::vector<double> breaks = opt.breakpoints;
  if (breaks.empty()) {
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(T, false).eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) breaks.push_back(ev(k).real());
  }
  const Eigen::MatrixXcd Tc = T.cast<cplx>();
  auto g = [&](double eta) {
    Eigen::MatrixXcd S = Tc;
    S.diagonal().array() -= cplx(eta, opt.eps);
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(S).solve(f).squaredNorm();
  };
  return integrate_functional(g, opt.eps, lo, hi, breaks, opt);
}

Eigen::MatrixXcd functional_kernel(const Eigen::MatrixXd& T, double eps) {
  check_eps(eps);
  Eigen::EigenSolver<Eigen::MatrixXd> es(T, true);
  if (es.info() != Eigen::Success) throw Error("EigensolverFailure", "dense eigensolver did not converge");
  const Eigen::VectorXcd ev = es.eigenvalues();
  const Eigen::MatrixXcd V = es.eigenvectors();
  const Eigen::MatrixXcd M = V.adjoint() * V;
  const Eigen::Index n = ev.size();
  // eps * integral of conj(a_j) a_k with a_j = 1 / (l_j - eta - i eps), by residues:
  // the poles are conj(l_j) + i eps and l_k - i eps.
  Eigen::MatrixXcd G(n, n);
  const cplx c(0.0, 2.0 * std::numbers::pi * eps);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const cplx p1 = std::conj(ev(j)) + cplx(0.0, eps), p2 = ev(k) - cplx(0.0, eps);
      if (p1.imag() > 0 && p2.imag() < 0)
        G(j, k) = c / (p1 - p2);
      else if (p2.imag() > 0 && p1.imag() < 0)
        G(j, k) = c / (p2 - p1);
      else
        G(j, k) = 0.0;
    }
  const Eigen::MatrixXcd Vinv = V.partialPivLu().inverse();
  Eigen::MatrixXcd K = Vinv.adjoint() * G.cwiseProduct(M) * Vinv;
  return 0.5 * (K + K.adjoint());
}

}  // namespace krein
