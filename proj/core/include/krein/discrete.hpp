#pragma once

// Finite-difference model of A on [-X, X] with Dirichlet ends, used as an
// independent check of the m-coefficient machinery.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "krein/contour.hpp"
#include "krein/sl_ode.hpp"

namespace krein {

// Staggered nodes x_k = -X + (k + 1/2) h. Row k of the matrix is
// sgn_k / w_k * ((2/h^2 + q_k) u_k - (u_{k-1} + u_{k+1}) / h^2).
struct DiscretizedOperator {
  double X = 0.0, h = 0.0;
  int n = 0;
  std::vector<double> x, q, w, sgn;
  std::vector<double> diag, lower, upper;  // lower[k] = A(k, k-1), upper[k] = A(k, k+1)

  Eigen::MatrixXd dense() const;
  // W^(1/2) A W^(-1/2) with W = diag(w h): the Euclidean picture of the weighted space.
  Eigen::MatrixXd dense_weighted() const;
  std::vector<double> quadrature_weights() const;  // w_k h
};

DiscretizedOperator discretize(const FullLineProblem& fp, double X, int n);

// max |W L - L^T W| / max |W L| for L = J A.
double weighted_symmetry_error(const DiscretizedOperator& op);
double weighted_symmetry_error(const Eigen::MatrixXd& L, const Eigen::VectorXd& W);

struct SpectrumOptions {
  int dense_limit = 600;    // largest n for the dense nonsymmetric eigensolver
  bool eigenvectors = true; // compute eigvec_condition when a dense route is taken
  double imag_tol = 1e-3;   // |Im| at or below this counts as real
  std::optional<contour::Rect> search;  // nonreal search box for large indefinite problems
};

struct SpectrumResult {
  std::vector<double> real_eigs;      // ascending
  std::vector<cplx> complex_pairs;    // representatives with Im > 0, ascending real part
  double eigvec_condition = std::numeric_limits<double>::quiet_NaN();
  bool real_eigs_complete = true;
  std::string method;
};

SpectrumResult spectrum(const DiscretizedOperator& op, const SpectrumOptions& opt = {});
SpectrumResult spectrum(const Eigen::MatrixXd& A, const SpectrumOptions& opt = {});

// Nonreal eigenvalues inside `rect` (argument principle on an interface
// function built from pivot recurrences; O(n) per evaluation).
std::vector<contour::Root> nonreal_eigenvalues(const DiscretizedOperator& op, const contour::Rect& rect,
                                               const contour::Options& opt = {});

struct FunctionalOptions {
  double eps = 0.1;
  std::optional<double> eta_lo, eta_hi;  // window; default from the Gershgorin bound
  std::vector<double> breakpoints;       // default: real parts of the eigenvalues
  double rel_tol = 1e-8;
  int max_depth = 25;
};

struct FunctionalResult {
  double value = 0.0;      // eps * integral over R of |(T - eta - i eps)^-1 f|^2
  double window = 0.0;     // part inside the window
  double tail = 0.0;       // part outside the window
  double error_bar = 0.0;  // quadrature error estimates
};

// The operator overload measures f in the weighted norm sum |f_k|^2 w_k h.
FunctionalResult resolvent_functional(const DiscretizedOperator& op, const Eigen::VectorXcd& f,
                                      const FunctionalOptions& opt = {});
FunctionalResult resolvent_functional(const Eigen::MatrixXd& T, const Eigen::VectorXcd& f,
                                      const FunctionalOptions& opt = {});

// For diagonalizable T = V L V^-1 the functional equals f* K f exactly with
// K = V^-* (G o V* V) V^-1; for real l, G_jk = 2 pi i eps / (l_j - l_k + 2 i eps).
// The largest eigenvalue of K is the worst case over unit f.
Eigen::MatrixXcd functional_kernel(const Eigen::MatrixXd& T, double eps);

}  // namespace krein
