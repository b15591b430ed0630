#pragma once

#include <complex>
#include <span>
#include <vector>

#include "krein/coefficient.hpp"
#include "krein/special.hpp"

namespace krein {

enum class Side { Plus = 1, Minus = -1 };
enum class Boundary { Neumann, Dirichlet };

inline double sign_of(Side s) { return s == Side::Plus ? 1.0 : -1.0; }

// -y'' + q y = lambda |r| y on R_+ (Plus) or R_- (Minus); coefficients are
// given in the original coordinate x on the whole line.
struct HalfLineProblem {
  Side side = Side::Plus;
  Coefficient q;
  Coefficient weight = Coefficient::constant(1.0);  // |r|
  double X = 0.0;                                    // truncation radius, 0 = automatic
  Boundary boundary = Boundary::Neumann;
};

struct FullLineProblem {
  Coefficient q;
  Coefficient weight = Coefficient::constant(1.0);
  HalfLineProblem plus() const { return {Side::Plus, q, weight, 0.0, Boundary::Neumann}; }
  HalfLineProblem minus() const { return {Side::Minus, q, weight, 0.0, Boundary::Neumann}; }
};

// c(0) = s'(0) = 1, c'(0) = s(0) = 0; derivatives are with respect to x.
struct FundamentalSample {
  double x;
  cplx c, dc, s, ds;
};

struct WeylSolutionSample {
  cplx lambda;
  cplx m;                 // Neumann m (Dirichlet m~ = -1/m when boundary is Dirichlet)
  double psi_norm_sq;     // integral of |psi|^2 |r| over [0, X]
  double error_estimate;  // |m(X) - m(2X)| plus integration tolerance
  double X;
};

struct SolveOptions {
  double rtol = 1e-10;
  double atol = 1e-13;
};

struct WeylOptions {
  double tolerance = 1e-9;      // target relative accuracy of m
  double X = 0.0;               // overrides the automatic truncation radius
  double decay_target = 18.0;   // required Im of the WKB phase at X
  double max_X = 1e7;
  bool check_truncation = true; // recompute at 2X
};

std::vector<FundamentalSample> solve_cs(const HalfLineProblem& p, cplx lambda,
                                        std::span<const double> x_targets,
                                        const SolveOptions& opt = {});

double truncation_radius(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt = {});

WeylSolutionSample m_numeric(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt = {});

struct PsiIdentity {
  double lhs;  // quadrature of |psi|^2 |r|
  double rhs;  // Im m / Im lambda
};
PsiIdentity verify_psi_identity(const HalfLineProblem& p, cplx lambda, const WeylOptions& opt = {});

enum class Boundedness { Bounded, Unbounded, Inconclusive };

struct S0Report {
  Boundedness verdict;
  double slope;       // least-squares slope of s(x, 0) on [X, 2X]
  double s_at_X;
  double threshold;   // bounded below this, unbounded above 10x this
  double tail_mass;   // integral of (1 + |x|)|q| over [X, 2X]
  bool tail_warning;
};
S0Report s0_boundedness(const Coefficient& q, double X, Side side = Side::Plus);

// True when x is not square integrable against |r| on (1, X), in the sense
// that the weighted integral of x^2 exceeds X.
bool limit_point_proxy(const HalfLineProblem& p, double X);

}  // namespace krein
