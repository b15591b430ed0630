#pragma once

// Closed-form and semi-analytic Titchmarsh-Weyl m-coefficients, and the
// MEvaluator wrapper that unifies them with the numeric solver.

#include <complex>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "krein/coefficient.hpp"
#include "krein/polynomial.hpp"
#include "krein/sl_ode.hpp"
#include "krein/special.hpp"

namespace krein {

// ---------------------------------------------------------------- closed forms

// Neumann m for -y'' = lambda |x|^alpha y on R_+, alpha > -1.
cplx m_power(double alpha, cplx lambda);
// Gamma(1 + nu) / (nu^(2 nu) Gamma(1 - nu)), nu = 1 / (alpha + 2).
double power_constant(double alpha);

// Tail q = 2 / (1 + x)^2 on R_+.
cplx m_inverse_square_tail(cplx lambda);
// q0 = -chi[0, pi/4] + 2 chi(pi/4, inf) / (1 + x - pi/4)^2.
cplx m_example_q0(cplx lambda);
// Same tail without the well on [0, pi/4].
cplx m_example_A1(cplx lambda);

Coefficient example_q0_potential();  // even extension to R
Coefficient example_A1_potential();

// -------------------------------------------------------------------- periodic

struct PeriodicData {
  Coefficient q;
  double period;
};

struct MonodromySample {
  cplx lambda;
  cplx cT, dcT, sT, dsT;
  cplx delta_plus;   // (c(T) + s'(T)) / 2
  cplx delta_minus;  // (c(T) - s'(T)) / 2
};

MonodromySample monodromy(const PeriodicData& p, cplx lambda, double rtol = 1e-12);

// Half-line Neumann m on the given side. The Floquet multiplier of modulus
// below one selects the decaying branch on R_+ (and its inverse on R_-).
cplx m_periodic(const PeriodicData& p, cplx lambda, Side side);

struct BandEdge {
  double lambda0;        // lowest periodic eigenvalue (bottom of the spectrum)
  double d_delta_plus;   // derivative of Delta_+ at lambda0
  double sT;             // s(T, lambda0)
  double delta_minus;    // Delta_-(lambda0)
};
BandEdge lowest_band_edge(const PeriodicData& p);

// ------------------------------------------------------------------ finite zone

struct ZoneData {
  double mu_r0 = 0.0;
  std::vector<double> mu_l, mu_r, xi;  // gaps (mu_l[j], mu_r[j]) and xi[j] in [mu_l[j], mu_r[j]]
  std::vector<int> eps;                // +1 or -1
  int N() const { return static_cast<int>(xi.size()); }
  void validate() const;
};

struct ZonePolynomials {
  Polynomial P, Q, R, S;
  std::vector<double> tau;  // roots of S, ascending
  double residual;          // |P S - Q^2 - R|_inf / |R|_inf
  bool interlacing;         // tau_0 <= mu_r0, tau_j in [mu_l_j, mu_r_j]
};

ZonePolynomials finitezone_build(const ZoneData& z);

// Branch of sqrt(R) analytic off the bands, positive at lambda + i0 right of the last edge.
cplx sqrt_band_product(double mu_r0, const std::vector<double>& mu_l, const std::vector<double>& mu_r,
                       cplx lambda);

enum class ZoneForm { PQ, QS };  // P / (Q -+ i sqrt R)  or  (Q +- i sqrt R) / S
cplx m_finitezone(const ZoneData& z, const ZonePolynomials& poly, cplx lambda, Side side,
                  ZoneForm form = ZoneForm::PQ);

// Random admissible data with N gaps; band edges in [0, 10 N].
ZoneData random_zone_data(std::mt19937_64& rng, int N, bool mu_r0_zero = true);

// --------------------------------------------------------------- infinite zone

struct ZoneSequenceData {
  double mu_r0 = 0.0;
  std::function<double(int)> mu_l, mu_r, xi;  // j >= 1
  std::function<int(int)> eps;
  std::string label;

  // mu_l = j^2, mu_r = j^2 + 4^-j, xi at the gap midpoint, eps = +1.
  static ZoneSequenceData geometric();
};

struct SummabilityReport {
  double gap_sum;   // sum mu_r (mu_r - mu_l) up to N
  double inv_sum;   // sum 1 / mu_l up to N
  double gap_block_ratio;  // sum over (2N, 4N] divided by sum over (N, 2N]
  double inv_block_ratio;
  bool passes;
};
SummabilityReport summability(const ZoneSequenceData& z, int N);

// g_N, f_N, k_N, h_N for a fixed truncation. h is assembled from its roots,
// located by bracketing in each gap, so h g - k^2 = f is a genuine check.
class InfZoneTruncation {
 public:
  InfZoneTruncation(const ZoneSequenceData& z, int N);
  int N() const { return static_cast<int>(xi_.size()); }
  cplx g(cplx lambda) const;
  cplx f(cplx lambda) const;
  cplx sqrt_f(cplx lambda) const;
  cplx k(cplx lambda) const;
  cplx h(cplx lambda) const;         // product over the located roots
  cplx h_quotient(cplx lambda) const;  // (f + k^2) / g
  double identity_residual(cplx lambda) const;
  const std::vector<double>& tau() const { return tau_; }
  const SummabilityReport& report() const { return report_; }
  double f_prime_zero() const;  // f'(mu_r0)

 private:
  double mu_r0_;
  std::vector<double> mu_l_, mu_r_, xi_, w_;  // w_ = eps * sqrt(-f(xi))
  std::vector<double> tau_;
  SummabilityReport report_;
  double h_real(double x) const;
};

cplx m_infzone_truncated(const InfZoneTruncation& t, cplx lambda, Side side);

// --------------------------------------------------------------------- decaying

struct ABValue {
  cplx a, b;                 // m = a / b
  cplx a_tilde, b_tilde;     // 1 + int q e s,  int q e c;  m = a~ / (b~ - i sqrt(lambda))
};

struct DecayingOptions {
  double rtol = 1e-11;
  double tail_tolerance = 1e-8;  // on the integral of (1 + x)|q| beyond the cut
};

ABValue decaying_ab(const HalfLineProblem& p, cplx lambda, const DecayingOptions& opt = {});
cplx m_decaying_ab(const HalfLineProblem& p, cplx lambda, const DecayingOptions& opt = {});

struct ABConstants {
  double a;  // 1 + int q s(t, 0) dt
  double b;  // int q c(t, 0) dt
};
ABConstants ab_constants(const Coefficient& q, Side side = Side::Plus,
                         const DecayingOptions& opt = {});

// -------------------------------------------------------------------- evaluator

struct NumericKind {
  HalfLineProblem problem;
  WeylOptions options;
};
struct FreeKind {};
struct PowerWeightKind {
  double alpha;
};
struct ExampleQ0Kind {};
struct ExampleA1Kind {};
struct PeriodicKind {
  PeriodicData data;
};
struct FiniteZoneKind {
  ZoneData data;
  ZonePolynomials poly;
};
struct InfiniteZoneKind {
  std::shared_ptr<const InfZoneTruncation> truncation;
};
struct DecayingABKind {
  HalfLineProblem problem;
  DecayingOptions options;
};

using EvaluatorKind = std::variant<NumericKind, FreeKind, PowerWeightKind, ExampleQ0Kind,
                                   ExampleA1Kind, PeriodicKind, FiniteZoneKind, InfiniteZoneKind,
                                   DecayingABKind>;

class MEvaluator {
 public:
  MEvaluator(EvaluatorKind kind, Side side);

  cplx m(cplx lambda) const;  // Neumann m on this side
  cplx M(cplx lambda) const;  // +-m(+-lambda)
  Side side() const { return side_; }
  const EvaluatorKind& kind() const { return kind_; }
  std::string name() const;

 private:
  EvaluatorKind kind_;
  Side side_;
};

struct EvaluatorPair {
  MEvaluator plus;
  MEvaluator minus;
};
EvaluatorPair make_pair(const EvaluatorKind& kind);
EvaluatorPair make_pair(const EvaluatorKind& plus_kind, const EvaluatorKind& minus_kind);

}  // namespace krein
