#pragma once

// Detectors for the regularity of the critical points 0 and infinity, the
// Krein-Stieltjes class tests, decaying-potential classification and
// nonreal-eigenvalue location.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "krein/contour.hpp"
#include "krein/mcatalog.hpp"
#include "krein/polynomial.hpp"

namespace krein {

// |(M+ + M- - C) / (M+ - M-)|. Throws DenominatorVanishes.
double ratio(const MEvaluator& Mp, const MEvaluator& Mm, cplx lambda, double C);

enum class RegionKind { NearZero, NearInfinity, FullUpperHalfPlane };

// Log-radial times uniform-angular grid in C+. NearZero covers
// [R 10^-decades, R], NearInfinity [R, R 10^decades].
struct ScanRegion {
  RegionKind kind = RegionKind::NearZero;
  double R = 0.1;
  double rmin = 0.0, rmax = 0.0;  // FullUpperHalfPlane only
  double decades = 3.0;
  int radial_points = 21;
  int angular_points = 9;
  std::vector<double> angles;  // overrides the uniform angular grid, each in (0, pi)

  static ScanRegion near_zero(double R, double decades = 3.0);
  static ScanRegion near_infinity(double R, double decades = 3.0);
  static ScanRegion full(double rmin, double rmax);
  void validate() const;
  std::vector<double> radii() const;
  std::vector<double> angle_grid() const;
};

enum class CriticalVerdict { BoundedRatio, GrowthDetected, Inconclusive };
std::string to_string(CriticalVerdict v);

struct ScanSample {
  double abs_lambda, arg_lambda, ratio;
};

struct ExcludedPoint {
  cplx lambda;
  std::string reason;
};

struct RatioScanResult {
  double sup_value = 0.0;
  cplx argmax_lambda;
  double shift_C = 0.0;
  double growth_exponent = 0.0;
  double fit_residual = 0.0;
  CriticalVerdict verdict = CriticalVerdict::Inconclusive;
  bool flat_objective = false;
  std::vector<ScanSample> samples;
  std::vector<ExcludedPoint> excluded;
};

// M+ and M- cached on a region grid, so that many shifts cost nothing.
struct ScanGrid {
  ScanRegion region;
  std::vector<double> radii, angles;
  std::vector<cplx> lambda, Mp, Mm;  // radius-major
  std::vector<bool> valid;
  std::vector<ExcludedPoint> excluded;
};

ScanGrid evaluate_grid(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                       int threads = 1);

enum class RatioForm { Shifted, ImaginaryPart };
RatioScanResult summarize(const ScanGrid& grid, double C, RatioForm form = RatioForm::Shifted);

RatioScanResult scan_sup(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                         double C, int threads = 1);

// Minimax over C by golden section; `seed` extends the search bracket.
RatioScanResult optimize_shift(const ScanGrid& grid, std::optional<double> seed = std::nullopt);
RatioScanResult optimize_shift(const MEvaluator& Mp, const MEvaluator& Mm, const ScanRegion& region,
                               std::optional<double> seed = std::nullopt, int threads = 1);

// |Im(M+ + M-) / (M+ - M-)|, no shift.
RatioScanResult necessary_ratio_scan(const MEvaluator& Mp, const MEvaluator& Mm,
                                     const ScanRegion& region, int threads = 1);

// ---------------------------------------------------------------- Stieltjes

enum class StieltjesVerdict { S, SInverse, Neither };
enum class JNonnegVerdict { Likely, Violated };
std::string to_string(StieltjesVerdict v);
std::string to_string(JNonnegVerdict v);

struct NegativeGrid {
  double min_abs = 1e-4, max_abs = 1e4;
  int points = 41;
  std::vector<double> lambdas() const;  // ascending, all negative
};

struct StieltjesReport {
  StieltjesVerdict verdict;
  std::vector<double> lambda, value;
  std::vector<ExcludedPoint> failures;  // poles or evaluator rejections
};

StieltjesReport stieltjes_check(const MEvaluator& m, const NegativeGrid& grid = {},
                                double tol = 1e-9);

struct JNonnegReport {
  JNonnegVerdict verdict;
  StieltjesVerdict combined;                 // class of -1/m+ - 1/m-
  std::optional<StieltjesVerdict> even_shortcut;  // class of m+ when the problem is even
};

JNonnegReport j_nonneg_check(const MEvaluator& mp, const MEvaluator& mm, bool even_problem,
                             const NegativeGrid& grid = {}, double tol = 1e-9);

// ---------------------------------------------------------------- decaying

enum class DecayCase { Unbounded, Bounded, Inconclusive };  // cases (i) and (ii) at lambda = 0

struct DecayingSideReport {
  S0Report s0;
  DecayCase decay_case;
  double a = 0.0, b = 0.0;  // case (i): m ~ a / (b - i sqrt(lambda))
  double k = 0.0;           // case (ii): m ~ i k sqrt(lambda)
  double fit_residual = 0.0;
  ABConstants quadrature{};  // a, b from the integrals at lambda = 0
};

struct DecayingReport {
  DecayingSideReport plus, minus;
  std::optional<double> shift_candidate;  // a+/b+ - a-/b- when both b are nonzero
};

struct DecayingFitOptions {
  double R = 1e-4;       // upper end of the fit window in |lambda|
  double decades = 2.0;
  double max_residual = 0.05;
  double s0_X = 0.0;     // 0: chosen from the support of q
};

DecayingSideReport classify_decaying_side(const HalfLineProblem& p, const DecayingFitOptions& opt = {});
DecayingReport classify_decaying(const HalfLineProblem& plus, const HalfLineProblem& minus,
                                 const DecayingFitOptions& opt = {});

// ---------------------------------------------------------------- eigenvalues

struct NonrealEig {
  cplx lambda;
  int multiplicity;
  double residual;
};

// Zeros of M-(l) - D M+(l) - C in the rectangle (which must lie in C+).
std::vector<NonrealEig> find_nonreal_eigs(const MEvaluator& Mp, const MEvaluator& Mm,
                                          const contour::Rect& rect, double D = 1.0, double C = 0.0,
                                          const contour::Options& opt = {});

struct DefinitizingPoly {
  Polynomial p;
  bool similar_to_normal;  // all multiplicities one
};
DefinitizingPoly definitizing_poly(const std::vector<NonrealEig>& zeros);

// ---------------------------------------------------------------- report

struct ClassifyOptions {
  double near_zero_R = 0.1;
  double near_infinity_R = 10.0;
  double decades = 3.0;
  int radial_points = 13;
  int angular_points = 7;
  std::optional<double> shift_seed;
  bool even_problem = false;
  int herglotz_samples = 200;
  unsigned long long seed = 1;
  std::optional<contour::Rect> eig_rect;
  int threads = 1;
};

struct ClassificationReport {
  bool herglotz_ok = true;
  double herglotz_min = 0.0;  // min of Im l * Im m over the samples
  StieltjesVerdict stieltjes_verdict = StieltjesVerdict::Neither;
  JNonnegVerdict j_nonneg_verdict = JNonnegVerdict::Violated;
  CriticalVerdict critical_point_zero = CriticalVerdict::Inconclusive;
  CriticalVerdict critical_point_infinity = CriticalVerdict::Inconclusive;
  RatioScanResult zero_scan, zero_necessary, infinity_scan, infinity_necessary;
  std::vector<NonrealEig> nonreal_eigs;
  std::optional<DefinitizingPoly> definitizing;
  std::vector<std::string> notes;
};

ClassificationReport classify(const EvaluatorPair& pair, const ClassifyOptions& opt = {});

}  // namespace krein
