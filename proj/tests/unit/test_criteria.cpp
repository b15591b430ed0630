#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles/reference_values.hpp"
#include "../support.hpp"
#include "krein/contour.hpp"
#include "krein/criteria.hpp"
#include "krein/errors.hpp"

using namespace krein;
using std::numbers::pi;

namespace {
const cplx I(0, 1);

EvaluatorPair numeric_pair(const Coefficient& q) {
  const FullLineProblem fp{q};
  return make_pair(NumericKind{fp.plus(), {}});
}

MEvaluator numeric_plus(const Coefficient& q) {
  return MEvaluator(NumericKind{FullLineProblem{q}.plus(), {}}, Side::Plus);
}
}  // namespace

TEST_CASE("ratio of the free pair is one") {
  const auto p = make_pair(FreeKind{});
  for (cplx l : {cplx(0.1, 0.2), cplx(-3, 1), cplx(0, 5)}) CHECK(ratio(p.plus, p.minus, l, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("ratio is invariant under swapping the sides") {
  const auto p = numeric_pair(Coefficient::characteristic(-0.5, 1.5, -2.0));
  for (cplx l : {cplx(0.4, 0.3), cplx(-2, 1)})
    CHECK(ratio(p.plus, p.minus, l, 0.3) == doctest::Approx(ratio(p.minus, p.plus, l, 0.3)).epsilon(1e-12));
  CHECK_THROWS_AS(ratio(p.plus, p.plus, cplx(0, 1), 0.0), DenominatorVanishes);
}

TEST_CASE("mirrored power weight: ratio equals tan(pi nu / 2)") {
  for (double alpha : {-0.5, 1.0, 2.0}) {
    const double nu = 1.0 / (alpha + 2.0);
    const auto closed = make_pair(PowerWeightKind{alpha});
    const FullLineProblem fp{Coefficient::constant(0.0), Coefficient::power(alpha)};
    const auto numeric = make_pair(NumericKind{fp.plus(), {}});
    for (cplx l : {cplx(0, 0.01), cplx(1, 1), cplx(-5, 0.5)}) {
      CHECK(ratio(closed.plus, closed.minus, l, 0.0) == doctest::Approx(std::tan(pi * nu / 2)).epsilon(1e-10));
      CHECK(ratio(numeric.plus, numeric.minus, l, 0.0) == doctest::Approx(std::tan(pi * nu / 2)).epsilon(1e-6));
    }
  }
}

TEST_CASE("scan regions") {
  const auto r = ScanRegion::near_zero(0.1, 3);
  const auto radii = r.radii();
  CHECK(radii.front() == doctest::Approx(1e-4));
  CHECK(radii.back() == doctest::Approx(0.1));
  for (double a : r.angle_grid()) CHECK((a > 0 && a < pi));
  ScanRegion bad = r;
  bad.R = -1;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("optimised shift never does worse than no shift") {
  const auto p = numeric_pair(Coefficient::characteristic(0.0, 2.0, -1.5));
  const ScanGrid g = evaluate_grid(p.plus, p.minus, ScanRegion::near_zero(0.1, 2));
  const auto zero = summarize(g, 0.0);
  const auto best = optimize_shift(g);
  CHECK(best.sup_value <= zero.sup_value * (1 + 1e-12));
  const auto seeded = optimize_shift(g, 5.0);
  CHECK(seeded.sup_value <= summarize(g, 5.0).sup_value * (1 + 1e-12));
}

TEST_CASE("necessary ratio for q0 grows like y^(-1/2)") {
  const auto p = make_pair(ExampleQ0Kind{});
  ScanRegion r = ScanRegion::near_zero(1e-2, 3);
  r.angles = {pi / 2};
  const auto s = necessary_ratio_scan(p.plus, p.minus, r);
  CHECK(s.growth_exponent == doctest::Approx(0.5).epsilon(0.06));
  CHECK(s.verdict == CriticalVerdict::GrowthDetected);
}

TEST_CASE("winding numbers add over a split rectangle") {
  const auto f = contour::Analytic::from_function(
      [](cplx z) { return (z - cplx(0.3, 0.4)) * (z - cplx(-0.6, 0.7)) * (z - cplx(0.2, 1.6)) * std::exp(z); });
  const contour::Rect all{-1, 1, 0.1, 2}, left{-1, 0, 0.1, 2}, right{0, 1, 0.1, 2};
  CHECK(contour::winding_number(f, all) == 3);
  CHECK(contour::winding_number(f, left) + contour::winding_number(f, right) == 3);
  const auto roots = contour::find_zeros(f, all);
  CHECK(roots.size() == 3);
  const auto dbl = contour::Analytic::from_function([](cplx z) { return (z - cplx(0.1, 1)) * (z - cplx(0.1, 1)); });
  const auto r2 = contour::find_zeros(dbl, all);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].multiplicity == 2);
  CHECK(std::abs(r2[0].z - cplx(0.1, 1)) < 1e-6);
}

TEST_CASE("Stieltjes classes") {
  CHECK(stieltjes_check(numeric_plus(Coefficient::inverse_power_tail(2.0, 0.0, 2.0))).verdict == StieltjesVerdict::S);
  CHECK(stieltjes_check(MEvaluator(FreeKind{}, Side::Plus)).verdict == StieltjesVerdict::S);
  CHECK(stieltjes_check(numeric_plus(Coefficient::characteristic(-1.0, 1.0, -5.0))).verdict == StieltjesVerdict::Neither);
  const auto free = make_pair(FreeKind{});
  CHECK(j_nonneg_check(free.plus, free.minus, true).verdict == JNonnegVerdict::Likely);
  const auto well = numeric_pair(Coefficient::characteristic(-1.0, 1.0, -5.0));
  CHECK(j_nonneg_check(well.plus, well.minus, true).verdict == JNonnegVerdict::Violated);
}

TEST_CASE("decaying potentials") {
  const auto free = classify_decaying_side({Side::Plus, Coefficient::constant(0.0)});
  CHECK(free.decay_case == DecayCase::Unbounded);
  CHECK(free.a == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(free.b) < 1e-3);
  const auto crit = classify_decaying_side({Side::Plus, Coefficient::characteristic(0.0, pi / 2, -1.0)});
  CHECK(crit.decay_case == DecayCase::Bounded);
  CHECK(std::abs(crit.quadrature.a) < 1e-8);
  const auto shallow = classify_decaying_side({Side::Plus, Coefficient::characteristic(0.0, 1.0, -1.0)});
  CHECK(shallow.decay_case == DecayCase::Unbounded);
  CHECK(shallow.a == doctest::Approx(shallow.quadrature.a).epsilon(0.02));
  CHECK(shallow.quadrature.a == doctest::Approx(std::cos(1.0)).epsilon(1e-9));
}

TEST_CASE("nonreal eigenvalues of the indefinite well") {
  const auto well = numeric_pair(Coefficient::characteristic(-1.0, 1.0, -5.0));
  const contour::Rect box{-5, 5, 0.05, 5};
  const auto z = find_nonreal_eigs(well.plus, well.minus, box);
  REQUIRE(z.size() == 2);
  const cplx ref = oracle::kWellEigenvalue;
  for (const auto& e : z) {
    const cplx target = e.lambda.real() > 0 ? ref : -std::conj(ref);
    CHECK(std::abs(e.lambda - target) < 1e-7);
    CHECK(e.multiplicity == 1);
  }
  const auto free = make_pair(FreeKind{});
  CHECK(find_nonreal_eigs(free.plus, free.minus, box).empty());
  const auto q0 = make_pair(ExampleQ0Kind{});
  CHECK(find_nonreal_eigs(q0.plus, q0.minus, box).empty());
}

TEST_CASE("definitizing polynomial") {
  const auto empty = definitizing_poly({});
  CHECK(empty.p.coeffs() == std::vector<double>{0.0, 1.0});
  CHECK(empty.similar_to_normal);
  const auto one = definitizing_poly({{I, 1, 0.0}});
  CHECK(one.p.coeffs() == std::vector<double>{0.0, 1.0, 0.0, 1.0});
  const auto dbl = definitizing_poly({{I, 2, 0.0}});
  CHECK_FALSE(dbl.similar_to_normal);
}

TEST_CASE("classification of the free problem") {
  ClassifyOptions o;
  o.even_problem = true;
  o.herglotz_samples = 50;
  const auto rep = classify(make_pair(FreeKind{}), o);
  CHECK(rep.herglotz_ok);
  CHECK(rep.stieltjes_verdict == StieltjesVerdict::S);
  CHECK(rep.critical_point_zero == CriticalVerdict::BoundedRatio);
  CHECK(rep.critical_point_infinity == CriticalVerdict::BoundedRatio);
}

TEST_CASE("classification of q0 reports growth at zero") {
  ClassifyOptions o;
  o.even_problem = true;
  o.herglotz_samples = 50;
  const auto rep = classify(make_pair(ExampleQ0Kind{}), o);
  CHECK(rep.critical_point_zero == CriticalVerdict::GrowthDetected);
  CHECK(rep.critical_point_infinity == CriticalVerdict::BoundedRatio);
}
