#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../support.hpp"
#include "krein/discrete.hpp"
#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

using namespace krein;
using std::numbers::pi;

namespace {
FullLineProblem well() { return {Coefficient::characteristic(-1.0, 1.0, -5.0)}; }

cplx closest(const std::vector<cplx>& zs, cplx target) {
  cplx best = zs.front();
  for (cplx z : zs)
    if (std::abs(z - target) < std::abs(best - target)) best = z;
  return best;
}
}  // namespace

TEST_CASE("explicit four-point discretisation") {
  const auto op = discretize({Coefficient::constant(0.0)}, 2.0, 4);
  CHECK(op.h == 1.0);
  CHECK(op.x == std::vector<double>{-1.5, -0.5, 0.5, 1.5});
  Eigen::MatrixXd expected(4, 4);
  expected << -2, 1, 0, 0,  //
      1, -2, 0, 0,          //
      0, 0, 2, -1,          //
      0, 0, -1, 2;
  expected(1, 2) = 1;
  expected(2, 1) = -1;
  CHECK((op.dense() - expected).norm() == 0.0);
}

TEST_CASE("weighted symmetry of the sign-stripped operator") {
  const FullLineProblem fp{Coefficient::cosine(1.5, 3.0) + Coefficient::characteristic(-2, 1, -3),
                           Coefficient::power(1.0, 2.0) + Coefficient::constant(0.5)};
  const auto op = discretize(fp, 8.0, 300);
  CHECK(weighted_symmetry_error(op) < 1e-12);
}

TEST_CASE("without the sign the operator is symmetric and bounded below by min q") {
  const FullLineProblem fp{Coefficient::cosine(2.0, 1.0, 0.3) + Coefficient::constant(0.7)};
  const auto op = discretize(fp, 6.0, 200);
  Eigen::MatrixXd L = op.dense();
  for (int k = 0; k < op.n; ++k) L.row(k) *= op.sgn[k];
  CHECK((L - L.transpose()).norm() < 1e-12 * L.norm());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  CHECK(es.eigenvalues().minCoeff() >= 0.7 - 2.0 - 1e-9);
}

TEST_CASE("free problem with an indefinite weight has real spectrum") {
  const auto op = discretize({Coefficient::constant(0.0)}, 40.0, 2000);
  const auto s = spectrum(op);
  CHECK(s.complex_pairs.empty());
  CHECK(s.real_eigs.size() == 2000);
  CHECK(s.method == "definite");
}

TEST_CASE("defective matrix has unbounded eigenvector condition") {
  Eigen::MatrixXd N(2, 2);
  N << 0, 1, 0, 0;
  CHECK(spectrum(N).eigvec_condition >= 1e12);
}

TEST_CASE("indefinite well: dense and interface-function routes agree") {
  const auto op = discretize(well(), 40.0, 500);
  const auto dense = spectrum(op);
  REQUIRE(dense.complex_pairs.size() >= 1);
  SpectrumOptions o;
  o.dense_limit = 100;
  o.search = contour::Rect{-10, 10, 0.01, 10};
  const auto contour = spectrum(op, o);
  CHECK_FALSE(contour.real_eigs_complete);
  REQUIRE(contour.complex_pairs.size() == dense.complex_pairs.size());
  for (cplx z : dense.complex_pairs) CHECK(std::abs(closest(contour.complex_pairs, z) - z) < 1e-8);
  CHECK(std::isfinite(dense.eigvec_condition));
}

TEST_CASE("nonreal eigenvalues of the well converge at second order") {
  const contour::Rect box{0.5, 5, 0.2, 5};
  std::vector<cplx> z;
  for (int n : {2000, 4000, 8000}) {
    const auto r = nonreal_eigenvalues(discretize(well(), 40.0, n), box);
    REQUIRE(r.size() == 1);
    z.push_back(r[0].z);
  }
  const double d1 = std::abs(z[1] - z[0]), d2 = std::abs(z[2] - z[1]);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.25));
  for (cplx w : z) CHECK(box.contains(w));
}

TEST_CASE("interface function needs a single sign change") {
  auto op = discretize(well(), 10.0, 100);
  op.sgn[10] = 1.0;
  CHECK_THROWS_AS(nonreal_eigenvalues(op, {-5, 5, 0.1, 5}), DomainError);
}

TEST_CASE("resolvent functional of a diagonal matrix is pi |f|^2") {
  Eigen::MatrixXd D = Eigen::VectorXd::LinSpaced(5, -1, 3).asDiagonal();
  Eigen::VectorXcd f(5);
  f << 1, 2, cplx(0, 1), -1, 0.5;
  for (double eps : {0.5, 0.05}) {
    FunctionalOptions o;
    o.eps = eps;
    const auto r = resolvent_functional(D, f, o);
    CHECK(std::abs(r.value - pi * f.squaredNorm()) < 1e-3 * pi * f.squaredNorm());
  }
}

TEST_CASE("normal matrices never exceed pi |f|^2") {
  Eigen::MatrixXd R(3, 3);
  R << 0, 1, 0, -1, 0, 0, 0, 0, 2;
  Eigen::VectorXcd f(3);
  f << 1, cplx(0, 1), 0.3;
  FunctionalOptions o;
  o.eps = 0.2;
  CHECK(resolvent_functional(R, f, o).value <= pi * f.squaredNorm() * (1 + 1e-6));
}

TEST_CASE("nilpotent block: functional grows like eps^-2") {
  Eigen::MatrixXd N(2, 2);
  N << 0, 1, 0, 0;
  Eigen::VectorXcd g(2);
  g << 0, 1;
  std::vector<double> le, lv;
  for (double eps : {0.1, 0.01, 0.001}) {
    FunctionalOptions o;
    o.eps = eps;
    const double v = resolvent_functional(N, g, o).value;
    CHECK(v == doctest::Approx(pi / (2 * eps * eps) + pi).epsilon(1e-6));
    le.push_back(std::log(eps));
    lv.push_back(std::log(v));
  }
  CHECK(testing_support::slope(le, lv) == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("spectral kernel reproduces the quadrature, also with nonreal spectrum") {
  for (const FullLineProblem& fp : {FullLineProblem{Coefficient::constant(0.0)}, FullLineProblem{example_q0_potential()}}) {
    const auto op = discretize(fp, 6.0, 60);
    const Eigen::MatrixXd T = op.dense_weighted();
    Eigen::VectorXcd f(op.n), g(op.n);
    for (int k = 0; k < op.n; ++k) {
      f(k) = std::exp(-op.x[k] * op.x[k]) * cplx(1, 0.3 * op.x[k]);
      g(k) = f(k) * std::sqrt(op.w[k] * op.h);
    }
    for (double eps : {0.3, 0.03}) {
      FunctionalOptions o;
      o.eps = eps;
      const double quad = resolvent_functional(op, f, o).value;
      const double kern = (g.adjoint() * functional_kernel(T, eps) * g)(0).real();
      CHECK(kern == doctest::Approx(quad).epsilon(1e-6));
    }
  }
}
