#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/reference_values.hpp"
#include "../support.hpp"
#include "krein/mcatalog.hpp"
#include "krein/sl_ode.hpp"

using namespace krein;
using testing_support::rel_err;
using std::numbers::pi;

namespace {
HalfLineProblem free_plus() { return {Side::Plus, Coefficient::constant(0.0)}; }
}  // namespace

TEST_CASE("fundamental solutions of the free equation") {
  const std::array<double, 1> xs{pi / 2};
  const auto s = solve_cs(free_plus(), 4.0, xs);
  REQUIRE(s.size() == 1);
  CHECK(std::abs(s[0].c - (-1.0)) < 1e-9);
  CHECK(std::abs(s[0].s) < 1e-9);
  CHECK(std::abs(s[0].ds - (-1.0)) < 1e-9);
  CHECK(std::abs(s[0].dc) < 1e-9);
}

TEST_CASE("c on the well segment of the q0 example is cos(x sqrt(lambda + 1))") {
  HalfLineProblem p{Side::Plus, example_q0_potential()};
  const std::array<double, 4> xs{0.1, 0.3, 0.5, 0.75};
  for (cplx l : {cplx(2, 1), cplx(-0.5, 0.2), cplx(10, -3)}) {
    const auto s = solve_cs(p, l, xs);
    for (const auto& f : s) {
      const cplx k = std::sqrt(l + 1.0);
      CHECK(rel_err(f.c, std::cos(k * f.x)) < 1e-9);
      CHECK(rel_err(f.s, std::sin(k * f.x) / k) < 1e-9);
    }
  }
}

TEST_CASE("Wronskian of c and s stays one") {
  HalfLineProblem p{Side::Plus, Coefficient::cosine(2.0, 2.0) + Coefficient::characteristic(0.3, 1.1, -4.0)};
  std::vector<double> xs;
  for (double x = 0.25; x <= 12; x += 0.75) xs.push_back(x);
  for (cplx l : {cplx(1, 1), cplx(-3, 0.1), cplx(20, 5)}) {
    for (const auto& f : solve_cs(p, l, xs)) {
      const cplx w = f.c * f.ds - f.dc * f.s;
      CHECK(std::abs(w - 1.0) < 1e-8 * std::max(1.0, std::abs(f.c * f.ds)));
    }
  }
}

TEST_CASE("m_numeric reproduces the free coefficient and is Herglotz") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> lr(std::log(0.05), std::log(50.0)), th(0.02, pi - 0.02);
  for (int i = 0; i < 25; ++i) {
    const cplx l = std::polar(std::exp(lr(rng)), th(rng));
    const auto w = m_numeric(free_plus(), l);
    CAPTURE(l);
    CHECK(rel_err(w.m, cplx(0, 1) / sqrt_cut(l)) < 1e-8);
    CHECK(w.m.imag() > 0);
    CHECK(w.X > 0);
  }
}

TEST_CASE("Dirichlet coefficient is -1/m") {
  HalfLineProblem p{Side::Plus, Coefficient::characteristic(0.0, 1.0, -2.0)};
  HalfLineProblem d = p;
  d.boundary = Boundary::Dirichlet;
  const cplx l(0.7, 0.4);
  CHECK(rel_err(m_numeric(d, l).m, -1.0 / m_numeric(p, l).m) < 1e-8);
}

TEST_CASE("left half-line equals the right half-line of the reflected problem") {
  const Coefficient q = Coefficient::characteristic(-2.0, -0.5, 3.0) + Coefficient::characteristic(0.2, 0.9, -1.0);
  HalfLineProblem left{Side::Minus, q};
  HalfLineProblem right{Side::Plus, q.reflected()};
  for (cplx l : {cplx(1, 1), cplx(-2, 0.3)}) CHECK(rel_err(m_numeric(left, l).m, m_numeric(right, l).m) < 1e-8);
}

TEST_CASE("m_numeric against the independent q0 solution") {
  HalfLineProblem p{Side::Plus, example_q0_potential()};
  for (const auto& r : oracle::kQ0) {
    if (r.lambda.imag() <= 0 || std::abs(r.lambda) < 1e-3) continue;
    CAPTURE(r.lambda);
    CHECK(rel_err(m_numeric(p, r.lambda).m, r.m) < 1e-7);
  }
}

TEST_CASE("psi identity: weighted norm of psi equals Im m / Im lambda") {
  const std::vector<HalfLineProblem> problems = {
      free_plus(),
      {Side::Plus, example_q0_potential()},
      {Side::Plus, Coefficient::constant(0.0), Coefficient::power(1.0)},
      {Side::Minus, Coefficient::characteristic(-1.0, 1.0, -5.0)},
  };
  for (const auto& p : problems) {
    for (cplx l : {cplx(0.5, 1.0), cplx(-2, 0.5), cplx(4, 2)}) {
      const PsiIdentity id = verify_psi_identity(p, l);
      CHECK(std::abs(id.lhs - id.rhs) < 1e-4 * std::abs(id.rhs));
    }
  }
}

TEST_CASE("boundedness of s(x, 0)") {
  CHECK(s0_boundedness(Coefficient::constant(0.0), 50).verdict == Boundedness::Unbounded);
  CHECK(s0_boundedness(Coefficient::characteristic(0.0, pi / 2, -1.0), 50).verdict == Boundedness::Bounded);
  CHECK(s0_boundedness(Coefficient::inverse_power_tail(2.0, 0.0, 2.0), 50).verdict == Boundedness::Unbounded);
}

TEST_CASE("limit point proxy") {
  CHECK(limit_point_proxy(free_plus(), 100));
  CHECK(limit_point_proxy({Side::Plus, Coefficient::constant(0.0), Coefficient::power(2.0)}, 100));
}

TEST_CASE("truncation radius grows as lambda approaches the spectrum") {
  const double far = truncation_radius(free_plus(), cplx(0, 1));
  const double near = truncation_radius(free_plus(), cplx(0, 1e-3));
  CHECK(near > far);
}
