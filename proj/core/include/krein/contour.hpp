#pragma once

// Argument-principle zero finding for functions analytic inside a rectangle.

#include <complex>
#include <functional>
#include <vector>

#include "krein/special.hpp"

namespace krein::contour {

struct Rect {
  double re0, re1, im0, im1;
  cplx center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }
  double diameter() const;
  bool contains(cplx z, double pad = 0.0) const;
};

// F is represented as a product of factors so that large determinants can be
// tracked without overflow; the phase change along a short segment is the
// sum of the principal arguments of factor ratios.
struct Analytic {
  std::function<void(cplx, std::vector<cplx>&)> factors;
  std::function<cplx(cplx)> log_derivative;  // F'/F; optional
  double zero_tolerance = 1e-13;              // |factor| below this counts as a zero on the contour

  static Analytic from_function(std::function<cplx(cplx)> f);
};

struct Options {
  double max_phase_step = 0.4;    // radians per accepted contour step, per factor
  int max_contour_points = 200000;
  double isolation_size = 1e-2;   // boxes smaller than this (relative to the initial rectangle) are final
  double newton_tol = 1e-12;
  int newton_max_iter = 60;
  int retries = 5;
};

struct Root {
  cplx z;
  int multiplicity;
  double residual;  // |z_k - z_{k-1}| at the last Newton step
};

// Net number of zeros inside the rectangle. Throws ZeroOnContour.
int winding_number(const Analytic& f, const Rect& r, const Options& opt = {});

// Zeros inside the rectangle with multiplicities. The outer contour is
// perturbed and retried when a zero lies on it.
std::vector<Root> find_zeros(const Analytic& f, Rect r, const Options& opt = {});

}  // namespace krein::contour
