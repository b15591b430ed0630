#pragma once

#include <complex>

namespace krein {

using cplx = std::complex<double>;

// Square root with the cut along [0, +inf): arg z is taken in [0, 2*pi),
// so the result lies in the closed upper half-plane and is positive for z > 0.
cplx sqrt_cut(cplx z);

// z^nu with the same cut as sqrt_cut. Throws DomainError at z == 0.
cplx power_cut(cplx z, double nu);

// Gamma function for x > 0 (Lanczos, g = 7).
double gamma(double x);

enum class HankelKind { First = 1, Second = 2 };
enum class HankelMethod { Auto, Series, RayIntegration, Asymptotic };

struct HankelValue {
  cplx value;
  cplx derivative;
};

// Hankel functions H_nu^(1,2)(z) for nu in (0, 1], z != 0, |arg z| <= pi - 0.01.
// Auto picks the power series (extended precision) for small |z|, a ray
// integration of Bessel's equation seeded at |z| = 20 where the series would
// cancel badly, and the asymptotic expansion for |z| >= 20.
cplx hankel(double nu, cplx z, HankelKind kind, HankelMethod method = HankelMethod::Auto);
HankelValue hankel_with_derivative(double nu, cplx z, HankelKind kind,
                                   HankelMethod method = HankelMethod::Auto);

// Leading asymptotic term only.
cplx hankel_leading(double nu, cplx z, HankelKind kind);

}  // namespace krein
