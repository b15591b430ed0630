#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace krein {

// Real polynomial, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);
  static Polynomial from_roots(const std::vector<double>& roots);

  int degree() const;
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  Polynomial derivative() const;
  double norm_inf() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double s) const;

  struct DivMod;
  DivMod divmod(const Polynomial& d) const;

  // All complex roots (companion matrix eigenvalues).
  std::vector<std::complex<double>> roots() const;

 private:
  void trim();
  std::vector<double> c_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

}  // namespace krein
