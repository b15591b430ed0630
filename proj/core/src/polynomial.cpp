#include "krein/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "krein/errors.hpp"

namespace krein {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<double>& roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

int Polynomial::degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }

double Polynomial::operator()(double x) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
  return s;
}

Polynomial Polynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(double(k) * c_[k]);
  return Polynomial(std::move(d));
}

double Polynomial::norm_inf() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = (*this)[k] + o[k];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> r = c_;
  for (double& v : r) v *= s;
  return Polynomial(std::move(r));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& d) const {
  if (d.degree() < 0) throw DomainError("polynomial division by zero");
  std::vector<double> rem = c_;
  const int n = degree(), m = d.degree();
  if (n < m) return {Polynomial{}, *this};
  std::vector<double> q(static_cast<std::size_t>(n - m + 1), 0.0);
  const double lead = d.c_.back();
  for (int k = n - m; k >= 0; --k) {
    const double coef = rem[static_cast<std::size_t>(k + m)] / lead;
    q[static_cast<std::size_t>(k)] = coef;
    for (int j = 0; j <= m; ++j) rem[static_cast<std::size_t>(k + j)] -= coef * d.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(m));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

std::vector<std::complex<double>> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c_[static_cast<std::size_t>(i)] / c_.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
  return r;
}

}  // namespace krein
