#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

namespace oulab {

/// Sparse multivariate polynomial over R^dim.
///
/// Terms are stored as exponent-vector -> coefficient in a sorted map so
/// iteration order (and hence all derived floating-point results) is
/// deterministic.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, double>;

  explicit Polynomial(int dim);

  static Polynomial constant(int dim, double value);
  static Polynomial variable(int dim, int index);
  /// <x, u> as a polynomial in dim = u.size() variables.
  static Polynomial linear_form(const Eigen::VectorXd& u);
  /// Univariate polynomial sum_k coeffs[k] x^k lifted to dimension dim in variable index.
  static Polynomial univariate(int dim, int index, const std::vector<double>& coeffs);

  int dim() const { return dim_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& alpha, double coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double scalar);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double scalar) const;
  Polynomial operator-() const;

  Polynomial derivative(int index) const;
  double evaluate(const Eigen::VectorXd& x) const;

  /// Substitutes variable k by replacement[k]; all replacements must share a
  /// common dimension, which becomes the dimension of the result.
  Polynomial substitute(const std::vector<Polynomial>& replacement) const;

  /// Max absolute coefficient, 0 for the zero polynomial.
  double coeff_norm() const;

 private:
  int dim_;
  TermMap terms_;
};

Polynomial operator*(double scalar, const Polynomial& p);

/// Probabilists' Hermite polynomial He_n as univariate coefficients
/// (He_0 = 1, He_1 = x, He_{n+1} = x He_n - n He_{n-1}).
std::vector<double> hermite_coefficients(int n);

}  // namespace oulab
