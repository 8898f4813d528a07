#include "oulab/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace oulab {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("Polynomial: dimension must be positive");
}

Polynomial Polynomial::constant(int dim, double value) {
  Polynomial p(dim);
  p.add_term(Exponents(dim, 0), value);
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("Polynomial::variable: index out of range");
  Polynomial p(dim);
  Exponents alpha(dim, 0);
  alpha[index] = 1;
  p.add_term(alpha, 1.0);
  return p;
}

Polynomial Polynomial::linear_form(const Eigen::VectorXd& u) {
  const int dim = static_cast<int>(u.size());
  Polynomial p(dim);
  for (int j = 0; j < dim; ++j) {
    if (u(j) != 0.0) {
      Exponents alpha(dim, 0);
      alpha[j] = 1;
      p.add_term(alpha, u(j));
    }
  }
  return p;
}

Polynomial Polynomial::univariate(int dim, int index, const std::vector<double>& coeffs) {
  Polynomial p(dim);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0.0) {
      Exponents alpha(dim, 0);
      alpha[index] = static_cast<int>(k);
      p.add_term(alpha, coeffs[k]);
    }
  }
  return p;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [alpha, c] : terms_) {
    int total = 0;
    for (int e : alpha) total += e;
    deg = std::max(deg, total);
  }
  return deg;
}

void Polynomial::add_term(const Exponents& alpha, double coeff) {
  if (static_cast<int>(alpha.size()) != dim_) throw std::invalid_argument("Polynomial::add_term: exponent arity mismatch");
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double scalar) {
  if (scalar == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial out(dim_);
  Exponents gamma(dim_);
  for (const auto& [alpha, ca] : terms_) {
    for (const auto& [beta, cb] : other.terms_) {
      for (int k = 0; k < dim_; ++k) gamma[k] = alpha[k] + beta[k];
      out.add_term(gamma, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(double scalar) const {
  Polynomial out = *this;
  out *= scalar;
  return out;
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

Polynomial operator*(double scalar, const Polynomial& p) { return p * scalar; }

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= dim_) throw std::invalid_argument("Polynomial::derivative: index out of range");
  Polynomial out(dim_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[index] == 0) continue;
    Exponents beta = alpha;
    beta[index] -= 1;
    out.add_term(beta, c * alpha[index]);
  }
  return out;
}

double Polynomial::evaluate(const Eigen::VectorXd& x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
  double total = 0.0;
  for (const auto& [alpha, c] : terms_) {
    double term = c;
    for (int k = 0; k < dim_; ++k) {
      for (int e = 0; e < alpha[k]; ++e) term *= x(k);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& replacement) const {
  if (static_cast<int>(replacement.size()) != dim_) {
    throw std::invalid_argument("Polynomial::substitute: need one replacement per variable");
  }
  const int new_dim = replacement.empty() ? dim_ : replacement[0].dim();
  for (const auto& r : replacement) {
    if (r.dim() != new_dim) throw std::invalid_argument("Polynomial::substitute: replacements disagree on dimension");
  }

  // Cached powers replacement[k]^e, built incrementally per variable.
  std::vector<std::vector<Polynomial>> powers(dim_);
  auto power_of = [&](int k, int e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(new_dim, 1.0));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * replacement[k]);
    return cache[e];
  };

  Polynomial out(new_dim);
  for (const auto& [alpha, c] : terms_) {
    Polynomial term = Polynomial::constant(new_dim, c);
    for (int k = 0; k < dim_; ++k) {
      if (alpha[k] > 0) term = term * power_of(k, alpha[k]);
    }
    out += term;
  }
  return out;
}

double Polynomial::coeff_norm() const {
  double m = 0.0;
  for (const auto& [alpha, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<double> hermite_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coefficients: order must be nonnegative");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace oulab
