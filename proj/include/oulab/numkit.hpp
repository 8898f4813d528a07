#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace oulab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Thrown when a model violates the standing stability assumption
/// (drift not Hurwitz, so no invariant measure exists).
class AssumptionFailure : public std::runtime_error {
 public:
  explicit AssumptionFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation is requested outside its supported regime
/// (degenerate noise, non-symmetric model for a chaos check, ...).
class UnsupportedModel : public std::runtime_error {
 public:
  explicit UnsupportedModel(const std::string& what) : std::runtime_error(what) {}
};

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const Matrix& m, const std::string& name);

/// Spectral abscissa: max real part of the eigenvalues.
double spectral_abscissa(const Matrix& a);

/// True iff all eigenvalues lie in the open left half-plane.
bool is_hurwitz(const Matrix& a);

/// e^{tA} for square A.
Matrix expm(const Matrix& a, double t = 1.0);

/// Largest singular value.
double operator_norm(const Matrix& m);
double operator_norm(const ComplexMatrix& m);

/// Solves A X + X A^T + Q = 0 for symmetric PSD Q by Kronecker
/// vectorization. Requires A Hurwitz; throws AssumptionFailure otherwise.
Matrix solve_lyapunov(const Matrix& a, const Matrix& q, double tol = 1e-9);

/// Symmetric PSD square root plus pseudo-inverse root of a matrix.
///
/// rank counts eigenvalues above cutoff * lambda_max;
/// pseudo_inverse_root * base * pseudo_inverse_root is the orthogonal
/// projection onto range(base).
struct SpdFactor {
  Matrix base;
  Matrix root;
  Matrix pseudo_inverse_root;
  int rank = 0;

  bool full_rank() const { return rank == base.rows(); }
};

SpdFactor spd_factor(const Matrix& m, double cutoff = 1e-10);

/// Kronecker product, row-major block convention: (A kron B)_{(i,j) block} = a_ij * B.
Matrix kron(const Matrix& a, const Matrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace oulab
