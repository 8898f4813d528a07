#include "oulab/numkit.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace oulab {

void require_finite(const Matrix& m, const std::string& name) {
  if (!m.allFinite()) {
    throw std::invalid_argument(name + " contains NaN or infinite entries");
  }
}

double spectral_abscissa(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectral_abscissa: matrix not square");
  Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

bool is_hurwitz(const Matrix& a) { return spectral_abscissa(a) < 0.0; }

Matrix expm(const Matrix& a, double t) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix not square");
  require_finite(a, "expm input");
  return (t * a).exp();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

Matrix solve_lyapunov(const Matrix& a, const Matrix& q, double tol) {
  const auto d = a.rows();
  if (a.cols() != d) throw std::invalid_argument("solve_lyapunov: A not square");
  if (q.rows() != d || q.cols() != d) throw std::invalid_argument("solve_lyapunov: Q dimension mismatch");
  require_finite(a, "solve_lyapunov A");
  require_finite(q, "solve_lyapunov Q");

  const double abscissa = spectral_abscissa(a);
  if (abscissa >= 0.0) {
    std::ostringstream msg;
    msg << "solve_lyapunov: drift is not Hurwitz (spectral abscissa " << abscissa
        << " >= 0); the steady-state covariance integral diverges";
    throw AssumptionFailure(msg.str());
  }

  // vec(AX + XA^T) = (I kron A + A kron I) vec(X) with column-stacking vec.
  const Matrix id = Matrix::Identity(d, d);
  Matrix system = kron(id, a) + kron(a, id);
  Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(q.data(), d * d);
  Eigen::VectorXd x = system.fullPivLu().solve(rhs);
  Matrix sol = Eigen::Map<const Matrix>(x.data(), d, d);
  sol = 0.5 * (sol + sol.transpose()).eval();

  const double qn = q.norm();
  const double residual = (a * sol + sol * a.transpose() + q).norm();
  if (residual > tol * std::max(qn, 1.0)) {
    std::ostringstream msg;
    msg << "solve_lyapunov: residual " << residual << " exceeds tolerance " << tol * std::max(qn, 1.0);
    throw std::runtime_error(msg.str());
  }
  return sol;
}

SpdFactor spd_factor(const Matrix& m, double cutoff) {
  const auto d = m.rows();
  if (m.cols() != d) throw std::invalid_argument("spd_factor: matrix not square");
  require_finite(m, "spd_factor input");
  const double scale = std::max(m.norm(), 1.0);
  if ((m - m.transpose()).norm() > 1e-10 * scale) {
    throw std::invalid_argument("spd_factor: matrix not symmetric to tolerance");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()));
  const Vector lam = es.eigenvalues();
  const Matrix v = es.eigenvectors();
  const double lam_max = std::max(lam.maxCoeff(), 0.0);
  if (lam.minCoeff() < -1e-10 * std::max(lam_max, 1.0)) {
    std::ostringstream msg;
    msg << "spd_factor: matrix has negative eigenvalue " << lam.minCoeff() << ", not PSD";
    throw std::invalid_argument(msg.str());
  }

  const double rank_cut = cutoff * std::max(lam_max, 0.0);
  SpdFactor f;
  f.base = m;
  Vector sq = Vector::Zero(d);
  Vector isq = Vector::Zero(d);
  f.rank = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    if (lam(k) > rank_cut) {
      sq(k) = std::sqrt(lam(k));
      isq(k) = 1.0 / sq(k);
      ++f.rank;
    }
  }
  f.root = v * sq.asDiagonal() * v.transpose();
  f.pseudo_inverse_root = v * isq.asDiagonal() * v.transpose();
  return f;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace oulab
