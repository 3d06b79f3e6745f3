#include "hamcert/dense.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace hamcert {

double SvdResult::sigma_max() const {
  return singular_values.size() == 0 ? 0.0 : singular_values(0);
}

double SvdResult::sigma_min() const {
  return singular_values.size() == 0
             ? 0.0
             : singular_values(singular_values.size() - 1);
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + ": matrix has non-finite entries");
  }
}

double default_rank_tolerance(const ComplexMatrix& m) {
  const auto dim = static_cast<double>(std::max(m.rows(), m.cols()));
  return dim * std::numeric_limits<double>::epsilon() * kRankSafetyFactor;
}

namespace {

void check_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw InvalidInput("relative tolerance must lie in (0, 1), got " +
                       std::to_string(rel_tol));
  }
}

void check_svd_output(const RealVector& s) {
  if (!s.allFinite()) {
    throw NumericalFailure("SVD did not converge to finite singular values");
  }
}

}  // namespace

SvdResult svd(const ComplexMatrix& m, bool compute_left) {
  require_finite(m, "svd");
  SvdResult out;
  if (m.size() == 0) {
    if (compute_left) out.left_vectors = ComplexMatrix::Identity(m.rows(), m.rows());
    out.right_vectors = ComplexMatrix::Identity(m.cols(), m.cols());
    return out;
  }
  const unsigned options =
      compute_left ? Eigen::ComputeFullU | Eigen::ComputeFullV : Eigen::ComputeFullV;
  Eigen::BDCSVD<ComplexMatrix> dec(m, options);
  if (dec.info() != Eigen::Success) {
    throw NumericalFailure("SVD failed to converge");
  }
  out.singular_values = dec.singularValues();
  check_svd_output(out.singular_values);
  if (compute_left) out.left_vectors = dec.matrixU();
  out.right_vectors = dec.matrixV();
  return out;
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  if (m.size() == 0) return {};
  // Exactly Hermitian: singular values are |eigenvalues|, and the symmetric
  // solver is several times faster than the SVD at the same backward error.
  if (m.rows() == m.cols() && m == m.adjoint()) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
      throw NumericalFailure("Hermitian eigensolver failed to converge");
    }
    RealVector s = eig.eigenvalues().cwiseAbs();
    std::sort(s.begin(), s.end(), std::greater<>());
    check_svd_output(s);
    return s;
  }
  Eigen::BDCSVD<ComplexMatrix> dec(m);
  if (dec.info() != Eigen::Success) {
    throw NumericalFailure("SVD failed to converge");
  }
  RealVector s = dec.singularValues();
  check_svd_output(s);
  return s;
}

double norm2(const ComplexMatrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

double sigma_min(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) return 0.0;
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  check_rel_tol(rel_tol);
  const RealVector s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = rel_tol * s(0);
  return static_cast<int>((s.array() > threshold).count());
}

int numerical_rank(const ComplexMatrix& m) {
  return numerical_rank(m, default_rank_tolerance(m));
}

ComplexMatrix null_space_basis(const ComplexMatrix& m, double rel_tol) {
  check_rel_tol(rel_tol);
  const SvdResult dec = svd(m);
  int rank = 0;
  if (dec.sigma_max() > 0.0) {
    const double threshold = rel_tol * dec.sigma_max();
    rank = static_cast<int>((dec.singular_values.array() > threshold).count());
  }
  const Eigen::Index nullity = m.cols() - rank;
  return dec.right_vectors.rightCols(nullity);
}

ComplexMatrix null_space_basis(const ComplexMatrix& m) {
  return null_space_basis(m, default_rank_tolerance(m));
}

namespace {

void check_threshold(double threshold) {
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw InvalidInput("rank threshold must be finite and >= 0");
  }
}

}  // namespace

int rank_above(const ComplexMatrix& m, double threshold) {
  check_threshold(threshold);
  const RealVector s = singular_values(m);
  return static_cast<int>((s.array() > threshold).count());
}

ComplexMatrix null_space_above(const ComplexMatrix& m, double threshold) {
  check_threshold(threshold);
  const SvdResult dec = svd(m);
  const auto rank = (dec.singular_values.array() > threshold).count();
  return dec.right_vectors.rightCols(m.cols() - rank);
}

EigResult eig(const ComplexMatrix& m, bool compute_vectors) {
  require_finite(m, "eig");
  if (m.rows() != m.cols()) {
    throw InvalidInput("eig: matrix must be square");
  }
  EigResult out;
  if (m.size() == 0) return out;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, compute_vectors);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("eigenvalue iteration did not converge");
  }
  out.eigenvalues = es.eigenvalues();
  if (!out.eigenvalues.allFinite()) {
    throw NumericalFailure("eigensolver produced non-finite eigenvalues");
  }
  if (!compute_vectors) return out;

  const ComplexMatrix& vecs = es.eigenvectors();
  const double scale = norm2(m);
  for (Eigen::Index i = 0; i < vecs.cols(); ++i) {
    const ComplexVector v = vecs.col(i);
    const double vn = v.norm();
    const double r = (m * v - out.eigenvalues(i) * v).norm();
    const double rel = (scale > 0.0 && vn > 0.0) ? r / (scale * vn) : r;
    if (!(rel <= kEigResidualTolerance)) {
      std::ostringstream os;
      os << "eigenpair " << i << " residual " << rel << " exceeds "
         << kEigResidualTolerance;
      throw NumericalFailure(os.str());
    }
    out.max_relative_residual = std::max(out.max_relative_residual, rel);
  }
  out.eigenvectors = vecs;
  return out;
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs,
                    double rel_tol) {
  check_rel_tol(rel_tol);
  require_finite(m, "solve");
  require_finite(rhs, "solve");
  if (m.rows() != m.cols() || rhs.rows() != m.rows()) {
    throw InvalidInput("solve: dimension mismatch");
  }
  const RealVector s = singular_values(m);
  const double smax = s.size() ? s(0) : 0.0;
  const double smin = s.size() ? s(s.size() - 1) : 0.0;
  if (!(smin > rel_tol * smax) || smax == 0.0) {
    throw SingularMatrix(smin, smax);
  }
  const ComplexMatrix x = m.partialPivLu().solve(rhs);
  const double residual = (m * x - rhs).norm();
  if (!(residual <= kSolveResidualTolerance * smax * x.norm() +
                        std::numeric_limits<double>::min())) {
    std::ostringstream os;
    os << "solve: residual " << residual << " exceeds contract";
    throw NumericalFailure(os.str());
  }
  return x;
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  return solve(m, rhs, default_rank_tolerance(m));
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_finite(m, "hermitian_eigenvalues");
  if (m.rows() != m.cols()) {
    throw InvalidInput("hermitian_eigenvalues: matrix must be square");
  }
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge");
  }
  return es.eigenvalues();
}

bool in_resolvent(const ComplexMatrix& m, Complex shift, double rel_tol) {
  ComplexMatrix shifted = m;
  shifted.diagonal().array() -= shift;
  const RealVector s = singular_values(shifted);
  if (s.size() == 0 || s(0) == 0.0) return false;
  return s(s.size() - 1) > rel_tol * s(0);
}

ComplexVector normalize_phase(const ComplexVector& v) {
  if (v.size() == 0) return v;
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return v;
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= peak * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  const Complex phase = std::conj(v(pivot)) / std::abs(v(pivot));
  return v * phase;
}

}  // namespace hamcert
