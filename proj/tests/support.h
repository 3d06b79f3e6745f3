#pragma once

#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "hamcert/dense.h"
#include "hamcert/hamiltonian.h"

namespace hamcert::testing {

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  ComplexMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

inline ComplexMatrix scalar(Complex z) { return ComplexMatrix::Constant(1, 1, z); }

inline ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }
inline ComplexMatrix zeros(Eigen::Index n) { return ComplexMatrix::Zero(n, n); }

// The 2x2 Hamiltonian [[1, 1], [-1, -1]]: singular, C indefinite.
inline HamiltonianBlocks example_3_1() {
  return HamiltonianBlocks::from_blocks(scalar(1.0), scalar(1.0), scalar(-1.0));
}

// Singular values by Jacobi SVD, independent of the library's BDCSVD path.
inline Eigen::VectorXd jacobi_singular_values(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

inline double jacobi_sigma_min(const ComplexMatrix& m) {
  const Eigen::VectorXd s = jacobi_singular_values(m);
  return s(s.size() - 1);
}

inline double lambda_min_hermitian(const ComplexMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly)
      .eigenvalues()(0);
}

// Exact singular values of [[1, 1/c], [c, -1]] from the trace and determinant
// of M^H M: s^2 = (t +- sqrt(t^2 - 16)) / 2 with t = 2 + c^2 + c^-2. The
// small one is taken as 2 / s_max to avoid cancellation.
struct ModeSingularValues {
  double large;
  double small;
};

inline ModeSingularValues mode_singular_values(double c) {
  const double t = 2.0 + c * c + 1.0 / (c * c);
  const double large = std::sqrt((t + std::sqrt(t * t - 16.0)) / 2.0);
  return {large, 2.0 / large};
}

}  // namespace hamcert::testing
