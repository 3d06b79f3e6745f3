#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "hamcert/dense.h"

namespace hamcert {

namespace {
using Real100 = boost::multiprecision::cpp_bin_float_100;
using Complex100 = std::complex<Real100>;
using Matrix100 = Eigen::Matrix<Complex100, Eigen::Dynamic, Eigen::Dynamic>;
}  // namespace

ComplexVector eigenvalues_extended(const ComplexMatrix& m) {
  require_finite(m, "eigenvalues_extended");
  if (m.rows() != m.cols()) throw InvalidInput("eigenvalues_extended: matrix must be square");
  Matrix100 wide(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      wide(i, j) = Complex100(m(i, j).real(), m(i, j).imag());
    }
  }
  Eigen::ComplexEigenSolver<Matrix100> solver(wide, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("extended-precision eigenvalue iteration did not converge");
  }
  ComplexVector out(m.rows());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const Complex100& z = solver.eigenvalues()(i);
    out(i) = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

}  // namespace hamcert
