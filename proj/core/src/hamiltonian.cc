#include "hamcert/hamiltonian.h"

#include <cmath>

namespace hamcert {
namespace {

double hermitian_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

double hermitian_threshold(const ComplexMatrix& m) {
  return kHermitianTolerance * (1.0 + m.norm());
}

bool psd_within_tolerance(double lambda_min, const ComplexMatrix& m) {
  return lambda_min >= -kPsdTolerance * norm2(m);
}

}  // namespace

HamiltonianBlocks::HamiltonianBlocks(ComplexMatrix a, ComplexMatrix b,
                                     ComplexMatrix c, double correction)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      hermitian_correction_(correction) {
  if (n() > 0) {
    lambda_min_b_ = hermitian_eigenvalues(b_)(0);
    lambda_min_c_ = hermitian_eigenvalues(c_)(0);
  }
  nonnegative_ = psd_within_tolerance(lambda_min_b_, b_) &&
                 psd_within_tolerance(lambda_min_c_, c_);
}

HamiltonianBlocks HamiltonianBlocks::from_blocks(ComplexMatrix a,
                                                 ComplexMatrix b,
                                                 ComplexMatrix c) {
  const Eigen::Index n = a.rows();
  if (n == 0) throw InvalidInput("Hamiltonian blocks must be at least 1x1");
  for (const ComplexMatrix* m : {&a, &b, &c}) {
    if (m->rows() != n || m->cols() != n) {
      throw InvalidInput("blocks A, B, C must all be n x n");
    }
  }
  require_finite(a, "block A");
  require_finite(b, "block B");
  require_finite(c, "block C");

  const double db = hermitian_defect(b);
  if (db > hermitian_threshold(b)) throw NotHamiltonian("B = B^H", db);
  const double dc = hermitian_defect(c);
  if (dc > hermitian_threshold(c)) throw NotHamiltonian("C = C^H", dc);

  ComplexMatrix bs = 0.5 * (b + b.adjoint());
  ComplexMatrix cs = 0.5 * (c + c.adjoint());
  const double correction = std::hypot((bs - b).norm(), (cs - c).norm());
  return HamiltonianBlocks(std::move(a), std::move(bs), std::move(cs),
                           correction);
}

HamiltonianBlocks HamiltonianBlocks::decompose(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0 || h.rows() % 2 != 0) {
    throw NotHamiltonian("square matrix of even dimension", 0.0);
  }
  require_finite(h, "Hamiltonian");
  const Eigen::Index n = h.rows() / 2;
  ComplexMatrix a = h.topLeftCorner(n, n);
  const ComplexMatrix lower_right = h.bottomRightCorner(n, n);
  const double da = (lower_right + a.adjoint()).norm();
  if (da > kHermitianTolerance * (1.0 + a.norm())) {
    throw NotHamiltonian("lower-right block = -A^H", da);
  }
  return from_blocks(std::move(a), h.topRightCorner(n, n),
                     h.bottomLeftCorner(n, n));
}

ComplexMatrix HamiltonianBlocks::assemble() const {
  const Eigen::Index k = n();
  ComplexMatrix h(2 * k, 2 * k);
  h.topLeftCorner(k, k) = a_;
  h.topRightCorner(k, k) = b_;
  h.bottomLeftCorner(k, k) = c_;
  h.bottomRightCorner(k, k) = -a_.adjoint();
  return h;
}

HamiltonianBlocks HamiltonianBlocks::negated() const {
  return HamiltonianBlocks(-a_, -b_, -c_, hermitian_correction_);
}

HamiltonianBlocks HamiltonianBlocks::shifted_imaginary(double mu) const {
  // H - i mu = [[A - i mu, B], [C, -(A - i mu)^H]].
  ComplexMatrix a = a_;
  a.diagonal().array() -= Complex(0.0, mu);
  return HamiltonianBlocks(std::move(a), b_, c_, hermitian_correction_);
}

}  // namespace hamcert
