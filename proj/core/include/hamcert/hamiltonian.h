#pragma once

#include "hamcert/dense.h"

namespace hamcert {

// Absolute-plus-relative Hermiticity tolerance: ||M - M^H||_F must not
// exceed kHermitianTolerance * (1 + ||M||_F).
inline constexpr double kHermitianTolerance = 1e-12;
// B, C count as nonnegative when lambda_min >= -kPsdTolerance * ||.||_2.
inline constexpr double kPsdTolerance = 1e-10;

// The blocks (A, B, C) of H = [[A, B], [C, -A^H]] with B, C Hermitian.
// Instances are always valid; B and C are stored exactly Hermitian.
class HamiltonianBlocks {
 public:
  // Validates shapes, finiteness and Hermiticity of B and C. Throws
  // NotHamiltonian or InvalidInput.
  static HamiltonianBlocks from_blocks(ComplexMatrix a, ComplexMatrix b,
                                       ComplexMatrix c);

  // Extracts blocks from a square matrix of even dimension, checking that the
  // lower-right block equals -A^H and the off-diagonal blocks are Hermitian.
  static HamiltonianBlocks decompose(const ComplexMatrix& h);

  Eigen::Index n() const { return a_.rows(); }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }
  const ComplexMatrix& c() const { return c_; }

  // B >= 0 and C >= 0 within kPsdTolerance.
  bool nonnegative() const { return nonnegative_; }
  double lambda_min_b() const { return lambda_min_b_; }
  double lambda_min_c() const { return lambda_min_c_; }
  // Frobenius norm of the symmetrization applied to B and C on input.
  double hermitian_correction() const { return hermitian_correction_; }

  // [[A, B], [C, -A^H]].
  ComplexMatrix assemble() const;

  // Blocks of -H, i.e. (-A, -B, -C).
  HamiltonianBlocks negated() const;

  // Blocks of H - i mu I; imaginary shifts preserve the Hamiltonian structure.
  HamiltonianBlocks shifted_imaginary(double mu) const;

 private:
  HamiltonianBlocks(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c,
                    double correction);

  ComplexMatrix a_, b_, c_;
  bool nonnegative_ = false;
  double lambda_min_b_ = 0.0;
  double lambda_min_c_ = 0.0;
  double hermitian_correction_ = 0.0;
};

inline ComplexMatrix assemble(const HamiltonianBlocks& blocks) {
  return blocks.assemble();
}

inline HamiltonianBlocks decompose(const ComplexMatrix& h) {
  return HamiltonianBlocks::decompose(h);
}

}  // namespace hamcert
