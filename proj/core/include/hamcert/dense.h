#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "hamcert/errors.h"

namespace hamcert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Multiplier applied to max(rows, cols) * machine epsilon for the default
// relative rank threshold.
inline constexpr double kRankSafetyFactor = 64.0;

struct SvdResult {
  RealVector singular_values;  // descending, nonnegative
  ComplexMatrix left_vectors;  // U, full; empty unless requested
  ComplexMatrix right_vectors; // V, full

  double sigma_max() const;
  // Smallest singular value of the square (or tall) input; for wide inputs
  // the structural zeros beyond rows() are not represented here.
  double sigma_min() const;
};

struct EigResult {
  ComplexVector eigenvalues;
  std::optional<ComplexMatrix> eigenvectors;  // columns, unit 2-norm
  // max_i ||M v_i - l_i v_i|| / (||M||_2 ||v_i||), 0 when vectors were not
  // requested.
  double max_relative_residual = 0.0;
};

// Throws InvalidInput when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

double default_rank_tolerance(const ComplexMatrix& m);

SvdResult svd(const ComplexMatrix& m, bool compute_left = false);
RealVector singular_values(const ComplexMatrix& m);

// Spectral norm.
double norm2(const ComplexMatrix& m);

// Smallest singular value counting structural zeros: for a wide r x c
// matrix (r < c) this is 0.
double sigma_min(const ComplexMatrix& m);

// Number of singular values strictly above rel_tol * sigma_max. Zero matrix
// has rank 0.
int numerical_rank(const ComplexMatrix& m, double rel_tol);
int numerical_rank(const ComplexMatrix& m);

// Orthonormal columns spanning the right singular vectors whose singular
// values are at or below rel_tol * sigma_max (structural zeros included).
// Zero columns when m has full column rank.
ComplexMatrix null_space_basis(const ComplexMatrix& m, double rel_tol);
ComplexMatrix null_space_basis(const ComplexMatrix& m);

// Absolute-threshold variants: singular values strictly above `threshold`
// count toward the rank. Used when blocks are judged against the norm of an
// enclosing matrix rather than their own.
int rank_above(const ComplexMatrix& m, double threshold);
ComplexMatrix null_space_above(const ComplexMatrix& m, double threshold);

inline constexpr double kEigResidualTolerance = 1e-9;

// Full eigendecomposition of a square matrix; every returned pair satisfies
// the residual contract or NumericalFailure is thrown.
EigResult eig(const ComplexMatrix& m, bool compute_vectors = true);

// Eigenvalues (no vectors) computed in 100-digit arithmetic from the exact
// double entries of m, then rounded. A Jordan block of size k scatters
// double-precision eigenvalues by about eps^(1/k); here the scatter shrinks
// to about 1e-100^(1/k).
ComplexVector eigenvalues_extended(const ComplexMatrix& m);

inline constexpr double kSolveResidualTolerance = 1e-10;

// Solves m * x = rhs. Throws SingularMatrix when
// sigma_min(m) <= rel_tol * sigma_max(m).
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs,
                    double rel_tol);
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is
// read.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

// True when sigma_min(m - shift I) > rel_tol * sigma_max(m - shift I).
bool in_resolvent(const ComplexMatrix& m, Complex shift, double rel_tol);

// Rotates v so its first entry of largest modulus is real and positive.
// Makes witness vectors reproducible up to rounding.
ComplexVector normalize_phase(const ComplexVector& v);

}  // namespace hamcert
