#pragma once

#include <utility>
#include <vector>

#include "hamcert/hamiltonian.h"

namespace hamcert {

// Pairing distances must stay below kPairingTolerance * ||H||_2.
inline constexpr double kPairingTolerance = 1e-7;
// Slack on the shift lower bound, relative to sigma_max(H - i mu).
inline constexpr double kShiftLowerBoundSlack = 1e-10;

// Greedy matching of each eigenvalue l_i with some l_j ~ -conj(l_i).
struct PairingResult {
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> distances;
  double max_distance = 0.0;
  double tolerance = 0.0;
  bool matched = false;
};

struct ShiftBoundCheck {
  double mu = 0.0;
  double sigma_min = 0.0;    // sigma_min(H - i mu)
  double lower_bound = 0.0;  // max(0, min(lambda_min(B), lambda_min(C)))
  double slack = 0.0;
  bool holds = false;
};

struct SpectralReport {
  std::vector<Complex> eigenvalues;  // sorted by real part, then imaginary
  double max_residual = 0.0;         // relative eigenpair residual
  double norm2 = 0.0;                // ||H||_2
  double imag_axis_distance = 0.0;   // min |Re l|
  // min |Re l| over the spectrum of A alone, a numerical observation for the
  // route i R in rho(A).
  double a_imag_axis_distance = 0.0;
  double j_symmetry_defect = 0.0;    // ||H^H - J H J||_F / ||H||_2
  PairingResult pairing;
  // Eigenvalues were recomputed by eigenvalues_extended because the
  // double-precision ones failed to pair (defective eigenvalues).
  bool extended_precision = false;
  std::vector<ShiftBoundCheck> shift_bound_checks;  // nonnegative input only
};

// ||H^H - J H J||_F relative to ||H||_2 (0 for H = 0).
double j_symmetry_defect(const HamiltonianBlocks& blocks);

PairingResult pair_spectrum(const std::vector<Complex>& eigenvalues,
                            double tolerance);

// Eigenvalues, residuals, pairing and imaginary-axis distance; nonnegative
// inputs also get shift-bound checks on the default grid. When the
// double-precision eigenvalues do not pair, they are replaced by extended
// precision ones (max_residual still refers to the double eigenpairs).
SpectralReport spectrum(const HamiltonianBlocks& blocks);

// Recomputes the pairing from report.eigenvalues. Throws SymmetryViolation
// when some pairing distance exceeds kPairingTolerance * report.norm2.
PairingResult check_symmetry(const SpectralReport& report);

// {0, +-s/2, +-s, +-2s, +-10s} with s = ||H||_2.
std::vector<double> default_mu_grid(const HamiltonianBlocks& blocks);

// sigma_min(H - i mu) >= min(lambda_min(B), lambda_min(C)) for each mu.
// Requires nonnegative blocks (InvalidInput otherwise); throws
// BoundViolation with the offending singular vector.
std::vector<ShiftBoundCheck> shift_lower_bound(const HamiltonianBlocks& blocks,
                                               const std::vector<double>& mus);

// min |Re l| over the spectrum of H. For nonnegative blocks with B and C
// positive definite, throws ClearanceViolation unless the clearance is
// positive and at least min(lambda_min(B), lambda_min(C)) - 1e-8 ||H||_2.
double imag_axis_clearance(const HamiltonianBlocks& blocks);

}  // namespace hamcert
