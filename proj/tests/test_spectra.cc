#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "hamcert/casestudies.h"
#include "hamcert/errors.h"
#include "hamcert/pauli.h"
#include "hamcert/spectra.h"
#include "hamcert/sweep.h"
#include "support.h"

namespace hamcert {
namespace {

using testing::eye;
using testing::zeros;

constexpr double kPi = std::numbers::pi;

TEST(Spectrum, IdentityA) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(3), zeros(3), zeros(3));
  const SpectralReport r = spectrum(blocks);
  ASSERT_EQ(r.eigenvalues.size(), 6u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(r.eigenvalues[i] + 1.0), 0.0, 1e-14);
  for (int i = 3; i < 6; ++i) EXPECT_NEAR(std::abs(r.eigenvalues[i] - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(r.imag_axis_distance, 1.0, 1e-14);
  EXPECT_TRUE(r.pairing.matched);
}

TEST(Spectrum, Example31HasDoubleZero) {
  const SpectralReport r = spectrum(testing::example_3_1());
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  // H^2 = 0, so both eigenvalues are 0 up to sqrt(eps) scatter.
  for (const Complex& z : r.eigenvalues) EXPECT_LE(std::abs(z), 1e-7);
  EXPECT_LE(r.imag_axis_distance, 1e-7);
}

TEST(Spectrum, PlateThreeModes) {
  const SpectralReport r = spectrum(plate_hamiltonian({.m = 3}));
  std::vector<double> expected;
  for (int k = 1; k <= 3; ++k) {
    for (double s : {-1.0, -1.0, 1.0, 1.0}) expected.push_back(s * k * kPi);
  }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(r.eigenvalues.size(), expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(std::abs(r.eigenvalues[i] - expected[i]), 0.0, 1e-8);
  }
  EXPECT_NEAR(r.imag_axis_distance, kPi, 1e-8);
}

ComplexMatrix j_matrix(Eigen::Index n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -ComplexMatrix::Identity(n, n);
  return j;
}

TEST(Symmetry, JConjugationOnRandomHamiltonians) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = trial_rng(89, trial);
    const int n = 1 + trial % 8;
    const auto blocks = random_hamiltonian_blocks(rng, n);
    const ComplexMatrix h = blocks.assemble();
    const ComplexMatrix j = j_matrix(n);
    const double norm = testing::jacobi_singular_values(h)(0);
    ASSERT_LE((h.adjoint() - j * h * j).norm(), 1e-12 * norm);
    ASSERT_LE(j_symmetry_defect(blocks), 1e-12);
  }
}

TEST(Symmetry, NonHamiltonianMatrixBreaksJSymmetry) {
  // Oracle sanity: a generic matrix does not satisfy H^H = J H J.
  Rng rng = trial_rng(97, 0);
  const ComplexMatrix m = gaussian_matrix(rng, 4, 4);
  const ComplexMatrix j = j_matrix(2);
  EXPECT_GT((m.adjoint() - j * m * j).norm(), 0.1);
}

TEST(Pairing, RealPair) {
  const PairingResult p = pair_spectrum({1.0, -1.0}, 1e-12);
  EXPECT_TRUE(p.matched);
  EXPECT_EQ(p.max_distance, 0.0);
}

TEST(Pairing, ImaginaryDoubleIsSelfPaired) {
  const PairingResult p = pair_spectrum({Complex(0, 1), Complex(0, 1)}, 1e-12);
  EXPECT_TRUE(p.matched);
  EXPECT_EQ(p.max_distance, 0.0);
}

TEST(Pairing, UnpairedValueFails) {
  const PairingResult p = pair_spectrum({1.0, 2.0}, 1e-3);
  EXPECT_FALSE(p.matched);
  // 1 is nearest to itself at distance 2; 2 is then left with itself at 4.
  EXPECT_NEAR(p.max_distance, 4.0, 1e-15);
}

TEST(Pairing, RandomNonnegativeInstance) {
  Rng rng = trial_rng(101, 0);
  const auto blocks = random_pd_blocks(rng, 6);
  const SpectralReport r = spectrum(blocks);
  EXPECT_TRUE(r.pairing.matched);
  EXPECT_LE(r.pairing.max_distance, kPairingTolerance * r.norm2);
  EXPECT_NO_THROW(check_symmetry(r));
}

TEST(Pairing, CheckSymmetryThrowsOnBrokenSpectrum) {
  SpectralReport r = spectrum(testing::example_3_1().negated());
  r.eigenvalues = {1.0, 2.0};
  EXPECT_THROW(check_symmetry(r), SymmetryViolation);
}

TEST(ShiftBound, UnitBC) {
  Rng rng = trial_rng(103, 0);
  const auto blocks =
      HamiltonianBlocks::from_blocks(gaussian_matrix(rng, 4, 4), eye(4), eye(4));
  const std::vector<double> mus = {0.0, 1.0, -1.0, 10.0, -10.0};
  const auto checks = shift_lower_bound(blocks, mus);
  ASSERT_EQ(checks.size(), mus.size());
  for (size_t i = 0; i < mus.size(); ++i) {
    EXPECT_TRUE(checks[i].holds);
    EXPECT_NEAR(checks[i].lower_bound, 1.0, 1e-14);
    ComplexMatrix shifted = blocks.assemble();
    shifted.diagonal().array() -= Complex(0.0, mus[i]);
    EXPECT_GE(testing::jacobi_sigma_min(shifted), 1.0 - 1e-10);
  }
}

TEST(ShiftBound, ZeroBCIsTrivial) {
  Rng rng = trial_rng(107, 0);
  const auto blocks =
      HamiltonianBlocks::from_blocks(gaussian_matrix(rng, 3, 3), zeros(3), zeros(3));
  for (const auto& c : shift_lower_bound(blocks, default_mu_grid(blocks))) {
    EXPECT_EQ(c.lower_bound, 0.0);
    EXPECT_TRUE(c.holds);
  }
}

TEST(ShiftBound, NegatedPlateBoundIsTrivial) {
  const auto blocks = plate_hamiltonian({.m = 4}).negated();
  ASSERT_TRUE(blocks.nonnegative());
  const SpectralReport r = spectrum(blocks);
  ASSERT_FALSE(r.shift_bound_checks.empty());
  for (const auto& c : r.shift_bound_checks) EXPECT_EQ(c.lower_bound, 0.0);
  // The route through 0 in rho(A) still gives clearance.
  EXPECT_NEAR(r.a_imag_axis_distance, kPi, 1e-8);
}

TEST(ShiftBound, IndefiniteInputIsRejected) {
  EXPECT_THROW(shift_lower_bound(testing::example_3_1(), {0.0}), InvalidInput);
}

TEST(ShiftBound, DefaultGrid) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(1), zeros(1), zeros(1));
  const auto grid = default_mu_grid(blocks);
  EXPECT_EQ(grid.size(), 9u);
  EXPECT_NE(std::find(grid.begin(), grid.end(), 10.0), grid.end());
  EXPECT_NE(std::find(grid.begin(), grid.end(), -0.5), grid.end());
}

TEST(Clearance, PdInstancesAreClearOfTheAxis) {
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = trial_rng(109, trial);
    const auto blocks = random_pd_blocks(rng, 1 + trial % 6);
    const double clearance = imag_axis_clearance(blocks);
    const double norm = testing::jacobi_singular_values(blocks.assemble())(0);
    ASSERT_GT(clearance, 1e-10 * norm) << "trial " << trial;
  }
}

TEST(Clearance, Example31IsZero) {
  EXPECT_LE(imag_axis_clearance(testing::example_3_1()), 1e-7);
}

TEST(Clearance, PlateIsPiForEveryModeCount) {
  for (int m : {1, 3, 8, 16}) {
    EXPECT_NEAR(imag_axis_clearance(plate_hamiltonian({.m = m})), kPi, 1e-8) << m;
  }
}

TEST(ExtendedPrecision, NilpotentJordanBlockPairs) {
  // A = P N P^-1 with N the 4x4 shift and P unit upper bidiagonal: integer
  // entries and exactly nilpotent.
  ComplexMatrix shift = zeros(4), p = eye(4), p_inv = zeros(4);
  for (int i = 0; i < 3; ++i) {
    shift(i, i + 1) = 1.0;
    p(i, i + 1) = 1.0;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) p_inv(i, j) = (j - i) % 2 ? -1.0 : 1.0;
  }
  ASSERT_EQ(p * p_inv, eye(4));
  const ComplexMatrix a = p * shift * p_inv;
  ASSERT_EQ(a * a * a * a, zeros(4));
  const auto blocks = HamiltonianBlocks::from_blocks(a, zeros(4), zeros(4));
  const SpectralReport r = spectrum(blocks);
  EXPECT_TRUE(r.pairing.matched);
  EXPECT_LE(r.pairing.max_distance, kPairingTolerance * r.norm2);
  EXPECT_LE(eigenvalues_extended(blocks.assemble()).cwiseAbs().maxCoeff(), 1e-20);
}

TEST(ExtendedPrecision, ResolvesDefectiveSweepInstances) {
  // Planted kernels give Jordan blocks at zero whose double-precision
  // eigenvalues scatter by about eps^(1/k) and fail to pair.
  SweepConfig cfg;
  int extended = 0;
  for (int i = 0; i < 300; ++i) {
    const SweepInstance inst = draw_instance(cfg, i);
    const SpectralReport r = spectrum(inst.blocks);
    ASSERT_TRUE(r.pairing.matched) << "trial " << i;
    if (r.extended_precision) ++extended;
  }
  EXPECT_GT(extended, 0);
}

TEST(ExtendedPrecision, AgreesWithDoubleOnGenericMatrix) {
  Rng rng = trial_rng(131, 0);
  const ComplexMatrix m = gaussian_matrix(rng, 6, 6);
  std::vector<Complex> a, b;
  for (const Complex& z : eigenvalues_extended(m)) a.push_back(z);
  for (const Complex& z : eig(m, false).eigenvalues) b.push_back(z);
  for (const Complex& z : a) {
    double best = INFINITY;
    for (const Complex& w : b) best = std::min(best, std::abs(z - w));
    EXPECT_LE(best, 1e-12);
  }
}

// Zero-eigenvalue property: invertible inputs keep every eigenvalue away
// from zero; singular inputs have an eigenvalue within the perturbation
// radius of a Jordan block at zero, ||H|| (64 eps)^(1/k), where k bounds the
// largest block by algebraic minus geometric multiplicity plus one.
TEST(ZeroEigenvalue, MatchesCertificateOnRandomNonnegativeInstances) {
  int singular = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = trial_rng(113, trial);
    const int n = 1 + trial % 8;
    const auto blocks = random_nonnegative_blocks(rng, n);
    const ComplexMatrix h = blocks.assemble();
    const auto ev = Eigen::ComplexEigenSolver<ComplexMatrix>(h, false).eigenvalues();
    const double min_abs = ev.cwiseAbs().minCoeff();
    const double norm = testing::jacobi_singular_values(h)(0);
    const Certificate kernels = certify_kernels(blocks);
    if (certify_direct(blocks).verdict == Verdict::Invertible) {
      ASSERT_GT(min_abs, kInvertibilityTolerance * norm) << "trial " << trial;
    } else {
      ++singular;
      const double k = 2.0 * n - kernels.value("dim_ker_H") + 1.0;
      const double radius =
          norm * std::pow(64.0 * std::numeric_limits<double>::epsilon(), 1.0 / k);
      ASSERT_LE(min_abs, radius) << "trial " << trial;
    }
  }
  EXPECT_GT(singular, 50);
}

}  // namespace
}  // namespace hamcert
