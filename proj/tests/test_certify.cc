#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hamcert/casestudies.h"
#include "hamcert/certify.h"
#include "hamcert/errors.h"
#include "hamcert/sweep.h"
#include "support.h"

namespace hamcert {
namespace {

using testing::eye;
using testing::scalar;
using testing::zeros;

const Certificate& find(const std::vector<Certificate>& certs, Criterion c) {
  for (const Certificate& cert : certs) {
    if (cert.criterion == c) return cert;
  }
  throw std::logic_error("criterion missing");
}

bool is_gated(Criterion c) { return c != Criterion::DirectSigmaMin; }

TEST(Direct, Example31IsSingularWithKernelWitness) {
  const Certificate cert = certify_direct(testing::example_3_1());
  EXPECT_EQ(cert.verdict, Verdict::Singular);
  const ComplexMatrix& w = cert.witnesses.at("approx_null");
  ASSERT_EQ(w.rows(), 2);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(w(0, 0) - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(w(1, 0) + r), 0.0, 1e-12);
  EXPECT_LE(cert.value("approx_null_residual"), 1e-12);
}

TEST(Direct, IdentityAIsInvertible) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(3), zeros(3), zeros(3));
  const Certificate cert = certify_direct(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_NEAR(cert.value("sigma_min_H"), 1.0, 1e-15);
}

TEST(Direct, AgreesWithEigenvalueOracleOnPdInstances) {
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng = trial_rng(61, trial);
    const auto blocks = random_pd_blocks(rng, 4);
    const ComplexMatrix h = blocks.assemble();
    const Certificate cert = certify_direct(blocks);
    ASSERT_EQ(cert.verdict, Verdict::Invertible) << "trial " << trial;
    const auto ev = Eigen::ComplexEigenSolver<ComplexMatrix>(h, false).eigenvalues();
    ASSERT_GT(ev.cwiseAbs().minCoeff(), 1e-10 * testing::jacobi_singular_values(h)(0));
  }
}

TEST(Direct, SingularWitnessResidualContract) {
  Rng rng = trial_rng(67, 0);
  const ComplexMatrix a = testing::mat({{0.0, 1.0}, {0.0, 0.0}});
  const auto blocks = HamiltonianBlocks::from_blocks(a, zeros(2), zeros(2));
  const Certificate cert = certify_direct(blocks);
  ASSERT_EQ(cert.verdict, Verdict::Singular);
  const ComplexVector x = cert.witnesses.at("approx_null").col(0);
  EXPECT_NEAR(x.norm(), 1.0, 1e-14);
  EXPECT_LE((blocks.assemble() * x).norm(),
            kInvertibilityTolerance * cert.value("sigma_max_H"));
}

TEST(Gating, Example31GatedCriteriaAreInapplicable) {
  const auto certs = certify_all(testing::example_3_1());
  ASSERT_EQ(certs.size(), 7u);
  for (const Certificate& c : certs) {
    if (is_gated(c.criterion)) {
      EXPECT_EQ(c.verdict, Verdict::Inapplicable) << to_string(c.criterion);
      ASSERT_FALSE(c.notes.empty());
      EXPECT_NE(c.notes[0].find("NonnegativityViolation"), std::string::npos);
    }
  }
  EXPECT_EQ(overall_verdict(certs), Verdict::Singular);
}

TEST(Gating, BypassExposesDisagreement) {
  CertifyOptions opts;
  opts.bypass_nonnegativity_gate = true;
  const auto certs = certify_each(testing::example_3_1(), opts);
  EXPECT_EQ(find(certs, Criterion::DirectSigmaMin).verdict, Verdict::Singular);
  const Certificate& rank = find(certs, Criterion::RankCriterion);
  EXPECT_EQ(rank.verdict, Verdict::Invertible);
  EXPECT_TRUE(rank.flag("gate_bypassed"));
  EXPECT_EQ(find(certs, Criterion::KernelIntersection).verdict, Verdict::Invertible);
  EXPECT_TRUE(find_inconsistency(certs).has_value());
  EXPECT_THROW(certify_all(testing::example_3_1(), opts), ConsistencyFailure);
}

TEST(Rank, IdentityA) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(3), zeros(3), zeros(3));
  const Certificate cert = certify_rank(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_EQ(cert.value("rank_AhC"), 3.0);
  EXPECT_EQ(cert.value("rank_BmA"), 3.0);
  EXPECT_TRUE(cert.flag("row_column_agree"));
}

TEST(Rank, ZeroAUnitBC) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(2), eye(2), eye(2));
  const Certificate cert = certify_rank(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_EQ(cert.value("rank_AhC"), 2.0);
  EXPECT_EQ(cert.value("rank_BmA"), 2.0);
  // H = [[0, I], [I, 0]] has sigma_min = 1.
  EXPECT_NEAR(certify_direct(blocks).value("sigma_min_H"), 1.0, 1e-15);
}

TEST(Kernels, ZeroBlocksHaveFullKernels) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(3), zeros(3), zeros(3));
  const Certificate cert = certify_kernels(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Singular);
  EXPECT_EQ(cert.value("dim_ker_A_cap_ker_C"), 3.0);
  EXPECT_EQ(cert.value("dim_ker_B_cap_ker_Ah"), 3.0);
  EXPECT_EQ(cert.value("dim_ker_H"), 6.0);
  EXPECT_TRUE(cert.flag("factorization_holds"));
}

TEST(Kernels, NegatedPlateBlocksAreInvertible) {
  const auto blocks = plate_hamiltonian({.m = 4, .stiffness = 1.0}).negated();
  const Certificate cert = certify_kernels(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_GT(testing::jacobi_sigma_min(blocks.assemble()), 0.5);
}

TEST(Kernels, UnitBCWithArbitraryA) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = trial_rng(71, trial);
    const int n = 1 + trial % 6;
    const auto blocks =
        HamiltonianBlocks::from_blocks(gaussian_matrix(rng, n, n), eye(n), eye(n));
    ASSERT_EQ(certify_kernels(blocks).verdict, Verdict::Invertible);
    ASSERT_EQ(certify_direct(blocks).verdict, Verdict::Invertible);
  }
}

TEST(Kernels, PlantedKernelsFactorize) {
  // A = diag(1, 0, 0), B = diag(0, 1, 0), C = diag(0, 0, 0):
  // N(A) n N(C) = span{e2, e3}, N(B) n N(A^H) = span{e3}.
  ComplexMatrix a = zeros(3), b = zeros(3);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  const auto blocks = HamiltonianBlocks::from_blocks(a, b, zeros(3));
  const Certificate cert = certify_kernels(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Singular);
  EXPECT_EQ(cert.value("dim_ker_A_cap_ker_C"), 2.0);
  EXPECT_EQ(cert.value("dim_ker_B_cap_ker_Ah"), 1.0);
  EXPECT_EQ(cert.value("dim_ker_H"), 3.0);
  EXPECT_LE(cert.value("product_residual_max"), 1e-15);
  // Oracle: kernel dimension of the assembled matrix by Jacobi SVD.
  const Eigen::VectorXd s = testing::jacobi_singular_values(blocks.assemble());
  EXPECT_EQ((s.array() <= 1e-12).count(), 3);
}

TEST(Stacked, AgreesWithRankOnSweepInstances) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = trial_rng(73, trial);
    const auto blocks = random_nonnegative_blocks(rng, 1 + trial % 8);
    const auto certs = certify_each(blocks);
    ASSERT_EQ(find(certs, Criterion::StackedLowerBound).verdict,
              find(certs, Criterion::RankCriterion).verdict)
        << "trial " << trial;
  }
}

TEST(SchurA, ScalarCase) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(1), eye(1), eye(1));
  CertifyOptions opts;
  opts.lambda = 2.0;
  const Certificate cert = certify_schur_a(blocks, opts);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_LE(cert.value("residual_variant2"), 1e-12);
  EXPECT_LE(cert.value("residual_variant3"), 1e-12);
  // S_1 = 1 + 2 + 1 * (1 - 2)^-1 * 1 = 2 computed independently here.
  const Complex s1 = 1.0 + 2.0 + 1.0 / (1.0 - 2.0);
  EXPECT_EQ(s1, Complex(2.0));
  EXPECT_EQ(cert.value("lambda_re"), 2.0);
}

TEST(SchurA, EigenvalueOfAIsRejected) {
  const auto blocks = HamiltonianBlocks::from_blocks(eye(2), eye(2), eye(2));
  CertifyOptions opts;
  opts.lambda = 1.0;
  EXPECT_THROW(certify_schur_a(blocks, opts), LambdaNotInResolvent);
}

TEST(SchurA, ZeroBlocksAreInapplicable) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(2), zeros(2), zeros(2));
  const Certificate cert = certify_schur_a(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Inapplicable);
  EXPECT_FALSE(cert.flag("zero_in_rho_A"));
  EXPECT_FALSE(cert.flag("zero_in_rho_B_and_rho_C"));
}

TEST(SchurBC, ZeroAReducesToShiftedC) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(2), eye(2), eye(2));
  CertifyOptions opts;
  opts.lambda = -1.0;
  const Certificate cert = certify_schur_bc(blocks, opts);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_EQ(cert.value("residual_variant2"), 0.0);
  EXPECT_EQ(cert.value("residual_variant3"), 0.0);
}

TEST(SchurBC, CounterexampleTruncation) {
  const double gamma = std::numbers::pi * std::numbers::pi;
  const auto blocks = counterexample_family({.gamma = gamma, .m = 8});
  const Certificate cert = certify_schur_bc(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Invertible);
  EXPECT_TRUE(cert.flag("zero_in_rho_B"));
  EXPECT_TRUE(cert.flag("zero_in_rho_C"));
  EXPECT_LE(cert.value("residual_variant2"), 1e-10 * (1.0 + gamma + 8.0));
  EXPECT_LE(cert.value("residual_variant3"), 1e-10 * (1.0 + gamma + 8.0));
  // The direct criterion still sees sigma_min near 2 / (gamma + m).
  EXPECT_LT(cert.value("sigma_min_H"), 2.0 / (gamma + 8.0) * (1.0 + 1e-6));
}

TEST(SchurBC, SingularBIsInapplicable) {
  ComplexMatrix b = eye(2);
  b(1, 1) = 0.0;
  const auto blocks = HamiltonianBlocks::from_blocks(eye(2), b, eye(2));
  const Certificate cert = certify_schur_bc(blocks);
  EXPECT_EQ(cert.verdict, Verdict::Inapplicable);
  EXPECT_NE(cert.notes.at(0).find("HypothesisNotMet"), std::string::npos);
}

TEST(RangeShift, ZeroBlocks) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(2), zeros(2), zeros(2));
  const Certificate cert = certify_range_shift(blocks);
  EXPECT_NEAR(cert.value("sigma_min_H_plus_sigma1"), 1.0, 1e-15);
  EXPECT_TRUE(cert.flag("range_is_full"));
  EXPECT_EQ(cert.verdict, Verdict::Singular);  // H itself is not bounded below
}

TEST(RangeShift, LowerBoundOverRandomNonnegativeBlocks) {
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = trial_rng(79, trial);
    const int n = 1 + trial % 8;
    const auto blocks = random_nonnegative_blocks(rng, n);
    ComplexMatrix shifted = blocks.assemble();
    shifted.topRightCorner(n, n) += eye(n);
    shifted.bottomLeftCorner(n, n) += eye(n);
    ASSERT_GE(testing::jacobi_sigma_min(shifted), 1.0 - 1e-10) << "trial " << trial;
    ASSERT_TRUE(certify_range_shift(blocks).flag("shift_bound_holds"));
  }
}

TEST(RangeShift, Example31IsInapplicable) {
  EXPECT_EQ(certify_range_shift(testing::example_3_1()).verdict, Verdict::Inapplicable);
}

TEST(CertifyAll, PdBlocksUnanimouslyInvertible) {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = trial_rng(83, trial);
    const auto certs = certify_all(random_pd_blocks(rng, 1 + trial % 6));
    for (const Certificate& c : certs) {
      if (c.applicable()) ASSERT_EQ(c.verdict, Verdict::Invertible);
    }
    ASSERT_EQ(find(certs, Criterion::RankCriterion).verdict, Verdict::Invertible);
    ASSERT_EQ(find(certs, Criterion::SchurIdentityBC).verdict, Verdict::Invertible);
  }
}

TEST(CertifyAll, ZeroBlocksUnanimouslySingular) {
  const auto blocks = HamiltonianBlocks::from_blocks(zeros(2), zeros(2), zeros(2));
  for (const Certificate& c : certify_all(blocks)) {
    if (c.applicable()) EXPECT_EQ(c.verdict, Verdict::Singular) << to_string(c.criterion);
  }
}

TEST(CertifyAll, RecordsTolerances) {
  CertifyOptions opts;
  opts.rel_tol = 1e-8;
  for (const Certificate& c : certify_all(testing::example_3_1(), opts)) {
    EXPECT_EQ(c.tolerances.at("rel_tol"), 1e-8);
  }
}

TEST(Certificate, MissingValueThrows) {
  const Certificate cert = certify_direct(testing::example_3_1());
  EXPECT_ANY_THROW(cert.value("no_such_key"));
}

}  // namespace
}  // namespace hamcert
