#include <gtest/gtest.h>

#include "hamcert/errors.h"
#include "hamcert/pauli.h"
#include "hamcert/sweep.h"
#include "support.h"

namespace hamcert {
namespace {

using testing::mat;

const Complex I(0.0, 1.0);

TEST(Pauli, IndexRange) {
  EXPECT_THROW(PauliIndex(4), InvalidInput);
  EXPECT_THROW(PauliIndex(-1), InvalidInput);
  EXPECT_EQ(PauliIndex::all()[3].value(), 3);
}

TEST(Pauli, SigmaZeroIsIdentity) {
  EXPECT_EQ(pauli(PauliIndex(0), 3), ComplexMatrix::Identity(6, 6));
}

TEST(Pauli, ScalarMatrices) {
  EXPECT_EQ(pauli(PauliIndex(1), 1), mat({{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(pauli(PauliIndex(2), 1), mat({{0.0, -I}, {I, 0.0}}));
  EXPECT_EQ(pauli(PauliIndex(3), 1), mat({{1.0, 0.0}, {0.0, -1.0}}));
}

TEST(Pauli, ISigmaTwoIsJ) {
  for (int n : {1, 4, 16}) {
    const ComplexMatrix j = I * pauli(PauliIndex(2), n);
    EXPECT_EQ(j, symplectic_unit(n));
    ComplexMatrix expected = ComplexMatrix::Zero(2 * n, 2 * n);
    expected.topRightCorner(n, n).setIdentity();
    expected.bottomLeftCorner(n, n) = -ComplexMatrix::Identity(n, n);
    EXPECT_EQ(j, expected);
  }
}

// Products computed here from the matrices, not from the library's table.
TEST(Pauli, CyclicProductsExact) {
  for (int n : {1, 4, 16}) {
    const ComplexMatrix s1 = pauli(PauliIndex(1), n);
    const ComplexMatrix s2 = pauli(PauliIndex(2), n);
    const ComplexMatrix s3 = pauli(PauliIndex(3), n);
    const ComplexMatrix id = ComplexMatrix::Identity(2 * n, 2 * n);
    EXPECT_EQ(s1 * s1, id);
    EXPECT_EQ(s2 * s2, id);
    EXPECT_EQ(s3 * s3, id);
    EXPECT_EQ(s1 * s2, I * s3);
    EXPECT_EQ(s2 * s1, -I * s3);
    EXPECT_EQ(s2 * s3, I * s1);
    EXPECT_EQ(s3 * s2, -I * s1);
    EXPECT_EQ(s3 * s1, I * s2);
    EXPECT_EQ(s1 * s3, -I * s2);
  }
}

TEST(Pauli, EpsilonTable) {
  EXPECT_EQ(epsilon_1k(PauliIndex(0)), 1);
  EXPECT_EQ(epsilon_1k(PauliIndex(1)), 1);
  EXPECT_EQ(epsilon_1k(PauliIndex(2)), -1);
  EXPECT_EQ(epsilon_1k(PauliIndex(3)), -1);
}

TEST(Pauli, LibraryIdentitiesHold) {
  for (int n : {1, 4, 16}) {
    const auto ids = verify_pauli_identities(n);
    EXPECT_GE(ids.size(), 10u);
    for (const auto& id : ids) EXPECT_TRUE(id.holds) << id.name << " at n=" << n;
  }
}

TEST(PauliConjugate, SigmaZeroGivesIH) {
  const auto blocks = testing::example_3_1();
  EXPECT_EQ(pauli_conjugate(blocks, PauliIndex(0)), I * blocks.assemble());
}

TEST(PauliConjugate, SigmaThreeOnExample31) {
  const auto got = pauli_conjugate(testing::example_3_1(), PauliIndex(3));
  EXPECT_EQ(got, -I * mat({{1.0, -1.0}, {1.0, -1.0}}));
}

TEST(PauliConjugate, SigmaOneSwapsBlockRoles) {
  Rng rng = trial_rng(41, 0);
  const auto blocks = random_hamiltonian_blocks(rng, 3);
  const ComplexMatrix got = pauli_conjugate(blocks, PauliIndex(1));
  ComplexMatrix expected(6, 6);
  expected << -blocks.a().adjoint(), blocks.c(), blocks.b(), blocks.a();
  EXPECT_LE((got - I * expected).norm(), 1e-14);
}

TEST(PauliConjugate, AllIndicesMatchDenseProduct) {
  Rng rng = trial_rng(43, 0);
  const auto blocks = random_hamiltonian_blocks(rng, 4);
  const ComplexMatrix h = blocks.assemble();
  for (PauliIndex k : PauliIndex::all()) {
    const ComplexMatrix s = pauli(k, 4);
    const ComplexMatrix expected = s * (I * double(epsilon_1k(k)) * h) * s.adjoint();
    EXPECT_LE((pauli_conjugate(blocks, k) - expected).norm(), 1e-13) << k.value();
  }
}

TEST(QuadraticForm, BlockIdentityOverRandomCases) {
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = trial_rng(47, trial);
    const int n = 1 + trial % 8;
    const auto blocks = trial % 2 ? random_nonnegative_blocks(rng, n)
                                  : random_hamiltonian_blocks(rng, n);
    const ComplexVector x = gaussian_vector(rng, 2 * n);
    const ComplexVector x1 = x.head(n);
    const ComplexVector x2 = x.tail(n);
    const double expected = (x1.dot(blocks.c() * x1) + x2.dot(blocks.b() * x2)).real();
    const double got =
        imag_form(pauli(PauliIndex(1), n), I * blocks.assemble(), x);
    const double scale = blocks.assemble().norm() * x.squaredNorm();
    ASSERT_NEAR(got, expected, 1e-10 * scale) << "trial " << trial;
  }
}

TEST(Dissipativity, MarginIsSmallestDiagonalBlockEigenvalue) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = trial_rng(53, trial);
    const int n = 1 + trial % 6;
    const auto blocks = random_hamiltonian_blocks(rng, n);
    const double expected = std::min(testing::lambda_min_hermitian(blocks.b()),
                                     testing::lambda_min_hermitian(blocks.c()));
    const double got =
        dissipativity_margin(pauli(PauliIndex(1), n), I * blocks.assemble());
    ASSERT_NEAR(got, expected, 1e-10 * (1.0 + blocks.assemble().norm()));
  }
}

TEST(Dissipativity, NonnegativeBlocksAreDissipative) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = trial_rng(59, trial);
    const auto blocks = random_nonnegative_blocks(rng, 1 + trial % 6);
    const double margin = dissipativity_margin(
        pauli(PauliIndex(1), blocks.n()), I * blocks.assemble());
    ASSERT_GE(margin, -1e-10 * blocks.assemble().norm());
  }
}

}  // namespace
}  // namespace hamcert
