#pragma once

#include <array>
#include <string>
#include <vector>

#include "hamcert/hamiltonian.h"

namespace hamcert {

// Index k of a Pauli operator matrix sigma_k, k in {0, 1, 2, 3}.
class PauliIndex {
 public:
  // Throws InvalidInput outside 0..3.
  explicit PauliIndex(int k);
  int value() const { return k_; }

  static std::array<PauliIndex, 4> all();

  friend bool operator==(PauliIndex, PauliIndex) = default;

 private:
  int k_;
};

// Block Pauli matrices on X x X with X = C^n:
//   sigma_0 = [[I, 0], [0, I]]     sigma_1 = [[0, I], [I, 0]]
//   sigma_2 = [[0, -iI], [iI, 0]]  sigma_3 = [[I, 0], [0, -I]]
ComplexMatrix pauli(PauliIndex k, Eigen::Index n);

// J = [[0, I], [-I, 0]] = i sigma_2.
ComplexMatrix symplectic_unit(Eigen::Index n);

// +1 when sigma_1 commutes with sigma_k, -1 when they anticommute. Derived
// from the matrices themselves and cross-checked against the known table.
int epsilon_1k(PauliIndex k);

// sigma_k (i eps_1k H) sigma_k^H.
ComplexMatrix pauli_conjugate(const HamiltonianBlocks& blocks, PauliIndex k);

// Im <j t x, x> with <u, v> = v^H u.
double imag_form(const ComplexMatrix& j, const ComplexMatrix& t,
                 const ComplexVector& x);

// Least eigenvalue of the Hermitian matrix (j t - (j t)^H) / 2i, i.e. the
// infimum of Im <j t x, x> over unit x. t is j-dissipative iff this is >= 0.
double dissipativity_margin(const ComplexMatrix& j, const ComplexMatrix& t);

struct PauliIdentity {
  std::string name;
  bool holds = false;
};

// The algebraic identities of the block Pauli matrices at size n, each
// checked with exact (==) equality: sigma_k^H = sigma_k^-1 = sigma_k,
// the cyclic products, J = i sigma_2, and the eps_1k table.
std::vector<PauliIdentity> verify_pauli_identities(Eigen::Index n);

}  // namespace hamcert
