#include "hamcert/pauli.h"

#include <string>

namespace hamcert {

PauliIndex::PauliIndex(int k) : k_(k) {
  if (k < 0 || k > 3) {
    throw InvalidInput("Pauli index must be in 0..3, got " + std::to_string(k));
  }
}

std::array<PauliIndex, 4> PauliIndex::all() {
  return {PauliIndex(0), PauliIndex(1), PauliIndex(2), PauliIndex(3)};
}

ComplexMatrix pauli(PauliIndex k, Eigen::Index n) {
  if (n < 1) throw InvalidInput("Pauli matrices need n >= 1");
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Complex i(0.0, 1.0);
  ComplexMatrix s = ComplexMatrix::Zero(2 * n, 2 * n);
  switch (k.value()) {
    case 0:
      s.topLeftCorner(n, n) = id;
      s.bottomRightCorner(n, n) = id;
      break;
    case 1:
      s.topRightCorner(n, n) = id;
      s.bottomLeftCorner(n, n) = id;
      break;
    case 2:
      s.topRightCorner(n, n) = -i * id;
      s.bottomLeftCorner(n, n) = i * id;
      break;
    case 3:
      s.topLeftCorner(n, n) = id;
      s.bottomRightCorner(n, n) = -id;
      break;
  }
  return s;
}

ComplexMatrix symplectic_unit(Eigen::Index n) {
  return Complex(0.0, 1.0) * pauli(PauliIndex(2), n);
}

int epsilon_1k(PauliIndex k) {
  static constexpr std::array<int, 4> kTable = {+1, +1, -1, -1};
  const ComplexMatrix s1 = pauli(PauliIndex(1), 1);
  const ComplexMatrix sk = pauli(k, 1);
  const ComplexMatrix left = s1 * sk;
  const ComplexMatrix right = sk * s1;
  int eps = 0;
  if (left == right) {
    eps = +1;
  } else if (left == -right) {
    eps = -1;
  }
  if (eps != kTable[static_cast<std::size_t>(k.value())]) {
    throw NumericalFailure("epsilon table disagrees with commutation test for k=" +
                           std::to_string(k.value()));
  }
  return eps;
}

ComplexMatrix pauli_conjugate(const HamiltonianBlocks& blocks, PauliIndex k) {
  const ComplexMatrix s = pauli(k, blocks.n());
  const Complex factor(0.0, static_cast<double>(epsilon_1k(k)));
  return s * (factor * blocks.assemble()) * s.adjoint();
}

double imag_form(const ComplexMatrix& j, const ComplexMatrix& t,
                 const ComplexVector& x) {
  return x.dot(j * (t * x)).imag();
}

double dissipativity_margin(const ComplexMatrix& j, const ComplexMatrix& t) {
  const ComplexMatrix jt = j * t;
  const ComplexMatrix im_part =
      (jt - jt.adjoint()) / Complex(0.0, 2.0);
  return hermitian_eigenvalues(im_part)(0);
}

std::vector<PauliIdentity> verify_pauli_identities(Eigen::Index n) {
  if (n < 1) throw InvalidInput("Pauli identities need n >= 1");
  const Complex i(0.0, 1.0);
  const ComplexMatrix id = ComplexMatrix::Identity(2 * n, 2 * n);
  std::array<ComplexMatrix, 4> s;
  for (PauliIndex k : PauliIndex::all()) s[k.value()] = pauli(k, n);

  std::vector<PauliIdentity> out;
  for (int k = 0; k < 4; ++k) {
    const std::string sk = "sigma_" + std::to_string(k);
    out.push_back({sk + "^H = " + sk, s[k].adjoint() == s[k]});
    out.push_back({sk + "^2 = I", s[k] * s[k] == id});
  }
  // sigma_a sigma_b = i sigma_c = -sigma_b sigma_a for (a, b, c) cyclic.
  constexpr std::array<std::array<int, 3>, 3> kCyclic = {{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  for (const auto& [a, b, c] : kCyclic) {
    const std::string name = "sigma_" + std::to_string(a) + " sigma_" +
                             std::to_string(b) + " = i sigma_" + std::to_string(c);
    out.push_back({name, s[a] * s[b] == i * s[c]});
    out.push_back({"sigma_" + std::to_string(b) + " sigma_" + std::to_string(a) +
                       " = -i sigma_" + std::to_string(c),
                   s[b] * s[a] == -i * s[c]});
  }
  const ComplexMatrix j = symplectic_unit(n);
  ComplexMatrix j_blocks = ComplexMatrix::Zero(2 * n, 2 * n);
  j_blocks.topRightCorner(n, n) = ComplexMatrix::Identity(n, n);
  j_blocks.bottomLeftCorner(n, n) = -ComplexMatrix::Identity(n, n);
  out.push_back({"J = i sigma_2 = [[0, I], [-I, 0]]", j == j_blocks});
  out.push_back({"J^2 = -I", j * j == -id});
  out.push_back({"J^H = -J", j.adjoint() == -j});

  for (PauliIndex k : PauliIndex::all()) {
    const ComplexMatrix left = s[1] * s[k.value()];
    const ComplexMatrix right = s[k.value()] * s[1];
    bool holds = false;
    try {
      const int eps = epsilon_1k(k);
      holds = eps == 1 ? left == right : left == -right;
    } catch (const NumericalFailure&) {
    }
    out.push_back({"eps_1" + std::to_string(k.value()) + " matches commutation", holds});
  }
  return out;
}

}  // namespace hamcert
