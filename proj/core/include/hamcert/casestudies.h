#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamcert/hamiltonian.h"

namespace hamcert {

enum class PlateScheme { SineSpectral, FiniteDifference };

std::string_view to_string(PlateScheme s);
// Accepts "spectral" / "SineSpectral" and "fd" / "FiniteDifference".
PlateScheme parse_plate_scheme(std::string_view name);

// Simply supported plate strip with m retained transverse modes.
struct PlateConfig {
  int m = 4;
  double stiffness = 1.0;  // D > 0
  PlateScheme scheme = PlateScheme::SineSpectral;

  void validate() const;  // throws InvalidInput
};

// Truncated unbounded operator C_m = diag(gamma + k), k = 1..m.
struct CounterexampleConfig {
  double gamma = 1.0;  // > 0
  int m = 1;

  void validate() const;
};

// m x m discretization of T f = -f'' on (0, 1) with f(0) = f(1) = 0:
// diag((k pi)^2) for the sine scheme, (m+1)^2 tridiag(-1, 2, -1) for finite
// differences.
ComplexMatrix dirichlet_laplacian(int m, PlateScheme scheme);

// Closed-form eigenvalues of dirichlet_laplacian, ascending.
std::vector<double> dirichlet_eigenvalues(int m, PlateScheme scheme);

// A = [[0, I], [T, 0]], B = diag(0, -I/D), C = 0, each of size 2m. B <= 0, so
// the result is not nonnegative while its negation is.
HamiltonianBlocks plate_hamiltonian(const PlateConfig& cfg);

struct PlateReport {
  PlateConfig config;
  bool a_squared_exact = false;     // A * A == diag(T, T) bit for bit
  double a_squared_defect = 0.0;    // ||A^2 - diag(T, T)||_F
  bool negated_nonnegative = false;
  std::vector<Complex> eigenvalues;  // computed, sorted
  std::vector<double> expected;      // +-sqrt(t_k), each twice, sorted
  double max_eigenvalue_error = 0.0;
  double max_residual = 0.0;
  double clearance = 0.0;            // min |Re l| over sigma(H)
  double expected_clearance = 0.0;   // sqrt(t_1)
  std::vector<std::string> notes;
};

PlateReport plate_claim_check(const PlateConfig& cfg);

// A = I, B = C_m^-1, C = C_m.
HamiltonianBlocks counterexample_family(const CounterexampleConfig& cfg);

struct TrendRow {
  int m = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double product = 0.0;          // sigma_min * (gamma + m)
  double condition = 0.0;        // sigma_max / sigma_min
  double top_mode_weight = 0.0;  // share of ||x||^2 on mode m of the witness
  bool invertible = false;       // direct criterion at the default tolerance
};

struct TrendReport {
  double gamma = 0.0;
  std::vector<TrendRow> rows;
  ComplexVector final_witness;  // smallest right singular vector at max m
  double final_witness_residual = 0.0;
  bool strictly_decreasing = false;
};

// sigma_min(H_m) for each m in m_list (strictly ascending). Throws
// TrendViolation when the sequence does not strictly decrease or exceeds
// 2 / (gamma + m) * (1 + 1e-6).
TrendReport counterexample_trend(double gamma, const std::vector<int>& m_list);

}  // namespace hamcert
