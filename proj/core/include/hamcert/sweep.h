#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hamcert/certify.h"

namespace hamcert {

using Rng = std::mt19937_64;

// Generator for trial `trial` of a sweep seeded with `master_seed`. Depends
// only on the pair, so trials can run in any order.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial);

// Entries with independent standard normal real and imaginary parts.
ComplexMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
ComplexVector gaussian_vector(Rng& rng, Eigen::Index n);
// Haar-distributed unitary (QR of a Gaussian matrix).
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);
// G G^H with G of size n x rank; rank 0 gives the zero matrix.
ComplexMatrix random_psd(Rng& rng, Eigen::Index n, Eigen::Index rank);
ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n);

enum class InstanceFamily {
  DenseA,           // dense A, PSD B and C of random rank
  PlantedKernels,   // A, B, C sharing prescribed kernels
  ZeroOffDiagonal,  // B = 0 and/or C = 0
  StructuredA,      // diagonal, nilpotent, Hermitian or low-rank A
};
inline constexpr std::array<InstanceFamily, 4> kAllFamilies = {
    InstanceFamily::DenseA, InstanceFamily::PlantedKernels,
    InstanceFamily::ZeroOffDiagonal, InstanceFamily::StructuredA};

std::string_view to_string(InstanceFamily f);

HamiltonianBlocks random_nonnegative_blocks(Rng& rng, int n,
                                            InstanceFamily family);
// Family drawn uniformly.
HamiltonianBlocks random_nonnegative_blocks(Rng& rng, int n);
// B, C positive definite with lambda_min >= 0.1.
HamiltonianBlocks random_pd_blocks(Rng& rng, int n);
// B, C Hermitian indefinite; a general (not nonnegative) Hamiltonian.
HamiltonianBlocks random_hamiltonian_blocks(Rng& rng, int n);

struct SweepConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  int n_max = 8;
  unsigned workers = 1;
  double rel_tol = kInvertibilityTolerance;
};

struct TrialResult {
  int index = 0;
  int n = 0;
  InstanceFamily family = InstanceFamily::DenseA;
  std::vector<Certificate> certificates;
  // Direct, rank and kernel criteria reach the same verdict.
  bool core_agree = false;
  std::optional<std::string> inconsistency;
  std::optional<std::string> error;  // exception raised while certifying
  bool factorization_holds = false;
  double kernel_product_residual = 0.0;  // relative to ||H||
  double shift_sigma_min = 0.0;          // sigma_min(H + sigma_1)
  bool schur_applicable = false;
  double schur_residual_ratio = 0.0;     // worst residual / bound
};

struct SweepInstance {
  int n;
  InstanceFamily family;
  HamiltonianBlocks blocks;
};

// The instance behind trial `index`.
SweepInstance draw_instance(const SweepConfig& cfg, int index);

// Draws and certifies one instance.
TrialResult run_trial(const SweepConfig& cfg, int index);

struct SweepSummary {
  SweepConfig config;
  int trials = 0;
  std::map<Criterion, std::map<Verdict, int>> counts;
  std::map<InstanceFamily, int> families;
  int core_agreements = 0;
  std::vector<int> inconsistent_trials;
  std::vector<int> failed_trials;
  int factorization_failures = 0;
  double max_kernel_product_residual = 0.0;
  double min_shift_sigma = 0.0;
  int schur_applicable = 0;
  double max_schur_residual_ratio = 0.0;

  bool consistent() const {
    return inconsistent_trials.empty() && failed_trials.empty() &&
           core_agreements == trials;
  }
};

SweepSummary summarize(const SweepConfig& cfg,
                       const std::vector<TrialResult>& results);

// Runs cfg.trials trials on cfg.workers threads. Results are independent of
// the worker count. Throws InvalidInput for trials < 1 or n_max < 1.
std::vector<TrialResult> run_sweep_trials(const SweepConfig& cfg);
SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace hamcert
