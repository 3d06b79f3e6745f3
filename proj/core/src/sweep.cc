#include "hamcert/sweep.h"

#include <algorithm>
#include <limits>
#include <thread>

namespace hamcert {

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

ComplexMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexVector gaussian_vector(Rng& rng, Eigen::Index n) {
  return gaussian_matrix(rng, n, 1).col(0);
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexMatrix random_psd(Rng& rng, Eigen::Index n, Eigen::Index rank) {
  if (rank == 0) return ComplexMatrix::Zero(n, n);
  const ComplexMatrix g = gaussian_matrix(rng, n, rank);
  const ComplexMatrix p = g * g.adjoint();
  return 0.5 * (p + p.adjoint());
}

ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = gaussian_matrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

std::string_view to_string(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::DenseA: return "DenseA";
    case InstanceFamily::PlantedKernels: return "PlantedKernels";
    case InstanceFamily::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case InstanceFamily::StructuredA: return "StructuredA";
  }
  return "?";
}

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Orthogonal projector onto the complement of the first d columns of a random
// unitary, together with those columns.
struct PlantedSubspace {
  ComplexMatrix basis;       // n x d
  ComplexMatrix complement;  // I - basis basis^H
};

PlantedSubspace planted_subspace(Rng& rng, int n, int d) {
  const ComplexMatrix u = random_unitary(rng, n);
  PlantedSubspace s;
  s.basis = u.leftCols(d);
  s.complement = ComplexMatrix::Identity(n, n) - s.basis * s.basis.adjoint();
  return s;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

HamiltonianBlocks planted(Rng& rng, int n) {
  const int d1 = uniform_int(rng, 0, n);
  const int d2 = uniform_int(rng, 0, n);
  const PlantedSubspace k1 = planted_subspace(rng, n, d1);
  const PlantedSubspace k2 = planted_subspace(rng, n, d2);
  // A k1 = 0, A^H k2 = 0, C k1 = 0, B k2 = 0.
  const ComplexMatrix a = k2.complement * gaussian_matrix(rng, n, n) * k1.complement;
  const ComplexMatrix c = hermitian_part(
      k1.complement * random_psd(rng, n, uniform_int(rng, 0, n)) * k1.complement);
  const ComplexMatrix b = hermitian_part(
      k2.complement * random_psd(rng, n, uniform_int(rng, 0, n)) * k2.complement);
  return HamiltonianBlocks::from_blocks(a, b, c);
}

HamiltonianBlocks structured(Rng& rng, int n) {
  ComplexMatrix a;
  ComplexMatrix b = random_psd(rng, n, uniform_int(rng, 0, n));
  ComplexMatrix c = random_psd(rng, n, uniform_int(rng, 0, n));
  switch (uniform_int(rng, 0, 3)) {
    case 0: {
      // Diagonal A, B, C with random zero patterns; kernels align exactly
      // when zeros coincide.
      a = ComplexMatrix::Zero(n, n);
      b = ComplexMatrix::Zero(n, n);
      c = ComplexMatrix::Zero(n, n);
      std::normal_distribution<double> normal;
      for (int i = 0; i < n; ++i) {
        if (uniform_int(rng, 0, 2) > 0) a(i, i) = Complex(normal(rng), normal(rng));
        if (uniform_int(rng, 0, 1) > 0) b(i, i) = std::abs(normal(rng)) + 0.1;
        if (uniform_int(rng, 0, 1) > 0) c(i, i) = std::abs(normal(rng)) + 0.1;
      }
      break;
    }
    case 1:
      a = gaussian_matrix(rng, n, n).triangularView<Eigen::StrictlyUpper>();
      break;
    case 2:
      a = random_hermitian(rng, n);
      break;
    default: {
      const int r = uniform_int(rng, 0, n);
      a = gaussian_matrix(rng, n, r) * gaussian_matrix(rng, r, n);
      break;
    }
  }
  return HamiltonianBlocks::from_blocks(a, b, c);
}

}  // namespace

HamiltonianBlocks random_nonnegative_blocks(Rng& rng, int n,
                                            InstanceFamily family) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  switch (family) {
    case InstanceFamily::DenseA: {
      ComplexMatrix a = gaussian_matrix(rng, n, n);
      ComplexMatrix b = random_psd(rng, n, uniform_int(rng, 0, n));
      ComplexMatrix c = random_psd(rng, n, uniform_int(rng, 0, n));
      return HamiltonianBlocks::from_blocks(a, b, c);
    }
    case InstanceFamily::PlantedKernels:
      return planted(rng, n);
    case InstanceFamily::ZeroOffDiagonal: {
      const int which = uniform_int(rng, 0, 2);
      const HamiltonianBlocks base = uniform_int(rng, 0, 1) == 0
                                         ? planted(rng, n)
                                         : HamiltonianBlocks::from_blocks(
                                               gaussian_matrix(rng, n, n),
                                               random_psd(rng, n, n),
                                               random_psd(rng, n, n));
      const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
      return HamiltonianBlocks::from_blocks(base.a(), which == 1 ? base.b() : zero,
                                            which == 2 ? base.c() : zero);
    }
    case InstanceFamily::StructuredA:
      return structured(rng, n);
  }
  throw InvalidInput("unknown instance family");
}

HamiltonianBlocks random_nonnegative_blocks(Rng& rng, int n) {
  const auto family = kAllFamilies[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<int>(kAllFamilies.size()) - 1))];
  return random_nonnegative_blocks(rng, n, family);
}

HamiltonianBlocks random_pd_blocks(Rng& rng, int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return HamiltonianBlocks::from_blocks(gaussian_matrix(rng, n, n),
                                        random_psd(rng, n, n) + 0.1 * id,
                                        random_psd(rng, n, n) + 0.1 * id);
}

HamiltonianBlocks random_hamiltonian_blocks(Rng& rng, int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  return HamiltonianBlocks::from_blocks(gaussian_matrix(rng, n, n),
                                        random_hermitian(rng, n),
                                        random_hermitian(rng, n));
}

SweepInstance draw_instance(const SweepConfig& cfg, int index) {
  Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(index));
  const int n = uniform_int(rng, 1, cfg.n_max);
  const InstanceFamily family = kAllFamilies[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<int>(kAllFamilies.size()) - 1))];
  return {n, family, random_nonnegative_blocks(rng, n, family)};
}

TrialResult run_trial(const SweepConfig& cfg, int index) {
  TrialResult result;
  result.index = index;
  try {
    const SweepInstance inst = draw_instance(cfg, index);
    result.n = inst.n;
    result.family = inst.family;
    const HamiltonianBlocks& blocks = inst.blocks;
    CertifyOptions opts;
    opts.rel_tol = cfg.rel_tol;
    result.certificates = certify_each(blocks, opts);
    result.inconsistency = find_inconsistency(result.certificates);

    const auto find = [&](Criterion c) -> const Certificate& {
      return *std::find_if(result.certificates.begin(), result.certificates.end(),
                           [c](const Certificate& x) { return x.criterion == c; });
    };
    const Certificate& direct = find(Criterion::DirectSigmaMin);
    const Certificate& rank = find(Criterion::RankCriterion);
    const Certificate& kern = find(Criterion::KernelIntersection);
    result.core_agree =
        direct.verdict == rank.verdict && direct.verdict == kern.verdict;
    result.factorization_holds = kern.flag("factorization_holds");
    result.kernel_product_residual = kern.value("product_residual_max");
    result.shift_sigma_min =
        find(Criterion::RangeSurjectivity).value("sigma_min_H_plus_sigma1");

    const Certificate& sa = find(Criterion::SchurIdentityA);
    if (sa.applicable()) {
      result.schur_applicable = true;
      result.schur_residual_ratio =
          std::max({result.schur_residual_ratio,
                    sa.value("residual_variant2") / sa.value("residual_bound"),
                    sa.value("residual_variant3") / sa.value("residual_bound")});
    }
    const Certificate& sbc = find(Criterion::SchurIdentityBC);
    if (sbc.applicable()) {
      result.schur_applicable = true;
      result.schur_residual_ratio = std::max(
          {result.schur_residual_ratio,
           sbc.value("residual_variant2") / sbc.value("residual_bound_variant2"),
           sbc.value("residual_variant3") / sbc.value("residual_bound_variant3")});
    }
  } catch (const Error& e) {
    result.error = e.what();
  }
  return result;
}

std::vector<TrialResult> run_sweep_trials(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw InvalidInput("sweep needs at least one trial");
  if (cfg.n_max < 1) throw InvalidInput("n_max must be >= 1");
  std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));
  const unsigned workers =
      std::clamp<unsigned>(cfg.workers, 1u, static_cast<unsigned>(cfg.trials));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < cfg.trials;
             i += static_cast<int>(workers)) {
          results[static_cast<std::size_t>(i)] = run_trial(cfg, i);
        }
      });
    }
  }
  return results;
}

SweepSummary summarize(const SweepConfig& cfg,
                       const std::vector<TrialResult>& results) {
  SweepSummary s;
  s.config = cfg;
  s.trials = static_cast<int>(results.size());
  s.min_shift_sigma = std::numeric_limits<double>::infinity();
  for (const TrialResult& r : results) {
    ++s.families[r.family];
    if (r.error) {
      s.failed_trials.push_back(r.index);
      continue;
    }
    for (const Certificate& c : r.certificates) ++s.counts[c.criterion][c.verdict];
    if (r.core_agree) ++s.core_agreements;
    if (r.inconsistency) s.inconsistent_trials.push_back(r.index);
    if (!r.factorization_holds) ++s.factorization_failures;
    s.max_kernel_product_residual =
        std::max(s.max_kernel_product_residual, r.kernel_product_residual);
    s.min_shift_sigma = std::min(s.min_shift_sigma, r.shift_sigma_min);
    if (r.schur_applicable) {
      ++s.schur_applicable;
      s.max_schur_residual_ratio =
          std::max(s.max_schur_residual_ratio, r.schur_residual_ratio);
    }
  }
  return s;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  return summarize(cfg, run_sweep_trials(cfg));
}

}  // namespace hamcert
