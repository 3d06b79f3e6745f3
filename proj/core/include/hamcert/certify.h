#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcert/hamiltonian.h"

namespace hamcert {

enum class Criterion {
  DirectSigmaMin,
  RankCriterion,
  KernelIntersection,
  StackedLowerBound,
  SchurIdentityA,
  SchurIdentityBC,
  RangeSurjectivity,
};

enum class Verdict { Invertible, Singular, Inapplicable };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);

// Default invertibility gap: sigma_min(H) > kInvertibilityTolerance *
// sigma_max(H).
inline constexpr double kInvertibilityTolerance = 1e-10;
// Residual bound for the Schur-complement identities, relative to
// 1 + ||S_1||_F.
inline constexpr double kSchurTolerance = 1e-9;
// Resolvent factors (A - lambda) with a larger condition number are rejected
// when lambda is chosen automatically.
inline constexpr double kMaxResolventCondition = 1e8;
// Slack on the lower bound sigma_min(H + sigma_1) >= 1.
inline constexpr double kShiftBoundSlack = 1e-10;
// Product-basis kernel vectors must satisfy ||H v|| <= this * ||H||.
inline constexpr double kKernelResidualTolerance = 1e-10;

// A unit vector x with small ||H x||; a finite witness of 0 in the
// approximate point spectrum.
struct ApproxSpectrumWitness {
  ComplexVector x;
  double residual = 0.0;  // ||H x||
};

ApproxSpectrumWitness make_witness(const ComplexMatrix& h, ComplexVector x);

struct Certificate {
  Criterion criterion = Criterion::DirectSigmaMin;
  Verdict verdict = Verdict::Inapplicable;
  // Every threshold that entered the verdict.
  std::map<std::string, double> tolerances;
  // Scalar evidence: singular values, ranks, residuals, flags (0/1).
  std::map<std::string, double> values;
  // Vector and matrix evidence, vectors stored as single columns.
  std::map<std::string, ComplexMatrix> witnesses;
  std::vector<std::string> notes;

  bool applicable() const { return verdict != Verdict::Inapplicable; }
  double value(const std::string& key) const;
  bool flag(const std::string& key) const { return value(key) != 0.0; }
};

struct CertifyOptions {
  double rel_tol = kInvertibilityTolerance;
  // Shift used by the Schur-complement criteria; chosen automatically when
  // empty.
  std::optional<Complex> lambda;
  // Diagnostics only: evaluate the nonnegativity-gated criteria on inputs
  // that are not nonnegative. Their verdicts are then not theorems.
  bool bypass_nonnegativity_gate = false;
};

// sigma_min(H) against rel_tol * sigma_max(H). Valid for every Hamiltonian.
Certificate certify_direct(const HamiltonianBlocks& blocks,
                           const CertifyOptions& opts = {});

// rank [A^H | C] = rank [B | -A] = n, cross-checked against the column
// stacks (A; C), (B; -A^H). Requires B, C >= 0.
Certificate certify_rank(const HamiltonianBlocks& blocks,
                         const CertifyOptions& opts = {});

// (A; C) and (B; -A^H) bounded from below. Requires B, C >= 0.
Certificate certify_stacked(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts = {});

// N(A) n N(C) = N(B) n N(A^H) = {0}, with the factorization
// N(H) = (N(A) n N(C)) x (N(B) n N(A^H)) verified alongside.
// Requires B, C >= 0.
Certificate certify_kernels(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts = {});

// A^H + l + C (A - l)^-1 B  =  (A + conj(l) + B (A^H - conj(l))^-1 C)^H,
// applicable when B, C >= 0 and 0 in rho(A) or 0 in rho(B) n rho(C).
// Throws LambdaNotInResolvent for an explicit lambda in the spectrum of A.
Certificate certify_schur_a(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts = {});

// C + l + A^H (B - l)^-1 A and B + l + A (C - l)^-1 A^H self-adjointness
// identities, applicable when B, C >= 0 and 0 in rho(B) n rho(C).
Certificate certify_schur_bc(const HamiltonianBlocks& blocks,
                             const CertifyOptions& opts = {});

// R(H + sigma_1) = X x X stands in for J-self-adjointness; combined with
// H bounded from below it decides invertibility. Also checks
// sigma_min(H + sigma_1) >= 1. Requires B, C >= 0.
Certificate certify_range_shift(const HamiltonianBlocks& blocks,
                                const CertifyOptions& opts = {});

// Every criterion, in the order of the Criterion enum with the stacked
// criterion after the rank criterion. No consistency check.
std::vector<Certificate> certify_each(const HamiltonianBlocks& blocks,
                                      const CertifyOptions& opts = {});

// Describes the first disagreement among applicable verdicts, or a violated
// internal bound (kernel factorization, shift bound); empty when consistent.
std::optional<std::string> find_inconsistency(
    const std::vector<Certificate>& certs);

// certify_each followed by the consistency check. Throws ConsistencyFailure.
std::vector<Certificate> certify_all(const HamiltonianBlocks& blocks,
                                     const CertifyOptions& opts = {});

// The verdict shared by all applicable certificates (the direct criterion is
// always applicable).
Verdict overall_verdict(const std::vector<Certificate>& certs);

}  // namespace hamcert
