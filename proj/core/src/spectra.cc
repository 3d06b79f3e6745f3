#include "hamcert/spectra.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hamcert/certify.h"
#include "hamcert/pauli.h"

namespace hamcert {
namespace {

double min_abs_real(const ComplexVector& values) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& z : values) best = std::min(best, std::abs(z.real()));
  return values.size() == 0 ? 0.0 : best;
}

bool positive_definite(double lambda_min, const ComplexMatrix& m) {
  return lambda_min > kInvertibilityTolerance * norm2(m);
}

}  // namespace

double j_symmetry_defect(const HamiltonianBlocks& blocks) {
  const ComplexMatrix h = blocks.assemble();
  const ComplexMatrix j = symplectic_unit(blocks.n());
  const double defect = (h.adjoint() - j * h * j).norm();
  const double scale = norm2(h);
  return scale > 0.0 ? defect / scale : defect;
}

PairingResult pair_spectrum(const std::vector<Complex>& eigenvalues,
                            double tolerance) {
  PairingResult out;
  out.tolerance = tolerance;
  const int count = static_cast<int>(eigenvalues.size());
  std::vector<bool> used(eigenvalues.size(), false);
  for (int i = 0; i < count; ++i) {
    if (used[i]) continue;
    const Complex target = -std::conj(eigenvalues[i]);
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < count; ++j) {
      if (used[j]) continue;
      const double d = std::abs(eigenvalues[j] - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[i] = true;
    used[best] = true;
    out.pairs.emplace_back(i, best);
    out.distances.push_back(best_dist);
    out.max_distance = std::max(out.max_distance, best_dist);
  }
  out.matched = out.max_distance <= tolerance;
  return out;
}

std::vector<double> default_mu_grid(const HamiltonianBlocks& blocks) {
  const double s = norm2(blocks.assemble());
  return {0.0, 0.5 * s, -0.5 * s, s, -s, 2.0 * s, -2.0 * s, 10.0 * s, -10.0 * s};
}

namespace {

std::vector<Complex> sorted(const ComplexVector& values) {
  std::vector<Complex> out(values.begin(), values.end());
  std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

}  // namespace

SpectralReport spectrum(const HamiltonianBlocks& blocks) {
  const ComplexMatrix h = blocks.assemble();
  const EigResult dec = eig(h);
  SpectralReport report;
  ComplexVector values = dec.eigenvalues;
  report.eigenvalues = sorted(values);
  report.max_residual = dec.max_relative_residual;
  report.norm2 = norm2(h);
  report.a_imag_axis_distance = min_abs_real(eig(blocks.a(), false).eigenvalues);
  report.j_symmetry_defect = j_symmetry_defect(blocks);
  report.pairing =
      pair_spectrum(report.eigenvalues, kPairingTolerance * report.norm2);
  if (!report.pairing.matched) {
    values = eigenvalues_extended(h);
    report.eigenvalues = sorted(values);
    report.extended_precision = true;
    report.pairing =
        pair_spectrum(report.eigenvalues, kPairingTolerance * report.norm2);
  }
  report.imag_axis_distance = min_abs_real(values);
  if (blocks.nonnegative()) {
    report.shift_bound_checks = shift_lower_bound(blocks, default_mu_grid(blocks));
  }
  return report;
}

PairingResult check_symmetry(const SpectralReport& report) {
  PairingResult pairing =
      pair_spectrum(report.eigenvalues, kPairingTolerance * report.norm2);
  if (!pairing.matched) {
    std::ostringstream os;
    os << "eigenvalues are not closed under l -> -conj(l): pairing distance "
       << pairing.max_distance << " exceeds " << pairing.tolerance;
    throw SymmetryViolation(os.str());
  }
  return pairing;
}

std::vector<ShiftBoundCheck> shift_lower_bound(const HamiltonianBlocks& blocks,
                                               const std::vector<double>& mus) {
  if (!blocks.nonnegative()) {
    throw InvalidInput("shift lower bound requires nonnegative B and C");
  }
  const double bound =
      std::max(0.0, std::min(blocks.lambda_min_b(), blocks.lambda_min_c()));
  std::vector<ShiftBoundCheck> checks;
  checks.reserve(mus.size());
  for (const double mu : mus) {
    const ComplexMatrix shifted = blocks.shifted_imaginary(mu).assemble();
    const SvdResult dec = svd(shifted);
    ShiftBoundCheck check;
    check.mu = mu;
    check.sigma_min = dec.sigma_min();
    check.lower_bound = bound;
    check.slack = kShiftLowerBoundSlack * std::max(1.0, dec.sigma_max());
    check.holds = check.sigma_min >= bound - check.slack;
    if (!check.holds) {
      std::ostringstream os;
      os << "sigma_min(H - i*" << mu << ") = " << check.sigma_min
         << " is below the lower bound " << bound;
      throw BoundViolation(os.str(), dec.right_vectors.rightCols(1));
    }
    checks.push_back(check);
  }
  return checks;
}

double imag_axis_clearance(const HamiltonianBlocks& blocks) {
  const ComplexMatrix h = blocks.assemble();
  const double clearance = min_abs_real(eig(h, false).eigenvalues);
  if (blocks.nonnegative() &&
      positive_definite(blocks.lambda_min_b(), blocks.b()) &&
      positive_definite(blocks.lambda_min_c(), blocks.c())) {
    const double scale = norm2(h);
    const double bound = std::min(blocks.lambda_min_b(), blocks.lambda_min_c());
    if (!(clearance > kInvertibilityTolerance * scale) ||
        clearance < bound - 1e-8 * scale) {
      std::ostringstream os;
      os << "B, C positive definite but imaginary-axis clearance is "
         << clearance << " (bound " << bound << ")";
      throw ClearanceViolation(os.str());
    }
  }
  return clearance;
}

}  // namespace hamcert
