#include "hamcert/casestudies.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hamcert/certify.h"
#include "hamcert/spectra.h"

namespace hamcert {

std::string_view to_string(PlateScheme s) {
  return s == PlateScheme::SineSpectral ? "SineSpectral" : "FiniteDifference";
}

PlateScheme parse_plate_scheme(std::string_view name) {
  if (name == "spectral" || name == "SineSpectral") {
    return PlateScheme::SineSpectral;
  }
  if (name == "fd" || name == "FiniteDifference") {
    return PlateScheme::FiniteDifference;
  }
  throw InvalidInput("unknown discretization scheme '" + std::string(name) +
                     "' (expected spectral or fd)");
}

void PlateConfig::validate() const {
  if (m < 1) throw InvalidInput("plate mode count m must be >= 1");
  if (!(stiffness > 0.0) || !std::isfinite(stiffness)) {
    throw InvalidInput("plate stiffness D must be positive and finite");
  }
}

void CounterexampleConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidInput("counterexample shift gamma must be positive");
  }
  if (m < 1) throw InvalidInput("truncation size m must be >= 1");
}

std::vector<double> dirichlet_eigenvalues(int m, PlateScheme scheme) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(m));
  const double pi = std::numbers::pi;
  for (int k = 1; k <= m; ++k) {
    if (scheme == PlateScheme::SineSpectral) {
      t[k - 1] = (k * pi) * (k * pi);
    } else {
      const double h_inv = m + 1.0;
      t[k - 1] = 2.0 * h_inv * h_inv * (1.0 - std::cos(k * pi / h_inv));
    }
  }
  return t;
}

ComplexMatrix dirichlet_laplacian(int m, PlateScheme scheme) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  ComplexMatrix t = ComplexMatrix::Zero(m, m);
  if (scheme == PlateScheme::SineSpectral) {
    const std::vector<double> ev = dirichlet_eigenvalues(m, scheme);
    for (int k = 0; k < m; ++k) t(k, k) = ev[k];
    return t;
  }
  const double scale = (m + 1.0) * (m + 1.0);
  for (int k = 0; k < m; ++k) {
    t(k, k) = 2.0 * scale;
    if (k + 1 < m) {
      t(k, k + 1) = -scale;
      t(k + 1, k) = -scale;
    }
  }
  return t;
}

HamiltonianBlocks plate_hamiltonian(const PlateConfig& cfg) {
  cfg.validate();
  const int m = cfg.m;
  const ComplexMatrix t = dirichlet_laplacian(m, cfg.scheme);
  ComplexMatrix a = ComplexMatrix::Zero(2 * m, 2 * m);
  a.topRightCorner(m, m) = ComplexMatrix::Identity(m, m);
  a.bottomLeftCorner(m, m) = t;
  ComplexMatrix b = ComplexMatrix::Zero(2 * m, 2 * m);
  b.bottomRightCorner(m, m) =
      -(1.0 / cfg.stiffness) * ComplexMatrix::Identity(m, m);
  return HamiltonianBlocks::from_blocks(std::move(a), std::move(b),
                                        ComplexMatrix::Zero(2 * m, 2 * m));
}

PlateReport plate_claim_check(const PlateConfig& cfg) {
  const HamiltonianBlocks blocks = plate_hamiltonian(cfg);
  const int m = cfg.m;
  PlateReport report;
  report.config = cfg;

  const ComplexMatrix t = dirichlet_laplacian(m, cfg.scheme);
  ComplexMatrix diag_tt = ComplexMatrix::Zero(2 * m, 2 * m);
  diag_tt.topLeftCorner(m, m) = t;
  diag_tt.bottomRightCorner(m, m) = t;
  const ComplexMatrix a2 = blocks.a() * blocks.a();
  report.a_squared_exact = (a2 == diag_tt);
  report.a_squared_defect = (a2 - diag_tt).norm();
  report.negated_nonnegative = blocks.negated().nonnegative();

  for (const double tk : dirichlet_eigenvalues(m, cfg.scheme)) {
    const double mu = std::sqrt(tk);
    report.expected.insert(report.expected.end(), {mu, mu, -mu, -mu});
  }
  std::sort(report.expected.begin(), report.expected.end());
  report.expected_clearance = std::sqrt(dirichlet_eigenvalues(m, cfg.scheme)[0]);

  const SpectralReport spec = spectrum(blocks);
  report.eigenvalues = spec.eigenvalues;
  report.max_residual = spec.max_residual;
  report.clearance = spec.imag_axis_distance;
  for (std::size_t i = 0; i < report.expected.size(); ++i) {
    report.max_eigenvalue_error =
        std::max(report.max_eigenvalue_error,
                 std::abs(report.eigenvalues[i] - report.expected[i]));
  }

  report.notes.push_back(
      "H has B <= 0; -H is the nonnegative Hamiltonian and sigma(-H) = "
      "-sigma(H), so clearance statements transfer unchanged");
  report.notes.push_back(
      "shift bound for -H is trivial (C = 0); imaginary-axis clearance follows "
      "from i R in rho(A), witnessed by A^2 = diag(T, T) with T positive "
      "definite");
  std::ostringstream os;
  os << "discretization " << to_string(cfg.scheme) << " with m = " << m
     << " modes";
  report.notes.push_back(os.str());
  return report;
}

HamiltonianBlocks counterexample_family(const CounterexampleConfig& cfg) {
  cfg.validate();
  const int m = cfg.m;
  ComplexMatrix c = ComplexMatrix::Zero(m, m);
  ComplexMatrix b = ComplexMatrix::Zero(m, m);
  for (int k = 1; k <= m; ++k) {
    c(k - 1, k - 1) = cfg.gamma + k;
    b(k - 1, k - 1) = 1.0 / (cfg.gamma + k);
  }
  return HamiltonianBlocks::from_blocks(ComplexMatrix::Identity(m, m),
                                        std::move(b), std::move(c));
}

TrendReport counterexample_trend(double gamma, const std::vector<int>& m_list) {
  if (m_list.empty()) throw InvalidInput("m_list must not be empty");
  for (std::size_t i = 1; i < m_list.size(); ++i) {
    if (m_list[i] <= m_list[i - 1]) {
      throw InvalidInput("m_list must be strictly ascending");
    }
  }
  TrendReport report;
  report.gamma = gamma;
  report.strictly_decreasing = true;
  for (const int m : m_list) {
    const HamiltonianBlocks blocks = counterexample_family({gamma, m});
    const ComplexMatrix h = blocks.assemble();
    const SvdResult dec = svd(h);
    TrendRow row;
    row.m = m;
    row.sigma_min = dec.sigma_min();
    row.sigma_max = dec.sigma_max();
    row.product = row.sigma_min * (gamma + m);
    row.condition = row.sigma_max / row.sigma_min;
    row.invertible = row.sigma_min > kInvertibilityTolerance * row.sigma_max;
    const ComplexVector x = dec.right_vectors.rightCols(1);
    row.top_mode_weight = std::norm(x(m - 1)) + std::norm(x(2 * m - 1));

    const double ceiling = 2.0 / (gamma + m) * (1.0 + 1e-6);
    if (row.sigma_min > ceiling) {
      std::ostringstream os;
      os << "sigma_min(H_" << m << ") = " << row.sigma_min
         << " exceeds 2/(gamma+m) = " << ceiling;
      throw TrendViolation(os.str());
    }
    if (!report.rows.empty() && !(row.sigma_min < report.rows.back().sigma_min)) {
      report.strictly_decreasing = false;
      std::ostringstream os;
      os << "sigma_min does not strictly decrease at m = " << m;
      throw TrendViolation(os.str());
    }
    report.rows.push_back(row);
    if (m == m_list.back()) {
      const ApproxSpectrumWitness w = make_witness(h, x);
      report.final_witness = w.x;
      report.final_witness_residual = w.residual;
    }
  }
  return report;
}

}  // namespace hamcert
