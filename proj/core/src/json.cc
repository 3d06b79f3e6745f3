#include "hamcert/json.h"

#include <cmath>

namespace hamcert {

using nlohmann::json;

namespace {

// Signed zeros print as -0.0; reports must not depend on the sign of zero.
double canonical(double x) { return x == 0.0 ? 0.0 : x; }

json canonical(const std::map<std::string, double>& values) {
  json out = json::object();
  for (const auto& [key, x] : values) out[key] = canonical(x);
  return out;
}

}  // namespace

json complex_to_json(Complex z) {
  return json::array({canonical(z.real()), canonical(z.imag())});
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw InvalidInput(where + ": expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].empty()) {
      throw InvalidInput(at + ": expected a non-empty array of [re, im] pairs");
    }
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) {
      throw InvalidInput(at + ": row has " + std::to_string(j[r].size()) +
                         " entries, expected " + std::to_string(cols));
    }
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const json& z = j[r][c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw InvalidInput(where + "[" + std::to_string(r) + "][" +
                           std::to_string(c) + "]: expected [re, im]");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json to_json(const Certificate& cert) {
  json witnesses = json::object();
  for (const auto& [name, m] : cert.witnesses) {
    witnesses[name] = m.cols() == 1 ? vector_to_json(m.col(0)) : matrix_to_json(m);
  }
  return {
      {"criterion", std::string(to_string(cert.criterion))},
      {"verdict", std::string(to_string(cert.verdict))},
      {"tolerances", canonical(cert.tolerances)},
      {"values", canonical(cert.values)},
      {"witnesses", witnesses},
      {"notes", cert.notes},
  };
}

json to_json(const PairingResult& pairing) {
  json pairs = json::array();
  for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
    pairs.push_back({{"i", pairing.pairs[i].first},
                     {"j", pairing.pairs[i].second},
                     {"distance", pairing.distances[i]}});
  }
  return {{"pairs", pairs},
          {"max_distance", pairing.max_distance},
          {"tolerance", pairing.tolerance},
          {"matched", pairing.matched}};
}

json to_json(const ShiftBoundCheck& check) {
  return {{"mu", check.mu},
          {"sigma_min", check.sigma_min},
          {"lower_bound", check.lower_bound},
          {"slack", check.slack},
          {"holds", check.holds}};
}

json to_json(const SpectralReport& report) {
  json eigenvalues = json::array();
  for (const Complex& z : report.eigenvalues) eigenvalues.push_back(complex_to_json(z));
  json checks = json::array();
  for (const ShiftBoundCheck& c : report.shift_bound_checks) checks.push_back(to_json(c));
  return {{"eigenvalues", eigenvalues},
          {"max_residual", report.max_residual},
          {"norm2", report.norm2},
          {"imag_axis_distance", report.imag_axis_distance},
          {"a_imag_axis_distance", report.a_imag_axis_distance},
          {"j_symmetry_defect", report.j_symmetry_defect},
          {"symmetry_pairing", to_json(report.pairing)},
          {"extended_precision", report.extended_precision},
          {"shift_bound_checks", checks}};
}

json to_json(const PlateConfig& cfg) {
  return {{"m", cfg.m},
          {"D", cfg.stiffness},
          {"scheme", std::string(to_string(cfg.scheme))}};
}

json to_json(const PlateReport& report) {
  json eigenvalues = json::array();
  for (const Complex& z : report.eigenvalues) eigenvalues.push_back(complex_to_json(z));
  return {{"config", to_json(report.config)},
          {"a_squared_exact", report.a_squared_exact},
          {"a_squared_defect", report.a_squared_defect},
          {"negated_nonnegative", report.negated_nonnegative},
          {"eigenvalues", eigenvalues},
          {"expected_eigenvalues", report.expected},
          {"max_eigenvalue_error", report.max_eigenvalue_error},
          {"max_residual", report.max_residual},
          {"clearance", report.clearance},
          {"expected_clearance", report.expected_clearance},
          {"notes", report.notes}};
}

json to_json(const TrendReport& report) {
  json rows = json::array();
  for (const TrendRow& r : report.rows) {
    rows.push_back({{"m", r.m},
                    {"sigma_min", r.sigma_min},
                    {"sigma_max", r.sigma_max},
                    {"product", r.product},
                    {"condition", r.condition},
                    {"top_mode_weight", r.top_mode_weight},
                    {"invertible", r.invertible}});
  }
  return {{"gamma", report.gamma},
          {"rows", rows},
          {"final_witness", vector_to_json(report.final_witness)},
          {"final_witness_residual", report.final_witness_residual},
          {"strictly_decreasing", report.strictly_decreasing}};
}

json to_json(const SweepConfig& cfg) {
  return {{"seed", cfg.seed},
          {"trials", cfg.trials},
          {"n_max", cfg.n_max},
          {"rel_tol", cfg.rel_tol}};
}

json to_json(const SweepSummary& summary) {
  json counts = json::object();
  for (const auto& [criterion, by_verdict] : summary.counts) {
    json row = json::object();
    for (const Verdict v : {Verdict::Invertible, Verdict::Singular, Verdict::Inapplicable}) {
      const auto it = by_verdict.find(v);
      row[std::string(to_string(v))] = it == by_verdict.end() ? 0 : it->second;
    }
    counts[std::string(to_string(criterion))] = row;
  }
  json families = json::object();
  for (const auto& [family, count] : summary.families) {
    families[std::string(to_string(family))] = count;
  }
  // Infinite when every trial failed; JSON has no infinity.
  const double min_shift =
      std::isfinite(summary.min_shift_sigma) ? summary.min_shift_sigma : 0.0;
  return {{"config", to_json(summary.config)},
          {"trials", summary.trials},
          {"counts", counts},
          {"families", families},
          {"core_agreements", summary.core_agreements},
          {"inconsistent_trials", summary.inconsistent_trials},
          {"failed_trials", summary.failed_trials},
          {"factorization_failures", summary.factorization_failures},
          {"max_kernel_product_residual", summary.max_kernel_product_residual},
          {"min_sigma_H_plus_sigma1", min_shift},
          {"schur_applicable", summary.schur_applicable},
          {"max_schur_residual_ratio", summary.max_schur_residual_ratio},
          {"consistent", summary.consistent()}};
}

json blocks_to_json(const HamiltonianBlocks& blocks) {
  return {{"n", blocks.n()},
          {"A", matrix_to_json(blocks.a())},
          {"B", matrix_to_json(blocks.b())},
          {"C", matrix_to_json(blocks.c())}};
}

}  // namespace hamcert
