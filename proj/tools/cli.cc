#include "cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "hamcert/casestudies.h"
#include "hamcert/certify.h"
#include "hamcert/json.h"
#include "hamcert/pauli.h"
#include "hamcert/spectra.h"
#include "hamcert/sweep.h"

#ifndef HAMCERT_VERSION
#define HAMCERT_VERSION "0.0.0"
#endif

namespace hamcert::cli {

using nlohmann::json;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << int(digest[i]);
  return os.str();
}

namespace {

void require_shape(const ComplexMatrix& m, Eigen::Index rows, Eigen::Index cols,
                   const std::string& name) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream os;
    os << name << ": expected " << rows << "x" << cols << ", got " << m.rows()
       << "x" << m.cols();
    throw InvalidInput(os.str());
  }
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("JSON parse error at byte " + std::to_string(e.byte) +
                       ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("input: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "A" && key != "B" && key != "C" && key != "H" &&
        key != "tolerances") {
      throw InvalidInput("input: unknown field '" + key + "'");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<long long>() < 1) {
    throw InvalidInput("n: expected a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(doc["n"].get<long long>());

  const bool has_h = doc.contains("H");
  const bool has_any_block =
      doc.contains("A") || doc.contains("B") || doc.contains("C");
  if (has_h == has_any_block) {
    throw InvalidInput("input: give either the blocks A, B, C or the matrix H");
  }

  std::optional<double> rel_tol;
  json overrides;
  if (doc.contains("tolerances")) {
    overrides = doc["tolerances"];
    if (!overrides.is_object()) {
      throw InvalidInput("tolerances: expected an object");
    }
    for (const auto& [key, value] : overrides.items()) {
      if (key != "rel_tol") {
        throw InvalidInput("tolerances." + key + ": unknown tolerance");
      }
      if (!value.is_number() || !(value.get<double>() > 0.0) ||
          !(value.get<double>() < 1.0)) {
        throw InvalidInput("tolerances.rel_tol: expected a number in (0, 1)");
      }
      rel_tol = value.get<double>();
    }
  }

  std::optional<HamiltonianBlocks> blocks;
  if (has_h) {
    const ComplexMatrix h = matrix_from_json(doc["H"], "H");
    require_shape(h, 2 * n, 2 * n, "H");
    blocks = HamiltonianBlocks::decompose(h);
  } else {
    for (const char* name : {"A", "B", "C"}) {
      if (!doc.contains(name)) {
        throw InvalidInput(std::string("input: missing block ") + name);
      }
    }
    ComplexMatrix a = matrix_from_json(doc["A"], "A");
    ComplexMatrix b = matrix_from_json(doc["B"], "B");
    ComplexMatrix c = matrix_from_json(doc["C"], "C");
    require_shape(a, n, n, "A");
    require_shape(b, n, n, "B");
    require_shape(c, n, n, "C");
    blocks = HamiltonianBlocks::from_blocks(std::move(a), std::move(b),
                                            std::move(c));
  }
  return InputDocument{*blocks, overrides, rel_tol, "sha256:" + sha256_hex(text)};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json report_header(const std::string& command, const std::string& digest) {
  return {{"tool", "hamcert"},
          {"version", HAMCERT_VERSION},
          {"command", command},
          {"input_digest", digest}};
}

json certificates_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const Certificate& c : certs) out.push_back(to_json(c));
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open input file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput(path + ": cannot open for writing");
  f << text;
  if (!f) throw Error(path + ": write failed");
}

struct Common {
  std::string output;
  std::optional<double> tol_rel;
};

void emit(const json& report, const Common& common, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (common.output.empty()) {
    out << text;
  } else {
    write_text(common.output, text);
  }
}

// Flag beats document beats default.
json effective_tolerances(const InputDocument& doc, const Common& common,
                          double& rel_tol) {
  std::string source = "default";
  rel_tol = kInvertibilityTolerance;
  if (doc.rel_tol) {
    rel_tol = *doc.rel_tol;
    source = "document";
  }
  if (common.tol_rel) {
    rel_tol = *common.tol_rel;
    source = "flag";
  }
  return {{"rel_tol", rel_tol}, {"source", source}};
}

int cmd_check(const std::string& path, const Common& common, std::ostream& out) {
  const auto start = Clock::now();
  const InputDocument doc = parse_input(read_source(path));
  CertifyOptions opts;
  json report = report_header("check", doc.digest);
  report["tolerances"] = effective_tolerances(doc, common, opts.rel_tol);
  report["tolerance_overrides"] = doc.tolerance_overrides;
  const std::vector<Certificate> certs = certify_all(doc.blocks, opts);
  const Verdict verdict = overall_verdict(certs);
  report["n"] = doc.blocks.n();
  report["nonnegative"] = doc.blocks.nonnegative();
  report["verdict"] = std::string(to_string(verdict));
  report["certificates"] = certificates_json(certs);
  report["wall_time"] = seconds_since(start);
  emit(report, common, out);
  return verdict == Verdict::Singular ? kExitSingular : kExitOk;
}

int cmd_spectrum(const std::string& path, const Common& common,
                 std::ostream& out) {
  const auto start = Clock::now();
  const InputDocument doc = parse_input(read_source(path));
  double rel_tol = 0.0;
  json report = report_header("spectrum", doc.digest);
  report["tolerances"] = effective_tolerances(doc, common, rel_tol);
  report["tolerance_overrides"] = doc.tolerance_overrides;
  const SpectralReport spec = spectrum(doc.blocks);
  check_symmetry(spec);
  const double clearance = imag_axis_clearance(doc.blocks);
  report["n"] = doc.blocks.n();
  report["nonnegative"] = doc.blocks.nonnegative();
  report["spectral_report"] = to_json(spec);
  report["imag_axis_clearance"] = clearance;
  // Same gap as the invertibility dichotomy.
  report["imag_axis_meets_spectrum"] = clearance <= rel_tol * spec.norm2;
  report["wall_time"] = seconds_since(start);
  emit(report, common, out);
  return kExitOk;
}

int cmd_demo_plate(const PlateConfig& cfg, const std::string& emit_path,
                   const Common& common, std::ostream& out) {
  const auto start = Clock::now();
  const PlateReport plate = plate_claim_check(cfg);
  // The paper's H has B <= 0; the certified operator is -H.
  const HamiltonianBlocks negated = plate_hamiltonian(cfg).negated();
  const json input = blocks_to_json(negated);
  const std::string input_text = input.dump(2) + "\n";
  CertifyOptions opts;
  if (common.tol_rel) opts.rel_tol = *common.tol_rel;
  const std::vector<Certificate> certs = certify_all(negated, opts);

  json report = report_header("demo plate", "sha256:" + sha256_hex(input_text));
  report["tolerances"] = {{"rel_tol", opts.rel_tol}};
  report["plate"] = to_json(plate);
  report["certified_operator"] = "-H";
  report["verdict"] = std::string(to_string(overall_verdict(certs)));
  report["certificates"] = certificates_json(certs);
  report["wall_time"] = seconds_since(start);
  if (!emit_path.empty()) write_text(emit_path, input_text);
  emit(report, common, out);
  return kExitOk;
}

int cmd_demo_counterexample(double gamma, int m_max, const std::string& emit_path,
                            const Common& common, std::ostream& out) {
  const auto start = Clock::now();
  const CounterexampleConfig cfg{gamma, m_max};
  cfg.validate();
  std::vector<int> ms(static_cast<std::size_t>(m_max));
  std::iota(ms.begin(), ms.end(), 1);
  const TrendReport trend = counterexample_trend(gamma, ms);
  const HamiltonianBlocks top = counterexample_family(cfg);
  const json input = blocks_to_json(top);
  const std::string input_text = input.dump(2) + "\n";
  CertifyOptions opts;
  if (common.tol_rel) opts.rel_tol = *common.tol_rel;
  const std::vector<Certificate> certs = certify_all(top, opts);

  bool all_invertible = true;
  for (const TrendRow& r : trend.rows) all_invertible = all_invertible && r.invertible;

  json report =
      report_header("demo counterexample", "sha256:" + sha256_hex(input_text));
  report["tolerances"] = {{"rel_tol", opts.rel_tol}};
  report["counterexample"] = to_json(trend);
  report["every_truncation_invertible"] = all_invertible;
  report["certified_truncation"] = m_max;
  report["verdict"] = std::string(to_string(overall_verdict(certs)));
  report["certificates"] = certificates_json(certs);
  report["wall_time"] = seconds_since(start);
  if (!emit_path.empty()) write_text(emit_path, input_text);
  emit(report, common, out);
  return kExitOk;
}

int cmd_sweep(const SweepConfig& cfg, const Common& common, std::ostream& out,
              std::ostream& err) {
  const auto start = Clock::now();
  const SweepSummary summary = run_sweep(cfg);
  const json config = to_json(cfg);
  json report = report_header("sweep", "sha256:" + sha256_hex(config.dump()));
  report["seed"] = cfg.seed;
  report["summary"] = to_json(summary);
  report["wall_time"] = seconds_since(start);
  emit(report, common, out);
  if (!summary.consistent()) {
    err << "sweep: criteria disagree on " << summary.inconsistent_trials.size()
        << " trial(s), " << summary.failed_trials.size() << " failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_pauli_verify(int n, const Common& common, std::ostream& out,
                     std::ostream& err) {
  const auto start = Clock::now();
  const std::vector<PauliIdentity> ids = verify_pauli_identities(n);
  json identities = json::array();
  bool all = true;
  for (const PauliIdentity& id : ids) {
    identities.push_back({{"name", id.name}, {"holds", id.holds}});
    if (!id.holds) {
      all = false;
      err << "pauli-verify: identity fails: " << id.name << "\n";
    }
  }
  json eps = json::array();
  for (PauliIndex k : PauliIndex::all()) eps.push_back(epsilon_1k(k));

  json report = report_header(
      "pauli-verify", "sha256:" + sha256_hex(json{{"n", n}}.dump()));
  report["n"] = n;
  report["identities"] = identities;
  report["epsilon_1k"] = eps;
  report["all_hold"] = all;
  report["wall_time"] = seconds_since(start);
  emit(report, common, out);
  return all ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Invertibility certificates for Hamiltonian operator matrices",
               "hamcert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HAMCERT_VERSION);

  Common common;
  const auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--output", common.output, "Write the report to this file");
    sub->add_option("--tol-rel", common.tol_rel,
                    "Relative invertibility gap (overrides the document)")
        ->check(CLI::Range(0.0, 1.0));
  };

  std::string input_path;
  CLI::App* check = app.add_subcommand("check", "Certify invertibility of H");
  check->add_option("input", input_path, "Input document ('-' for stdin)")->required();
  add_common(check);

  CLI::App* spec = app.add_subcommand("spectrum", "Spectral report for H");
  spec->add_option("input", input_path, "Input document ('-' for stdin)")->required();
  add_common(spec);

  CLI::App* demo = app.add_subcommand("demo", "Case studies");
  demo->require_subcommand(1);
  std::string emit_path;

  PlateConfig plate;
  std::string scheme = "spectral";
  CLI::App* demo_plate = demo->add_subcommand("plate", "Plate-bending Hamiltonian");
  demo_plate->add_option("--m", plate.m, "Retained modes");
  demo_plate->add_option("--D", plate.stiffness, "Plate stiffness");
  demo_plate->add_option("--scheme", scheme, "spectral or fd");
  demo_plate->add_option("--emit-input", emit_path, "Write the input document of -H");
  add_common(demo_plate);

  double gamma = 1.0;
  int m_max = 100;
  CLI::App* demo_ce = demo->add_subcommand("counterexample",
                                           "Truncations of the unbounded-inverse example");
  demo_ce->add_option("--gamma", gamma, "Shift gamma > 0");
  demo_ce->add_option("--m-max", m_max, "Largest truncation");
  demo_ce->add_option("--emit-input", emit_path,
                      "Write the input document of the largest truncation");
  add_common(demo_ce);

  SweepConfig sweep;
  sweep.workers = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sw = app.add_subcommand("sweep", "Seeded random equivalence sweep");
  sw->add_option("--seed", sweep.seed, "Master seed");
  sw->add_option("--trials", sweep.trials, "Number of random instances");
  sw->add_option("--n-max", sweep.n_max, "Largest block size");
  sw->add_option("--workers", sweep.workers, "Worker threads (does not change results)");
  add_common(sw);

  int pauli_n = 1;
  CLI::App* pv = app.add_subcommand("pauli-verify", "Check the Pauli identities");
  pv->add_option("--n", pauli_n, "Block size");
  add_common(pv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (common.tol_rel) sweep.rel_tol = *common.tol_rel;
    if (*check) return cmd_check(input_path, common, out);
    if (*spec) return cmd_spectrum(input_path, common, out);
    if (*demo_plate) {
      plate.scheme = parse_plate_scheme(scheme);
      return cmd_demo_plate(plate, emit_path, common, out);
    }
    if (*demo_ce) return cmd_demo_counterexample(gamma, m_max, emit_path, common, out);
    if (*sw) return cmd_sweep(sweep, common, out, err);
    if (*pv) return cmd_pauli_verify(pauli_n, common, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NotHamiltonian& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConsistencyFailure& e) {
    err << "internal consistency failure: " << e.what() << "\n"
        << e.dump() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}

}  // namespace hamcert::cli
