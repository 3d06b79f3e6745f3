#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamcert/hamiltonian.h"

namespace hamcert::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSingular = 1,
  kExitInvalid = 2,    // bad input, NotHamiltonian, parse errors
  kExitInternal = 3,   // consistency or numerical failure
};

struct InputDocument {
  HamiltonianBlocks blocks;
  // Top-level "tolerances" object exactly as given (null when absent).
  nlohmann::json tolerance_overrides;
  std::optional<double> rel_tol;
  std::string digest;  // "sha256:<hex>" of the raw bytes
};

std::string sha256_hex(std::string_view bytes);

// Parses {"n", "A", "B", "C"} or {"n", "H"} with an optional top-level
// "tolerances": {"rel_tol": x}. Throws InvalidInput with a position-bearing
// message, or NotHamiltonian for an H without Hamiltonian block structure.
InputDocument parse_input(const std::string& text);

// Entry point of the hamcert tool; returns the process exit code. Reports go
// to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hamcert::cli
