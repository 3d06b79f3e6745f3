#pragma once

// JSON encodings of library values. Complex scalars are [re, im] pairs,
// matrices are arrays of rows, vectors (including single-column witness
// matrices) are flat arrays of pairs. Objects use nlohmann's default sorted
// keys, so dumps are byte-stable.

#include <string>

#include <nlohmann/json.hpp>

#include "hamcert/casestudies.h"
#include "hamcert/certify.h"
#include "hamcert/spectra.h"
#include "hamcert/sweep.h"

namespace hamcert {

nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const ComplexVector& v);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

// Parses an array of rows of [re, im] pairs. `where` prefixes error messages,
// which name the offending element (e.g. "A[2][0]"). Throws InvalidInput.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const SpectralReport& report);
nlohmann::json to_json(const PairingResult& pairing);
nlohmann::json to_json(const ShiftBoundCheck& check);
nlohmann::json to_json(const PlateConfig& cfg);
nlohmann::json to_json(const PlateReport& report);
nlohmann::json to_json(const TrendReport& report);
nlohmann::json to_json(const SweepConfig& cfg);
// Worker count is left out: it does not affect the outcome.
nlohmann::json to_json(const SweepSummary& summary);

// {"n": n, "A": ..., "B": ..., "C": ...}
nlohmann::json blocks_to_json(const HamiltonianBlocks& blocks);

}  // namespace hamcert
