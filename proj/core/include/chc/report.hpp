#pragma once
// Deterministic JSON report assembly: schema-versioned census records with
// numbers rendered as fixed-precision decimal strings and exact cyclotomic
// payloads where available.

#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "chc/dirichlet.hpp"
#include "chc/hermlin.hpp"

namespace chc {

inline constexpr int kReportSchema = 1;

// 15-significant-digit decimal string, locale-independent.
std::string decimal15(double x);

// {"conductor": N, "num": [...], "den": [...]} in the power basis
// zeta_N^0 .. zeta_N^{phi(N)-1}; large integers as decimal strings.
nlohmann::json cyc_json(const Cyc& c);

// 3x3 matrix as nested arrays of cyclotomic payloads.
nlohmann::json mat_json(const Mat3x& M);

struct CensusRecord {
  long p = 0;
  std::string tau_id;
  std::tuple<int, int, int> signature{0, 0, 0};
  std::string verdict;         // nondiscrete(...) | inconclusive | skipped(...)
  std::string verdict_detail;  // witness inequality at 15 digits
  std::string behaviour = "skipped";  // A | B | C | skipped(reason)
  std::vector<std::string> face_words;
  std::string pairing_status;
  std::vector<CycleAngle> cycles;
  std::string relations;       // presentation-check summary
  std::string cusps;           // cusp-check summary
  std::string arithmeticity;
  std::string note;            // free-form caveats (e.g. center override)
};

nlohmann::json record_json(const CensusRecord& r);

// Canonical report: {"schema": 1, "config": ..., "records": [...]}; the
// records are emitted in the caller's order, keys sorted, no timestamps.
nlohmann::json census_report(const nlohmann::json& config,
                             const std::vector<CensusRecord>& records);

// Serialize with a stable byte layout (2-space indent, sorted keys, '\n'
// line endings).
std::string report_to_string(const nlohmann::json& report);

}  // namespace chc
