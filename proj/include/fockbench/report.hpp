#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fockbench/common.hpp"
#include "fockbench/semiclassics.hpp"

namespace fockbench {

// One row per line, fixed header, %.12g fields; byte-stable for a fixed
// input so repeated runs can be compared verbatim.
std::string render_csv(const std::vector<ConvergenceRow>& rows);

// Writes via a sibling temp file followed by an atomic rename, so readers
// never observe a half-written artifact.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);

// Serialized JSON summary: scenario, seed, parameters, verdicts, and the
// table inventory (the rows themselves live in the per-table CSV files).
std::string scenario_summary_json(const ScenarioReport& rep);

// Human-readable verdict log, one line per verdict plus a trailer.
std::string render_verdict_log(const ScenarioReport& rep);

// Writes summary.json, verdicts.log, and <table>.csv per table under
// out_dir (created if missing).
void write_scenario_outputs(const ScenarioReport& rep,
                            const std::filesystem::path& out_dir);

}  // namespace fockbench
