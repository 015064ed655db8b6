// Laboratory front end: configuration, ladder cache management, and the
// build / verify / report commands the CLI exposes.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladderlab/ladder.hpp"
#include "ladderlab/report.hpp"

namespace ladderlab {

struct Bands {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct LabConfig {
  std::vector<double> T_grid{1.0e4, 1.0e5};
  int k = 3;
  int k0 = 8;
  double tol_quad = 1e-8;
  double tol_ladder = 1e-9;
  Bands bands{0.5, 2.0};        // generic asymptotic ratio band
  Bands unit_bands{0.6, 1.7};   // tighter band for unit (p = q) records
  int n_base = 7;               // Gram matrix dimension
  std::uint64_t seed = 20260823;
  std::filesystem::path cache_dir = "ladder_cache";

  // Throws std::invalid_argument with a usage message on bad fields
  // (empty/descending/low T_grid, k > k0, malformed bands...).
  void validate() const;

  static LabConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static LabConfig from_file(const std::filesystem::path& path);

  // Hash over the fields that determine ladder cache contents
  // (T windows, tolerances, model constants) -- the cache key.
  std::uint64_t build_hash() const;
};

// Apply the LADDERLAB_CACHE environment override to cache_dir.
void apply_env_overrides(LabConfig& config);

// Cache file path for one T (CSV; sidecar is <path>.json).
std::filesystem::path ladder_cache_path(const LabConfig& config, double T);

// Load the cached ladder for T, building and saving it first if absent.
// `built` (optional) reports whether a cold build happened.
Ladder load_or_build(const LabConfig& config, double T, bool* built = nullptr);

struct RunReport {
  nlohmann::json config_echo;
  std::vector<ReportRow> rows;
  bool exact_pass = true;   // every exact row passed
  bool bands_pass = true;   // every banded row passed
  // Canonical byte-deterministic JSONL (config line, row lines, summary).
  std::string to_jsonl() const;
  static RunReport from_jsonl_file(const std::filesystem::path& path);
};

// Build (or refresh) all ladder caches for the config.  Returns the cache
// paths; prints per-table status to stderr.
std::vector<std::filesystem::path> cmd_build(const LabConfig& config);

// Run the verification suites over all T in order: ladder invariants,
// segment matrix and metrics, exact weighted identity, Gram matrices,
// energy grid, algebra.  Requires warm caches (cmd_build first).
RunReport cmd_verify(const LabConfig& config);

// Render a report as CSV (fixed column set) or pretty JSON.
std::string render_report(const RunReport& report, const std::string& format);

}  // namespace ladderlab
