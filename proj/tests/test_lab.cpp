// Configuration, cache management, and the verify pipeline at a small
// working height (T = 2010) where a cold ladder build takes about a second.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "ladderlab/lab.hpp"

namespace fs = std::filesystem;
using namespace ladderlab;

namespace {

fs::path lab_cache_dir() {
  return fs::temp_directory_path() / "ladderlab_test_lab_cache";
}

// Small but complete configuration: one T, full depth, slim Gram matrix.
LabConfig small_config() {
  LabConfig config;
  config.T_grid = {2010.0};
  config.k = 3;
  config.n_base = 3;
  config.cache_dir = lab_cache_dir();
  return config;
}

std::vector<ReportRow> rows_where(const RunReport& report,
                                  const std::string& suite,
                                  const std::string& law = "") {
  std::vector<ReportRow> out;
  for (const ReportRow& row : report.rows)
    if (row.suite == suite && (law.empty() || row.law == law))
      out.push_back(row);
  return out;
}

}  // namespace

TEST_SUITE("lab") {

TEST_CASE("config validation rejects malformed fields") {
  LabConfig ok = small_config();
  CHECK_NOTHROW(ok.validate());

  LabConfig c = ok;
  c.T_grid.clear();
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.T_grid = {1.0e4, 1.0e4};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.T_grid = {999.0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.k = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.k = c.k0 + 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.tol_quad = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.tol_ladder = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.bands = {1.2, 2.0};  // lo must sit below 1
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.unit_bands = {0.5, 0.9};  // hi must sit above 1
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.n_base = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.cache_dir.clear();
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("config json round trip and file loading") {
  const LabConfig base = small_config();
  const nlohmann::json j = base.to_json();
  const LabConfig back = LabConfig::from_json(j);
  CHECK(back.to_json().dump() == j.dump());
  CHECK(back.T_grid == base.T_grid);
  CHECK(back.k == base.k);
  CHECK(back.seed == base.seed);
  CHECK(back.bands.lo == base.bands.lo);
  CHECK(back.unit_bands.hi == base.unit_bands.hi);
  CHECK(back.cache_dir == base.cache_dir);

  // Partial JSON keeps defaults for everything unspecified.
  const LabConfig partial = LabConfig::from_json({{"k", 2}});
  CHECK(partial.k == 2);
  CHECK(partial.T_grid == LabConfig{}.T_grid);
  CHECK(partial.n_base == LabConfig{}.n_base);

  CHECK_THROWS_AS(LabConfig::from_json({{"tol", 1.0}}),
                  std::invalid_argument);  // unknown key

  const fs::path dir = fs::temp_directory_path() / "ladderlab_test_config";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "good.json");
    out << j.dump(2);
  }
  const LabConfig from_disk = LabConfig::from_file(dir / "good.json");
  CHECK(from_disk.to_json().dump() == j.dump());
  {
    std::ofstream out(dir / "bad.json");
    out << "{ not json";
  }
  CHECK_THROWS_AS(LabConfig::from_file(dir / "bad.json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(LabConfig::from_file(dir / "absent.json"),
                  std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("build hash keys the cache on build-relevant fields only") {
  const LabConfig base = small_config();
  const std::uint64_t h = base.build_hash();

  LabConfig c = base;
  c.seed = 7;
  c.n_base = 5;
  c.tol_quad = 1e-6;
  c.bands = {0.4, 2.5};
  CHECK(c.build_hash() == h);  // verify-only knobs do not invalidate caches

  c = base;
  c.k = 2;
  CHECK(c.build_hash() != h);
  c = base;
  c.tol_ladder = 1e-8;
  CHECK(c.build_hash() != h);
  c = base;
  c.T_grid = {2010.0, 1.0e4};
  CHECK(c.build_hash() != h);
}

TEST_CASE("cache path embeds T and the build hash; env var overrides dir") {
  const LabConfig config = small_config();
  const fs::path path = ladder_cache_path(config, 2010.0);
  CHECK(path.parent_path() == config.cache_dir);
  const std::string name = path.filename().string();
  CHECK(name.rfind("ladder_T2010", 0) == 0);
  CHECK(path.extension() == ".csv");
  char expect[24];
  std::snprintf(expect, sizeof expect, "%016llx",
                (unsigned long long)config.build_hash());
  CHECK(name.find(expect) != std::string::npos);

  ::setenv("LADDERLAB_CACHE", "/tmp/ladderlab_env_cache", 1);
  LabConfig overridden = small_config();
  apply_env_overrides(overridden);
  CHECK(overridden.cache_dir == fs::path("/tmp/ladderlab_env_cache"));
  ::unsetenv("LADDERLAB_CACHE");
  LabConfig untouched = small_config();
  apply_env_overrides(untouched);
  CHECK(untouched.cache_dir == small_config().cache_dir);
}

TEST_CASE("cmd_build is idempotent and load_or_build reuses the cache") {
  const LabConfig config = small_config();
  fs::remove_all(config.cache_dir);

  bool built = false;
  const Ladder cold = load_or_build(config, 2010.0, &built);
  CHECK(built);
  const fs::path path = ladder_cache_path(config, 2010.0);
  CHECK(fs::exists(path));
  CHECK(fs::exists(path.string() + ".json"));

  const Ladder warm = load_or_build(config, 2010.0, &built);
  CHECK_FALSE(built);
  CHECK(warm.knots_t() == cold.knots_t());
  CHECK(warm.knots_phi() == cold.knots_phi());

  const auto stamp = fs::last_write_time(path);
  const auto paths = cmd_build(config);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == path);
  CHECK(fs::last_write_time(path) == stamp);  // no rebuild on warm cache
}

TEST_CASE("cmd_verify requires a warm cache") {
  LabConfig config = small_config();
  config.cache_dir = fs::temp_directory_path() / "ladderlab_test_lab_empty";
  fs::remove_all(config.cache_dir);
  CHECK_THROWS_WITH_AS(cmd_verify(config),
                       doctest::Contains("run the build command"),
                       std::runtime_error);
}

TEST_CASE("cmd_verify emits the ordered suites and passes exact checks") {
  const LabConfig config = small_config();
  cmd_build(config);
  const RunReport report = cmd_verify(config);

  // Fixed row budget: 4 ladder + 15 segments + 9 weighted + 4 ortho +
  // 9 grid + 26 algebra.
  CHECK(report.rows.size() == 67);

  // Suite order matches the pipeline order.
  std::vector<std::string> first_seen;
  for (const ReportRow& row : report.rows)
    if (first_seen.empty() || first_seen.back() != row.suite)
      if (std::find(first_seen.begin(), first_seen.end(), row.suite) ==
          first_seen.end())
        first_seen.push_back(row.suite);
  CHECK(first_seen == std::vector<std::string>{"ladder", "segments",
                                               "energy", "ortho", "algebra"});
  CHECK(report.rows.front().law == "anchor");

  CHECK(rows_where(report, "ladder").size() == 4);
  CHECK(rows_where(report, "segments").size() == 15);
  CHECK(rows_where(report, "energy", "weighted").size() == 9);
  CHECK(rows_where(report, "ortho").size() == 4);
  CHECK(rows_where(report, "energy", "unit").size() == 3);
  CHECK(rows_where(report, "energy", "ratio").size() == 6);
  CHECK(rows_where(report, "algebra").size() == 26);

  // Every exact identity holds at this height; the only asymptotic bands
  // allowed to miss are the ln-endpoint rows (they tighten only as T
  // grows, and 2010 is far below the height where 1.01 is reachable).
  CHECK(report.exact_pass);
  for (const ReportRow& row : report.rows) {
    if (row.pass) continue;
    CHECK_FALSE(row.exact);
    CHECK(row.law == "ln_endpoint");
  }

  for (const ReportRow& row : rows_where(report, "energy", "weighted")) {
    CHECK(row.exact);
    CHECK(row.residual <= 1e-6);
  }
  for (const ReportRow& row : rows_where(report, "energy", "unit"))
    CHECK(row.predicted == 1.0);
  const auto symbolic = rows_where(report, "algebra", "inverse_symbolic");
  REQUIRE(symbolic.size() == 1);
  CHECK(symbolic[0].value == 0.0);
  CHECK(symbolic[0].pass);
  CHECK(symbolic[0].q == 257);
}

TEST_CASE("cmd_verify is deterministic and the jsonl round-trips") {
  const LabConfig config = small_config();
  cmd_build(config);
  const RunReport a = cmd_verify(config);
  const RunReport b = cmd_verify(config);
  const std::string jsonl = a.to_jsonl();
  CHECK(jsonl == b.to_jsonl());  // byte-identical on a warm cache

  // First line carries the config echo, last line the summary.
  std::istringstream lines(jsonl);
  std::string first, line, last;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    if (count == 0) first = line;
    last = line;
    ++count;
  }
  CHECK(count == a.rows.size() + 2);
  CHECK(nlohmann::json::parse(first).at("type") == "config");
  const nlohmann::json summary = nlohmann::json::parse(last);
  CHECK(summary.at("type") == "summary");
  CHECK(summary.at("exact_pass").get<bool>() == a.exact_pass);
  CHECK(summary.at("suites").contains("algebra"));
  CHECK(summary.at("suites").at("ladder").at("rows").get<int>() == 4);

  const fs::path dir = fs::temp_directory_path() / "ladderlab_test_report";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "run.jsonl", std::ios::binary);
    out << jsonl;
  }
  const RunReport back = RunReport::from_jsonl_file(dir / "run.jsonl");
  CHECK(back.rows.size() == a.rows.size());
  CHECK(back.exact_pass == a.exact_pass);
  CHECK(back.bands_pass == a.bands_pass);
  CHECK(back.to_jsonl() == jsonl);

  {
    std::ofstream out(dir / "truncated.jsonl", std::ios::binary);
    out << first << '\n';  // no summary line
  }
  CHECK_THROWS_AS(RunReport::from_jsonl_file(dir / "truncated.jsonl"),
                  std::runtime_error);
  CHECK_THROWS_AS(RunReport::from_jsonl_file(dir / "absent.jsonl"),
                  std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("render_report emits csv and json; rejects unknown formats") {
  const LabConfig config = small_config();
  cmd_build(config);
  const RunReport report = cmd_verify(config);

  const std::string csv = render_report(report, "csv");
  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == kCsvHeader);
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const ReportRow row = row_from_csv(line);
    CHECK(row.suite == report.rows[n].suite);
    CHECK(row.law == report.rows[n].law);
    CHECK(row.pass == report.rows[n].pass);
    CHECK(row.value == report.rows[n].value);  // 17 digits round-trip
    ++n;
  }
  CHECK(n == report.rows.size());

  const nlohmann::json j = nlohmann::json::parse(render_report(report, "json"));
  CHECK(j.at("rows").size() == report.rows.size());
  CHECK(j.at("summary").at("exact_pass").get<bool>() == report.exact_pass);
  CHECK(j.at("config").at("k").get<int>() == config.k);

  CHECK_THROWS_AS(render_report(report, "yaml"), std::invalid_argument);
}

TEST_CASE("k=1 reduces the grid to the single unit record") {
  LabConfig config = small_config();
  config.k = 1;
  cmd_build(config);  // separate cache (k enters the hash)
  const RunReport report = cmd_verify(config);

  const auto units = rows_where(report, "energy", "unit");
  REQUIRE(units.size() == 1);
  CHECK(units[0].p == 1);
  CHECK(units[0].q == 1);
  CHECK(units[0].predicted == 1.0);
  CHECK(rows_where(report, "energy", "ratio").empty());
  CHECK(rows_where(report, "algebra", "generator").empty());
  CHECK(rows_where(report, "algebra", "product").empty());
  CHECK(rows_where(report, "algebra", "inverse").empty());
  CHECK(rows_where(report, "algebra", "unit").size() == 1);
  CHECK(report.rows.size() == 17);
  CHECK(report.exact_pass);
  CHECK(report.bands_pass);  // depth 1 stays inside every band at T=2010

  fs::remove_all(lab_cache_dir());
}

}  // TEST_SUITE
