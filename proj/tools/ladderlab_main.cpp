// ladderlab: build ladder caches, run the verification suites, and render
// reports.  Also exposes the per-module probes (segments / energy / ortho /
// algebra) that emit machine-readable JSON for ad-hoc exploration.
//
// Exit codes: 0 success, 1 check failure (exact identities always gate;
// asymptotic bands gate only under --strict-bands), 2 usage or I/O error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladderlab/algebra.hpp"
#include "ladderlab/energy.hpp"
#include "ladderlab/lab.hpp"
#include "ladderlab/ortho.hpp"
#include "ladderlab/report.hpp"
#include "ladderlab/segments.hpp"
#include "ladderlab/zeta_kernel.hpp"

namespace {

using namespace ladderlab;

struct CommonOpts {
  std::string config_path;
  std::vector<double> T_values;
  int k = 0;
  double tol = 0.0;
  bool strict_bands = false;
  std::string format = "jsonl";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "JSON config file (defaults apply when omitted)");
  cmd->add_option("--T", opts.T_values,
                  "base height(s); overrides the config T_grid");
  cmd->add_option("--k", opts.k, "max iteration depth; overrides the config");
  cmd->add_option("--tol", opts.tol,
                  "quadrature tolerance; overrides the config");
}

// Precedence: built-in defaults < config file < LADDERLAB_CACHE env < flags.
LabConfig resolve_config(const CommonOpts& opts) {
  LabConfig config;
  if (!opts.config_path.empty())
    config = LabConfig::from_file(opts.config_path);
  apply_env_overrides(config);
  if (!opts.T_values.empty()) config.T_grid = opts.T_values;
  if (opts.k > 0) config.k = opts.k;
  if (opts.tol > 0.0) config.tol_quad = opts.tol;
  config.validate();
  return config;
}

nlohmann::json num_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

nlohmann::json segment_to_json(const SegmentHandle& h) {
  nlohmann::json j;
  j["p"] = h.p;
  j["q"] = h.q;
  j["T"] = h.T;
  j["base_len"] = h.base_len;
  j["lo"] = h.lo;
  j["hi"] = h.hi;
  return j;
}

SegmentHandle segment_from_json(const nlohmann::json& j) {
  SegmentHandle h;
  h.p = j.value("p", -1);
  h.q = j.value("q", 0);
  h.T = j.value("T", 0.0);
  h.base_len = j.value("base_len", 0.0);
  h.lo = j.value("lo", 0.0);
  h.hi = j.value("hi", 0.0);
  return h;
}

nlohmann::json record_to_json(const EnergyRecord& rec) {
  nlohmann::json j;
  j["p"] = rec.p;
  j["q"] = rec.q;
  j["T"] = rec.T;
  j["value"] = rec.value;
  j["predicted"] = rec.predicted;
  j["ratio"] = rec.ratio;
  j["quad_err"] = rec.quad_err;
  j["segment"] = segment_to_json(rec.segment);
  return j;
}

EnergyRecord record_from_json(const nlohmann::json& j) {
  EnergyRecord rec;
  rec.p = j.at("p").get<int>();
  rec.q = j.at("q").get<int>();
  rec.T = j.at("T").get<double>();
  rec.value = j.at("value").get<double>();
  rec.predicted = j.at("predicted").get<double>();
  rec.ratio = j.at("ratio").get<double>();
  rec.quad_err = j.value("quad_err", 0.0);
  if (j.contains("segment")) rec.segment = segment_from_json(j.at("segment"));
  return rec;
}

nlohmann::json algebra_to_json(const AlgebraReport& rep) {
  nlohmann::json j;
  j["law"] = law_name(rep.law);
  j["lhs"] = num_or_null(rep.lhs);
  j["rhs"] = num_or_null(rep.rhs);
  j["residual"] = num_or_null(rep.residual);
  j["exponent"] = rep.exponent;
  j["closure_ok"] = rep.closure_ok;
  j["closure_ok_k0"] = rep.closure_ok_k0;
  j["mean_exact_rel"] = num_or_null(rep.mean_exact_rel);
  nlohmann::json inputs = nlohmann::json::array();
  for (const EnergyRecord& rec : rep.inputs) {
    nlohmann::json in;
    in["p"] = rec.p;
    in["q"] = rec.q;
    in["T"] = rec.T;
    in["value"] = rec.value;
    inputs.push_back(in);
  }
  j["inputs"] = inputs;
  return j;
}

// ---- subcommand bodies --------------------------------------------------

int run_build(const CommonOpts& opts) {
  const LabConfig config = resolve_config(opts);
  for (const auto& path : cmd_build(config))
    std::cout << path.string() << '\n';
  return 0;
}

int run_verify(const CommonOpts& opts) {
  const LabConfig config = resolve_config(opts);
  const RunReport report = cmd_verify(config);
  if (opts.format == "jsonl")
    std::cout << report.to_jsonl();
  else
    std::cout << render_report(report, opts.format);
  if (!report.exact_pass) return 1;
  if (opts.strict_bands && !report.bands_pass) return 1;
  return 0;
}

int run_report(const std::string& report_path, const std::string& format) {
  const RunReport report = RunReport::from_jsonl_file(report_path);
  std::cout << render_report(report, format);
  return 0;
}

int run_segments(const CommonOpts& opts) {
  const LabConfig config = resolve_config(opts);
  nlohmann::json out = nlohmann::json::array();
  for (double T : config.T_grid) {
    const Ladder lad = load_or_build(config, T);
    for (int p = 1; p <= config.k; ++p) {
      const DeltaSet d = delta_set(lad, T, p, config.k);
      double prev_hi = T + d.components[0].base_len;  // base interval end
      for (const SegmentHandle& h : d.components) {
        nlohmann::json j = segment_to_json(h);
        j["gap_prev"] = h.lo - prev_hi;
        prev_hi = h.hi;
        out.push_back(j);
      }
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_energy(const CommonOpts& opts, const std::string& csv_path) {
  const LabConfig config = resolve_config(opts);
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv)
      throw std::runtime_error("energy: cannot open " + csv_path);
    csv << "p,q,T,value,predicted,ratio,quad_err\n";
  }
  for (double T : config.T_grid) {
    const Ladder lad = load_or_build(config, T);
    for (int p = 1; p <= config.k; ++p) {
      for (int q = 1; q <= config.k; ++q) {
        const EnergyRecord rec = energy_pq(lad, T, p, q, config.tol_quad);
        std::cout << record_to_json(rec).dump() << '\n';
        if (csv)
          csv << rec.p << ',' << rec.q << ',' << fmt17(rec.T) << ','
              << fmt17(rec.value) << ',' << fmt17(rec.predicted) << ','
              << fmt17(rec.ratio) << ',' << fmt17(rec.quad_err) << '\n';
      }
    }
  }
  return 0;
}

int run_ortho(const CommonOpts& opts, const std::string& csv_path) {
  const LabConfig config = resolve_config(opts);
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv)
      throw std::runtime_error("ortho: cannot open " + csv_path);
    csv << "T,k,m,n,value,target,residual\n";
  }
  const BaseSystem sys(0.5, config.n_base);
  nlohmann::json out = nlohmann::json::array();
  for (double T : config.T_grid) {
    const Ladder lad = load_or_build(config, T);
    const GramReport g =
        gram_matrix(lad, sys, T, config.k, config.tol_quad);
    nlohmann::json j;
    j["T"] = g.T;
    j["k"] = g.k;
    j["l"] = g.l;
    j["n"] = g.n;
    j["quad_tol"] = g.quad_tol;
    j["target"] = g.target;
    nlohmann::json matrix = nlohmann::json::array();  // row-major
    for (int r = 0; r < g.n; ++r)
      for (int c = 0; c < g.n; ++c) matrix.push_back(g.at(r, c));
    j["matrix"] = matrix;
    j["worst_offdiag"] = g.worst_offdiag;
    j["worst_diag_rel"] = g.worst_diag_rel;
    out.push_back(j);
    if (csv) {
      for (int r = 0; r < g.n; ++r) {
        for (int c = 0; c < g.n; ++c) {
          const double target = r == c ? g.target[(std::size_t)r] : 0.0;
          csv << fmt17(T) << ',' << g.k << ',' << r << ',' << c << ','
              << fmt17(g.at(r, c)) << ',' << fmt17(target) << ','
              << fmt17(std::fabs(g.at(r, c) - target)) << '\n';
        }
      }
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_algebra(const std::string& records_path, int k, int k0) {
  std::ifstream in(records_path);
  if (!in)
    throw std::runtime_error("algebra: cannot open " + records_path);
  std::vector<EnergyRecord> recs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      recs.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("algebra: " + records_path + ":" +
                               std::to_string(lineno) + ": " + e.what());
    }
  }
  if (recs.empty())
    throw std::invalid_argument("algebra: no records in " + records_path);

  const auto find = [&](int p, int q) -> const EnergyRecord* {
    for (const EnergyRecord& rec : recs)
      if (rec.p == p && rec.q == q) return &rec;
    return nullptr;
  };

  std::vector<AlgebraReport> reports;
  const EnergyRecord* gen = find(2, 1);
  if (gen) {
    for (const EnergyRecord& rec : recs)
      if (rec.p != rec.q) reports.push_back(generator_check(rec, *gen));
    for (const EnergyRecord& r1 : recs)
      for (const EnergyRecord& r2 : recs)
        reports.push_back(product_check(r1, r2, *gen, k, k0));
  }
  {
    std::vector<EnergyRecord> units;
    for (const EnergyRecord& rec : recs)
      if (rec.p == rec.q) units.push_back(rec);
    if (!units.empty()) {
      const std::vector<AlgebraReport> unit_reports = unit_check(units);
      reports.insert(reports.end(), unit_reports.begin(), unit_reports.end());
    }
  }
  for (const EnergyRecord& rec : recs) {
    if (rec.p >= rec.q) continue;
    if (const EnergyRecord* swapped = find(rec.q, rec.p))
      reports.push_back(inverse_check(rec, *swapped));
  }

  // Exact invariants: every report must reproduce residual = |lhs/rhs - 1|
  // and (for product laws) the closure arithmetic; bands are informational.
  int exact_failures = 0;
  for (const AlgebraReport& rep : reports) {
    std::cout << algebra_to_json(rep).dump() << '\n';
    if (!std::isfinite(rep.lhs) || !std::isfinite(rep.rhs) ||
        !std::isfinite(rep.residual)) {
      ++exact_failures;
      continue;
    }
    const double expect = std::fabs(rep.lhs / rep.rhs - 1.0);
    if (std::fabs(rep.residual - expect) >
        1e-12 * std::max(1.0, expect))
      ++exact_failures;
    if (rep.law == AlgebraLaw::product && rep.inputs.size() == 2) {
      const bool want =
          closure_ok(rep.inputs[0].p, rep.inputs[0].q, rep.inputs[1].p,
                     rep.inputs[1].q, k);
      if (rep.closure_ok != want) ++exact_failures;
    }
  }
  return exact_failures == 0 ? 0 : 1;
}

int run_zeta_probe(double t, const std::string& mode) {
  const EvalMode m =
      mode == "oracle" ? EvalMode::oracle : EvalMode::fast;
  nlohmann::json j;
  j["t"] = t;
  j["mode"] = mode;
  j["theta"] = rs_theta(t);
  j["z"] = hardy_z(t, m);
  j["z2"] = zeta_mod_sq(t, m);
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ladderlab: a numerical laboratory for iterated product integrals of "
      "|zeta(1/2+it)|^2 over reversely iterated segments"};
  app.require_subcommand(1);

  CommonOpts build_opts, verify_opts, seg_opts, energy_opts, ortho_opts;

  CLI::App* build = app.add_subcommand("build", "build ladder caches");
  add_common(build, build_opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "run all suites; JSONL report on stdout");
  add_common(verify, verify_opts);
  verify->add_flag("--strict-bands", verify_opts.strict_bands,
                   "asymptotic band failures also gate the exit code");
  verify->add_option("--format", verify_opts.format,
                     "jsonl (default), csv, or json")
      ->check(CLI::IsMember({"jsonl", "csv", "json"}));

  std::string report_path, report_format = "csv";
  CLI::App* report = app.add_subcommand(
      "report", "render a saved JSONL report as CSV or JSON");
  report->add_option("path", report_path, "JSONL report file")->required();
  report->add_option("--format", report_format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* segments = app.add_subcommand(
      "segments", "emit the k x k segment matrix as JSON");
  add_common(segments, seg_opts);

  std::string energy_csv;
  CLI::App* energy = app.add_subcommand(
      "energy", "emit energy records as JSON lines");
  add_common(energy, energy_opts);
  energy->add_option("--csv", energy_csv, "also write a CSV to this path");

  std::string ortho_csv;
  CLI::App* ortho = app.add_subcommand(
      "ortho", "emit the Gram matrix report as JSON");
  add_common(ortho, ortho_opts);
  ortho->add_option("--csv", ortho_csv,
                    "also write a residual CSV to this path");

  std::string algebra_path;
  int algebra_k = 3, algebra_k0 = 8;
  CLI::App* algebra = app.add_subcommand(
      "algebra", "check algebra laws over an energy-record JSONL file");
  algebra->add_option("records", algebra_path, "energy records (JSON lines)")
      ->required();
  algebra->add_option("--k", algebra_k, "closure depth");
  algebra->add_option("--k0", algebra_k0, "fallback closure depth");

  double probe_t = 0.0;
  std::string probe_mode = "fast";
  CLI::App* probe = app.add_subcommand("zeta-probe", "");
  probe->group("");  // hidden debugging probe
  probe->add_option("t", probe_t)->required();
  probe->add_option("--mode", probe_mode)
      ->check(CLI::IsMember({"fast", "oracle"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_build(build_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (report->parsed()) return run_report(report_path, report_format);
    if (segments->parsed()) return run_segments(seg_opts);
    if (energy->parsed()) return run_energy(energy_opts, energy_csv);
    if (ortho->parsed()) return run_ortho(ortho_opts, ortho_csv);
    if (algebra->parsed())
      return run_algebra(algebra_path, algebra_k, algebra_k0);
    if (probe->parsed()) return run_zeta_probe(probe_t, probe_mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
