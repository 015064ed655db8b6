// Flat report rows and their canonical serializations.  One row describes
// one check: where it ran (suite, law, indices, T), what was measured
// (value, predicted, ratio, residual) and the verdict.  The JSONL form is
// byte-deterministic (sorted keys, shortest-round-trip numbers) and is the
// canonical artifact; the CSV rendering carries exactly the columns
//   suite,law,p,q,P,Q,T,value,predicted,ratio,residual,pass
// with 17-significant-digit numbers so json -> csv -> json preserves every
// numeric field.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ladderlab {

// Sentinel for "index not applicable" (rendered as an empty CSV cell and a
// JSON null).
inline constexpr int kNoIndex = -1;

struct ReportRow {
  std::string suite;  // ladder | segments | energy | ortho | algebra
  std::string law;    // check name (algebra law name for the algebra suite)
  int p = kNoIndex;
  int q = kNoIndex;
  int P = kNoIndex;
  int Q = kNoIndex;
  double T = 0.0;
  double value = 0.0;
  double predicted = 0.0;  // NaN = n/a
  double ratio = 0.0;      // NaN = n/a
  double residual = 0.0;
  bool pass = true;
  bool exact = true;  // exact identity (gates exit code) vs asymptotic band
};

nlohmann::json row_to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::json& j);

// "%.17g" rendering (shortest text that round-trips a double exactly).
std::string fmt17(double x);

// CSV rendering of rows (leading header line).
extern const char* const kCsvHeader;
std::string row_to_csv(const ReportRow& row);
ReportRow row_from_csv(const std::string& line);

// FNV-1a 64-bit over a byte string; used for cache keys.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace ladderlab
