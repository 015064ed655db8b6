#include "ladderlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ladderlab {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

nlohmann::json num_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

nlohmann::json idx_or_null(int i) {
  if (i == kNoIndex) return nullptr;
  return i;
}

double num_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null())
    return std::nan("");
  return j[key].get<double>();
}

int idx_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return kNoIndex;
  return j[key].get<int>();
}

}  // namespace

nlohmann::json row_to_json(const ReportRow& row) {
  nlohmann::json j;  // object keys serialize sorted -> deterministic bytes
  j["suite"] = row.suite;
  j["law"] = row.law;
  j["p"] = idx_or_null(row.p);
  j["q"] = idx_or_null(row.q);
  j["P"] = idx_or_null(row.P);
  j["Q"] = idx_or_null(row.Q);
  j["T"] = row.T;
  j["value"] = num_or_null(row.value);
  j["predicted"] = num_or_null(row.predicted);
  j["ratio"] = num_or_null(row.ratio);
  j["residual"] = num_or_null(row.residual);
  j["pass"] = row.pass;
  j["exact"] = row.exact;
  return j;
}

ReportRow row_from_json(const nlohmann::json& j) {
  ReportRow row;
  row.suite = j.value("suite", std::string{});
  row.law = j.value("law", std::string{});
  row.p = idx_from(j, "p");
  row.q = idx_from(j, "q");
  row.P = idx_from(j, "P");
  row.Q = idx_from(j, "Q");
  row.T = num_from(j, "T");
  row.value = num_from(j, "value");
  row.predicted = num_from(j, "predicted");
  row.ratio = num_from(j, "ratio");
  row.residual = num_from(j, "residual");
  row.pass = j.value("pass", false);
  row.exact = j.value("exact", true);
  return row;
}

const char* const kCsvHeader =
    "suite,law,p,q,P,Q,T,value,predicted,ratio,residual,pass";

namespace {

std::string csv_num(double x) { return std::isnan(x) ? "" : fmt17(x); }
std::string csv_idx(int i) {
  return i == kNoIndex ? "" : std::to_string(i);
}

}  // namespace

std::string row_to_csv(const ReportRow& row) {
  std::ostringstream os;
  os << row.suite << ',' << row.law << ',' << csv_idx(row.p) << ','
     << csv_idx(row.q) << ',' << csv_idx(row.P) << ',' << csv_idx(row.Q)
     << ',' << fmt17(row.T) << ',' << csv_num(row.value) << ','
     << csv_num(row.predicted) << ',' << csv_num(row.ratio) << ','
     << csv_num(row.residual) << ',' << (row.pass ? "true" : "false");
  return os.str();
}

ReportRow row_from_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  if (cells.size() != 12)
    throw std::invalid_argument("report CSV row must have 12 cells, got " +
                                std::to_string(cells.size()));
  auto as_num = [](const std::string& s) {
    return s.empty() ? std::nan("") : std::strtod(s.c_str(), nullptr);
  };
  auto as_idx = [](const std::string& s) {
    return s.empty() ? kNoIndex : std::atoi(s.c_str());
  };
  ReportRow row;
  row.suite = cells[0];
  row.law = cells[1];
  row.p = as_idx(cells[2]);
  row.q = as_idx(cells[3]);
  row.P = as_idx(cells[4]);
  row.Q = as_idx(cells[5]);
  row.T = as_num(cells[6]);
  row.value = as_num(cells[7]);
  row.predicted = as_num(cells[8]);
  row.ratio = as_num(cells[9]);
  row.residual = as_num(cells[10]);
  row.pass = cells[11] == "true";
  return row;
}

}  // namespace ladderlab
