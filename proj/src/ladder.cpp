#include "ladderlab/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ladderlab/report.hpp"
#include "ladderlab/zeta_kernel.hpp"

namespace ladderlab {
namespace {

// Dormand-Prince 4(5) nodes and weights.  The right-hand side depends on t
// only, so each stage value is just w(t + c_i h) and the step reduces to an
// embedded quadrature rule; stages with zero weight in both rules (the
// c = 1/5 stage) are skipped, and the two c = 1 stages coincide (FSAL).
constexpr double kC3 = 3.0 / 10.0;
constexpr double kC4 = 4.0 / 5.0;
constexpr double kC5 = 8.0 / 9.0;

constexpr double kB1 = 35.0 / 384.0;
constexpr double kB3 = 500.0 / 1113.0;
constexpr double kB4 = 125.0 / 192.0;
constexpr double kB5 = -2187.0 / 6784.0;
constexpr double kB6 = 11.0 / 84.0;

// b - bhat (the c = 1 entries merged: 11/84 - 187/2100 - 1/40 = 71/4200).
constexpr double kD1 = 71.0 / 57600.0;
constexpr double kD3 = -71.0 / 16695.0;
constexpr double kD4 = 71.0 / 1920.0;
constexpr double kD5 = -17253.0 / 339200.0;
constexpr double kD6 = 71.0 / 4200.0;

double slope_kernel(double t) {
  return zeta_mod_sq(t, EvalMode::fast) / std::log(t);
}

std::string at_t(const char* msg, double t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (t = %.17g)", msg, t);
  return buf;
}

// Cubic Hermite on s in [0,1], written in delta form (increment added to
// y0) so the rounding error stays at one ulp of y even when the increment
// is ~1e-7 of it.  dy = y1 - y0; m0h/m1h are endpoint slopes times h.
inline double hermite_value(double y0, double dy, double m0h, double m1h,
                            double s) {
  return y0 + dy * s * s * (3.0 - 2.0 * s) +
         s * (1.0 - s) * (m0h * (1.0 - s) - m1h * s);
}

// d/ds of the above, divided by h on use; here in increment units (per s).
inline double hermite_dvalue(double dy, double m0h, double m1h, double s) {
  return 6.0 * s * (1.0 - s) * dy + m0h * (1.0 - s) * (1.0 - 3.0 * s) +
         m1h * s * (3.0 * s - 2.0);
}

}  // namespace

Ladder Ladder::build(const LadderParams& params) {
  if (!(params.t_lo >= 100.0))
    throw std::invalid_argument(
        at_t("ladder build: t_lo must be >= 100 (fast-kernel floor)",
             params.t_lo));
  if (!(params.t_hi > params.t_lo + params.step_min))
    throw std::invalid_argument(
        "ladder build: window shorter than one minimum step");
  if (!(params.tol > 0.0) || !(params.step_min > 0.0) ||
      !(params.step_max > params.step_min))
    throw std::invalid_argument("ladder build: bad tolerance/step bounds");
  if (!(params.c > 0.0 && params.c < 1.0))
    throw std::invalid_argument("ladder build: anchor constant must be in (0,1)");

  Ladder lad;
  lad.params_ = params;

  const double len = params.t_hi - params.t_lo;
  lad.t_.reserve((std::size_t)(len / (0.7 * params.step_max)) + 16);
  lad.y_.reserve(lad.t_.capacity());
  lad.m_.reserve(lad.t_.capacity());

  double t = params.t_lo;
  double y = params.t_lo -
             (1.0 - params.c) * params.t_lo / std::log(params.t_lo);
  double k1 = slope_kernel(t);
  lad.t_.push_back(t);
  lad.y_.push_back(y);
  lad.m_.push_back(k1);

  double h = params.step_max;
  while (t < params.t_hi) {
    const bool final_step = (params.t_hi - t) <= h;
    if (final_step) h = params.t_hi - t;
    const double tend = final_step ? params.t_hi : t + h;

    const double k3 = slope_kernel(t + kC3 * h);
    const double k4 = slope_kernel(t + kC4 * h);
    const double k5 = slope_kernel(t + kC5 * h);
    const double k6 = slope_kernel(tend);

    const double err = h * std::fabs(kD1 * k1 + kD3 * k3 + kD4 * k4 +
                                     kD5 * k5 + kD6 * k6);
    const double budget = params.tol * h;

    if (err <= budget) {
      const double dy =
          h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
      if (!(dy > 0.0))
        throw std::runtime_error(
            at_t("ladder build: non-increasing step (Z^2 integral "
                 "degenerate)", t));
      t = tend;
      y += dy;
      k1 = k6;
      lad.t_.push_back(t);
      lad.y_.push_back(y);
      lad.m_.push_back(k6);
    }

    if (t >= params.t_hi) break;

    // Error-per-unit-length controller, err ~ h^5.
    double factor = 0.9 * std::pow(budget / std::max(err, 1e-300), 0.25);
    factor = std::clamp(factor, 0.2, 5.0);
    h = std::min(h * factor, params.step_max);
    if (h < params.step_min)
      throw std::runtime_error(
          at_t("ladder build: step controller demands a step below the "
               "1e-4 floor", t));
  }

  lad.finalize_slopes();
  return lad;
}

void Ladder::finalize_slopes() {
  const std::size_t n = t_.size();
  if (n < 2) throw std::runtime_error("ladder: degenerate table");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(t_[i] < t_[i + 1]) || !(y_[i] < y_[i + 1]))
      throw std::runtime_error(
          at_t("ladder: knot sequence not strictly increasing", t_[i]));
  }
  // Fritsch-Carlson clamp: with slopes in [0, 3*min(neighbor secants)] the
  // Hermite cubic is monotone on every interval.  Kernel slopes are exact
  // derivatives, so the clamp only ever engages next to zeros of Z.
  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    secant[i] = (y_[i + 1] - y_[i]) / (t_[i + 1] - t_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    double cap;
    if (i == 0)
      cap = 3.0 * secant[0];
    else if (i == n - 1)
      cap = 3.0 * secant[n - 2];
    else
      cap = 3.0 * std::min(secant[i - 1], secant[i]);
    m_[i] = std::clamp(m_[i], 0.0, cap);
  }
}

std::size_t Ladder::locate(double t) const {
  if (!(t >= t_.front() && t <= t_.back()))
    throw std::out_of_range(at_t("ladder: t outside the tabulated window",
                                 t));
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t idx = (std::size_t)std::distance(t_.begin(), it);
  return std::min(std::max<std::size_t>(idx, 1) - 1, t_.size() - 2);
}

std::size_t Ladder::locate_y(double y) const {
  if (!(y >= y_.front() && y <= y_.back()))
    throw std::out_of_range(
        at_t("ladder: y outside the tabulated image", y));
  const auto it = std::upper_bound(y_.begin(), y_.end(), y);
  const std::size_t idx = (std::size_t)std::distance(y_.begin(), it);
  return std::min(std::max<std::size_t>(idx, 1) - 1, y_.size() - 2);
}

double Ladder::phi1(double t) const {
  const std::size_t i = locate(t);
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  return hermite_value(y_[i], y_[i + 1] - y_[i], m_[i] * h, m_[i + 1] * h,
                       s);
}

double Ladder::phi1_slope(double t) const {
  const std::size_t i = locate(t);
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  return hermite_dvalue(y_[i + 1] - y_[i], m_[i] * h, m_[i + 1] * h, s) / h;
}

double Ladder::phi1_inv(double y) const {
  const std::size_t i = locate_y(y);
  const double h = t_[i + 1] - t_[i];
  const double y0 = y_[i];
  const double dy = y_[i + 1] - y0;
  const double m0h = m_[i] * h, m1h = m_[i + 1] * h;

  // Safeguarded Newton on the monotone cubic, in local coordinates.  The
  // bracket is driven all the way to a few ulp rather than stopping at a
  // residual threshold: near zeros of Z the cubic is locally flat and a
  // residual-based exit would leave t uncertain by ~(eps)^(1/3).
  double lo = 0.0, hi = 1.0;
  double s = std::clamp((y - y0) / dy, 0.0, 1.0);
  for (int iter = 0; iter < 120; ++iter) {
    const double g = hermite_value(y0, dy, m0h, m1h, s) - y;
    if (g == 0.0) break;
    if (g > 0.0)
      hi = s;
    else
      lo = s;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) break;
    const double gp = hermite_dvalue(dy, m0h, m1h, s);
    double snew = (gp > 0.0) ? s - g / gp : -1.0;
    if (!(snew > lo && snew < hi)) snew = 0.5 * (lo + hi);
    if (snew == s) break;
    s = snew;
  }
  return t_[i] + s * h;
}

double Ladder::phi1_iter(double t, int r) const {
  if (r < 0)
    throw std::invalid_argument("phi1_iter: r must be >= 0");
  double x = t;
  for (int j = 1; j <= r; ++j) {
    try {
      x = phi1(x);
    } catch (const std::out_of_range&) {
      std::ostringstream os;
      os << "phi1_iter: iterate " << j << " of " << r
         << " left the window at x = " << fmt17(x) << " (start t = "
         << fmt17(t) << ")";
      throw std::out_of_range(os.str());
    }
  }
  return x;
}

double Ladder::reverse_point(double T, int k) const {
  if (k < 0)
    throw std::invalid_argument("reverse_point: k must be >= 0");
  double y = T;
  for (int j = 1; j <= k; ++j) {
    try {
      y = phi1_inv(y);
    } catch (const std::out_of_range&) {
      std::ostringstream os;
      os << "reverse_point: reverse iterate " << j << " of " << k
         << " left the window at y = " << fmt17(y) << " (start T = "
         << fmt17(T) << ")";
      throw std::out_of_range(os.str());
    }
  }
  return y;
}

void Ladder::save(const std::filesystem::path& csv_path) const {
  std::ofstream csv(csv_path);
  if (!csv)
    throw std::runtime_error("ladder save: cannot open " +
                             csv_path.string());
  csv << "t,phi1\n";
  for (std::size_t i = 0; i < t_.size(); ++i)
    csv << fmt17(t_[i]) << ',' << fmt17(y_[i]) << '\n';
  if (!csv.good())
    throw std::runtime_error("ladder save: write failed for " +
                             csv_path.string());
  csv.close();

  nlohmann::json side;
  side["anchor_t"] = t_.front();
  side["anchor_phi1"] = y_.front();
  side["c"] = params_.c;
  side["omega_spec"] = omega_spec_;
  side["step_max"] = params_.step_max;
  side["step_min"] = params_.step_min;
  side["t_lo"] = params_.t_lo;
  side["t_hi"] = params_.t_hi;
  side["tol"] = params_.tol;
  std::filesystem::path side_path = csv_path;
  side_path += ".json";
  std::ofstream sj(side_path);
  if (!sj)
    throw std::runtime_error("ladder save: cannot open " +
                             side_path.string());
  sj << side.dump(2) << '\n';
}

Ladder Ladder::load(const std::filesystem::path& csv_path) {
  std::ifstream csv(csv_path);
  if (!csv)
    throw std::runtime_error("ladder load: cannot open " +
                             csv_path.string());
  std::filesystem::path side_path = csv_path;
  side_path += ".json";
  std::ifstream sj(side_path);
  if (!sj)
    throw std::runtime_error("ladder load: missing sidecar " +
                             side_path.string());
  nlohmann::json side = nlohmann::json::parse(sj);

  Ladder lad;
  lad.params_.t_lo = side.at("t_lo").get<double>();
  lad.params_.t_hi = side.at("t_hi").get<double>();
  lad.params_.tol = side.at("tol").get<double>();
  lad.params_.c = side.at("c").get<double>();
  lad.params_.step_max = side.at("step_max").get<double>();
  lad.params_.step_min = side.at("step_min").get<double>();
  lad.omega_spec_ = side.at("omega_spec").get<std::string>();
  if (lad.omega_spec_ != "log")
    throw std::runtime_error("ladder load: unsupported omega_spec '" +
                             lad.omega_spec_ + "'");

  std::string line;
  if (!std::getline(csv, line) || line != "t,phi1")
    throw std::runtime_error("ladder load: bad CSV header in " +
                             csv_path.string());
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const char* s = line.c_str();
    char* end = nullptr;
    const double t = std::strtod(s, &end);
    if (end == s || *end != ',')
      throw std::runtime_error("ladder load: malformed row '" + line + "'");
    const char* s2 = end + 1;
    const double y = std::strtod(s2, &end);
    if (end == s2)
      throw std::runtime_error("ladder load: malformed row '" + line + "'");
    lad.t_.push_back(t);
    lad.y_.push_back(y);
  }
  if (lad.t_.size() < 2)
    throw std::runtime_error("ladder load: table too small");
  const double anchor_t = side.at("anchor_t").get<double>();
  const double anchor_phi = side.at("anchor_phi1").get<double>();
  if (lad.t_.front() != anchor_t || lad.y_.front() != anchor_phi)
    throw std::runtime_error("ladder load: anchor mismatch vs sidecar");

  // Slopes are not stored: they are the kernel values at the knots, a pure
  // function of t, so recomputing reproduces the built table bit-exactly.
  lad.m_.resize(lad.t_.size());
  for (std::size_t i = 0; i < lad.t_.size(); ++i)
    lad.m_[i] = slope_kernel(lad.t_[i]);
  lad.finalize_slopes();
  return lad;
}

}  // namespace ladderlab
