// Model Jacob's ladder phi1: the increasing solution of
//
//     phi1'(t) = Z(t)^2 / omega(t),   omega(t) = ln t,
//
// anchored at phi1(t_lo) = t_lo - (1-c) t_lo / ln t_lo with c = Euler gamma,
// tabulated over a working window by an embedded Dormand-Prince 4(5) pass
// and interpolated with a monotone cubic Hermite scheme.  The table also
// provides the inverse, forward iteration phi1^r, and reverse iteration
// T -> T^{->k} (k-fold preimage), which together generate every segment and
// energy integral downstream.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ladderlab/constants.hpp"

namespace ladderlab {

struct LadderParams {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double tol = 1e-9;      // ODE error budget per unit of t
  double c = kDefaultC;   // anchor constant
  double step_max = 5e-3; // knot spacing cap (controls interpolation error)
  double step_min = 1e-4; // controller floor; demanding less is an error
};

class Ladder {
 public:
  // Integrate the defining ODE across [t_lo, t_hi] (fast kernel).
  // Throws std::invalid_argument for a bad window (t_lo < 100, or shorter
  // than one minimum step) and std::runtime_error if the step controller
  // would need a step below step_min.
  static Ladder build(const LadderParams& params);

  // Cache round trip.  save() writes a CSV ("t,phi1", 17 significant
  // digits) plus a JSON sidecar <csv>.json with the build metadata; load()
  // restores a table that evaluates bit-identically to the saved one.
  void save(const std::filesystem::path& csv_path) const;
  static Ladder load(const std::filesystem::path& csv_path);

  // phi1(t); throws std::out_of_range outside [t_lo, t_hi].
  double phi1(double t) const;

  // d phi1 / dt of the interpolant (the table's realization of
  // Z(t)^2 / ln t); same domain as phi1.
  double phi1_slope(double t) const;

  // Unique t with phi1(t) = y, to machine precision (safeguarded Newton on
  // the Hermite cubic).  Throws std::out_of_range for y outside
  // [phi1(t_lo), phi1(t_hi)].
  double phi1_inv(double y) const;

  // r-fold forward composition, phi1^0(t) = t.  Throws std::out_of_range
  // naming the failing iterate if one leaves the window.
  double phi1_iter(double t, int r) const;

  // k-fold reverse iterate T^{->k}: phi1(T^{->k}) = T^{->(k-1)}, k=0 gives
  // T.  Throws std::out_of_range naming the failing iterate.
  double reverse_point(double T, int k) const;

  double t_lo() const { return t_.front(); }
  double t_hi() const { return t_.back(); }
  double phi_lo() const { return y_.front(); }
  double phi_hi() const { return y_.back(); }
  double tol() const { return params_.tol; }
  double c() const { return params_.c; }
  // Descriptor of the omega model baked into the table.
  const std::string& omega_spec() const { return omega_spec_; }
  std::size_t size() const { return t_.size(); }
  const std::vector<double>& knots_t() const { return t_; }
  const std::vector<double>& knots_phi() const { return y_; }

 private:
  Ladder() = default;
  void finalize_slopes();
  std::size_t locate(double t) const;
  std::size_t locate_y(double y) const;

  LadderParams params_;
  std::string omega_spec_ = "log";
  std::vector<double> t_;  // knots, strictly increasing
  std::vector<double> y_;  // phi1 at knots, strictly increasing
  std::vector<double> m_;  // interpolant slopes (kernel values, clamped)
};

}  // namespace ladderlab
