// Adaptive Gauss-Kronrod (7,15) quadrature.
//
// The integrands in this project are smooth but locally oscillatory (powers
// of Z(t)^2 along ladder iterates), so the driver combines an initial uniform
// split -- capped panel width keyed to the oscillation scale -- with
// recursive bisection under a per-unit-length error budget.
#pragma once

#include <functional>

namespace ladderlab {

struct QuadOptions {
  double rel_tol = 1e-8;         // budget relative to the integral scale
  double abs_tol = 0.0;          // absolute budget floor
  double max_panel_width = 0.0;  // 0 = single initial panel
  int max_depth = 48;            // bisection depth per initial panel
  long max_evals = 200000000;    // hard safety valve
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // sum of accepted per-panel error estimates
  int panels = 0;          // accepted panel count
  long evals = 0;          // integrand evaluations
};

// Integrate f over [a, b] (a <= b required).  The error budget is
// rel_tol * scale + abs_tol, where scale = sum of |panel integral| over the
// initial split; each panel receives the share proportional to its width.
// Throws std::invalid_argument for a reversed interval and
// std::runtime_error when the budget cannot be met within max_depth /
// max_evals.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt = {});

// Composite Gauss-Kronrod (7,15) on a fixed uniform grid of `panels`
// subintervals (no refinement).  abs_error reports the summed Gauss/Kronrod
// discrepancy of the grid.  Used where the caller wants the grid resolution
// itself to be the accuracy lever, e.g. the Gram matrices.
QuadResult integrate_fixed(const std::function<double(double)>& f, double a,
                           double b, int panels);

// Composite Simpson rule with n (even) subintervals; used as the independent
// fixed-grid cross-check against the adaptive driver.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n);

}  // namespace ladderlab
