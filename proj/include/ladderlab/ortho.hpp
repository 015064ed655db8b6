// Weighted orthogonal systems on iterated segments.
//
// From the classical Fourier system f_n on [0, 2l] (constant, then
// cos/sin pairs) each depth-k segment carries the weighted family
//
//   F_n(t) = f_n(phi1^k(t) - T) * sqrt((phi1^k)'(t)),
//
// which is L2-orthogonal on the segment with the same norms A_n as the base
// system -- exactly, by the change of variables u = phi1^k(t) - T.  The
// Gram matrix of the F_n therefore measures pure numerical error.
#pragma once

#include <vector>

#include "ladderlab/ladder.hpp"
#include "ladderlab/segments.hpp"

namespace ladderlab {

class BaseSystem {
 public:
  // n_functions entries: index 0 the constant 1, then cos/sin pairs at
  // frequencies pi/l, 2pi/l, ...  Throws std::invalid_argument for l <= 0
  // or n_functions < 1.
  BaseSystem(double l, int n_functions);

  double l() const { return l_; }
  int count() const { return count_; }
  // f_n(u) for u in [0, 2l].
  double eval(int n, double u) const;
  // Exact norm A_n = int_0^{2l} f_n^2: 2l for n = 0, l otherwise.
  double norm(int n) const;

 private:
  double l_ = 0.0;
  int count_ = 0;
};

struct GramReport {
  int k = 0;
  double T = 0.0;
  double l = 0.0;
  int n = 0;                    // matrix dimension
  std::vector<double> matrix;   // row-major n*n computed inner products
  std::vector<double> target;   // A_0..A_{n-1}
  double quad_tol = 0.0;
  double worst_offdiag = 0.0;   // max |G[m][n]|, m != n
  double worst_diag_rel = 0.0;  // max |G[n][n]/A_n - 1|
  double at(int row, int col) const { return matrix[row * n + col]; }
};

// Weighted system member F_n at t (t must lie in the depth-k segment of
// [T, T+2l]; enforced through the ladder's window checks).
double weighted_eval(const Ladder& ladder, const BaseSystem& sys, double T,
                     int k, int n, double t);

// Full Gram matrix of {F_n} on the depth-k segment of [T, T+2l] by adaptive
// quadrature (upper triangle computed, mirrored).  Expected: diag(A_n).
GramReport gram_matrix(const Ladder& ladder, const BaseSystem& sys, double T,
                       int k, double tol = 1e-6);

}  // namespace ladderlab
