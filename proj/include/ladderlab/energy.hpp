// Iterated product integrals ("energies") over reversely iterated segments.
//
// Writing w(t) = phi1'(t) for the ladder's slope (the table realization of
// Z(t)^2 / ln t), the two integrand families over the depth-k segment
// [T^{->k}, (T+2l)^{->k}] are
//
//   weighted:  prod_{r=0}^{k-1} w(phi1^r(t))            -> integral == 2l
//   raw:       prod_{r=0}^{k-1} w(phi1^r(t)) ln(phi1^r(t))
//                                         -> integral ~ 2l (ln T)^k
//
// The weighted case telescopes exactly (the integrand is the derivative of
// phi1^k), so its integral is an end-to-end correctness oracle for the
// quadrature + inverse machinery; the raw case carries the completely
// logarithmic asymptotics tested as banded ratios.  Evaluating the slope
// through the ladder interpolant (not fresh kernel calls) keeps both exact
// properties exact; kernel agreement is audited separately by the ladder
// derivative checks.
#pragma once

#include <vector>

#include "ladderlab/ladder.hpp"
#include "ladderlab/segments.hpp"

namespace ladderlab {

struct EnergyRecord {
  int p = -1;             // -1 when the record is not a (p,q) matrix entry
  int q = 0;
  double T = 0.0;
  double value = 0.0;     // computed integral
  double predicted = 0.0; // 2l (ln T)^k, i.e. (ln T)^{q-p} for matrix entries
  double ratio = 0.0;     // value / predicted
  double quad_err = 0.0;  // quadrature error estimate
  SegmentHandle segment;
};

struct MeanValuePoints {
  double c1 = 0.0;          // mean-value witness in the open segment
  std::vector<double> d;    // d[r] = phi1^r(c1), r = 0..q-1
};

struct SpectralResult {
  double value = 0.0;         // recovered energy int F(omega)^2 d omega
  double err_estimate = 0.0;  // relative trapezoid estimate (vs half grid)
  // err_estimate <= 5% and the time grid resolves omega_max (Nyquist).
  bool resolution_ok = true;
};

// Exact weighted identity: integral of the weighted product over the
// depth-k segment of [T, T+2l]; equals 2l up to quadrature + endpoint
// error.  `l` is the HALF length (the base interval is [T, T+2l]).
// Enforces the o-scale precondition 2l <= 0.01 T / ln T.
double weighted_energy(const Ladder& ladder, double T, double l, int k,
                       double tol = 1e-8);

// Raw energy over the same segment; predicted = 2l (ln T)^k.  k = 0 is the
// degenerate empty product (value = 2l exactly).
EnergyRecord energy_general(const Ladder& ladder, double T, double l, int k,
                            double tol = 1e-8);

// Matrix entry E_{p,q}: energy_general with 2l = ln^-p T and depth q;
// predicted = (ln T)^{q-p}.
EnergyRecord energy_pq(const Ladder& ladder, double T, int p, int q,
                       double tol = 1e-8);

// Mean-value factorization: leftmost c1 in the open segment with
// |segment| * integrand(c1) = rec.value, plus its forward iterates.
// Throws std::runtime_error if no sign change is found (non-degenerate
// records always have one by continuity).
MeanValuePoints mean_value_points(const Ladder& ladder,
                                  const EnergyRecord& rec);

// Parseval check: cosine transform F of the amplitude process
// f(u) = sqrt(integrand(lo + u)) on [0, width] (time measured from the
// segment onset -- the energy is shift-invariant), energy recovered as the
// trapezoid integral of F^2 over [0, omega_max] on an n_omega-point grid.
// omega_max <= 0 selects the default 200 * 2pi / width.
SpectralResult spectral_energy(const Ladder& ladder, const EnergyRecord& rec,
                               double omega_max = 0.0, int n_omega = 8192);

}  // namespace ladderlab
