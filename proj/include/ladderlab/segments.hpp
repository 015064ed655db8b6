// Reversely iterated segments.  For a base interval [T, T + 2l] the q-th
// segment is its q-fold preimage [T^{->q}, (T+2l)^{->q}] under phi1; the
// (p,q) matrix entry uses 2l = ln^-p T.  The row set Delta_p collects the
// entries q = 1..k, which are pairwise disjoint and increasing with gaps
// on the scale (1-c) T / ln T.
#pragma once

#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

struct SegmentHandle {
  int p = -1;             // row index; -1 for general base lengths
  int q = 0;              // iteration depth (column index)
  double T = 0.0;         // base height
  double base_len = 0.0;  // 2l of the base interval
  double lo = 0.0;        // T^{->q}
  double hi = 0.0;        // (T + 2l)^{->q}
  double width() const { return hi - lo; }
};

struct DeltaSet {
  int p = 0;
  double T = 0.0;
  std::vector<SegmentHandle> components;  // q = 1..k, ordered
};

// (p,q) matrix entry: q-fold preimage of [T, T + ln^-p T].
// Throws std::invalid_argument for T <= e or indices < 1, and propagates
// std::out_of_range from the ladder when the window is exhausted.
SegmentHandle segment(const Ladder& ladder, double T, int p, int q);

// Same with an arbitrary base length 2l (handle carries p = -1).
SegmentHandle segment_general(const Ladder& ladder, double T, double base_len,
                              int q);

// Row set Delta_p = union of segments q = 1..k.
DeltaSet delta_set(const Ladder& ladder, double T, int p, int k);

struct Window {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

// Build-window estimate guaranteeing (heuristically, with ~50% headroom)
// that k reverse iterates of heights near T stay inside:
//   [T - (1-c) T / ln T,  T + 1.5 k (1-c) T / ln T].
// Throws std::invalid_argument for T <= e^2 or k < 0.
Window window_requirement(double T, int k, double c = kDefaultC);

}  // namespace ladderlab
