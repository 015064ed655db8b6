#include "ladderlab/segments.hpp"

#include <cmath>
#include <stdexcept>

namespace ladderlab {

SegmentHandle segment_general(const Ladder& ladder, double T, double base_len,
                              int q) {
  if (q < 1)
    throw std::invalid_argument("segment: depth q must be >= 1");
  if (!(base_len > 0.0))
    throw std::invalid_argument("segment: base length must be positive");
  SegmentHandle h;
  h.q = q;
  h.T = T;
  h.base_len = base_len;
  h.lo = ladder.reverse_point(T, q);
  h.hi = ladder.reverse_point(T + base_len, q);
  return h;
}

SegmentHandle segment(const Ladder& ladder, double T, int p, int q) {
  if (T <= 2.718281828459045235)
    throw std::invalid_argument(
        "segment: T must exceed e so that ln^-p T stays below T-scale");
  if (p < 1)
    throw std::invalid_argument("segment: row index p must be >= 1");
  SegmentHandle h =
      segment_general(ladder, T, std::pow(std::log(T), -p), q);
  h.p = p;
  return h;
}

DeltaSet delta_set(const Ladder& ladder, double T, int p, int k) {
  if (k < 1)
    throw std::invalid_argument("delta_set: k must be >= 1");
  DeltaSet d;
  d.p = p;
  d.T = T;
  d.components.reserve(k);
  for (int q = 1; q <= k; ++q)
    d.components.push_back(segment(ladder, T, p, q));
  return d;
}

Window window_requirement(double T, int k, double c) {
  if (!(T > 7.389056098930650227))
    throw std::invalid_argument("window_requirement: T must exceed e^2");
  if (k < 0)
    throw std::invalid_argument("window_requirement: k must be >= 0");
  const double gap = (1.0 - c) * T / std::log(T);
  return Window{T - gap, T + 1.5 * k * gap};
}

}  // namespace ladderlab
