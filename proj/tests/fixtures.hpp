#pragma once

// Shared fixtures for the unit-test suites: one small ladder, built once,
// wide enough for three reverse iterates above T = 2010 and one forward
// window below it.  Building takes well under a second, and every suite
// that needs a ladder reuses this instance.

#include <mutex>

#include "ladderlab/ladder.hpp"
#include "ladderlab/segments.hpp"

namespace ladderlab::testing {

inline constexpr double kFixtureT = 2010.0;
inline constexpr int kFixtureK = 3;

inline const Ladder& test_ladder() {
  static const Ladder lad = [] {
    const Window w = window_requirement(kFixtureT, kFixtureK);
    LadderParams p;
    p.t_lo = w.t_lo;
    p.t_hi = w.t_hi;
    return Ladder::build(p);
  }();
  return lad;
}

// Deterministic xorshift; keeps test point sets identical across runs
// and platforms without dragging <random> distributions in.
struct Rng {
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  double uniform() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return (double)(state >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

}  // namespace ladderlab::testing
