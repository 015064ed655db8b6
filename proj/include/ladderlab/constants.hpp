// Shared numerical constants for the ladder laboratory.
#pragma once

namespace ladderlab {

// Euler-Mascheroni constant; the model ladder uses c = gamma throughout.
inline constexpr double kEulerGamma = 0.5772156649015328606;

// Default anchor constant c of the ladder model.  phi1 is anchored so that
// t - phi1(t) = (1 - c) t / ln t at the window start.
inline constexpr double kDefaultC = kEulerGamma;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

// Fast kernel validity floor: the Riemann-Siegel expansion with the C0..C3
// correction block is used only for t >= kTMinFast; below that the
// Euler-Maclaurin evaluation is used unconditionally.
inline constexpr double kTMinFast = 100.0;

// Hard validity ceiling for double-precision phase arithmetic in the fast
// kernel (phase error ~ t * eps stays far below the 1e-6 gate here).
inline constexpr double kTMaxFast = 1.0e8;

}  // namespace ladderlab
