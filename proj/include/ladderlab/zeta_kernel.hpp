// Critical-line zeta machinery: the Riemann-Siegel theta function, Hardy's
// Z(t), and |zeta(1/2+it)|^2, each in two modes:
//
//   fast   -- Riemann-Siegel main sum plus the C0..C3 correction block;
//             valid on [100, 1e8], absolute error well under 1e-6.
//   oracle -- Euler-Maclaurin evaluation of zeta(1/2+it) in long double
//             with ~t/2 main-sum terms; any t > 0, error ~1e-12 or better.
//
// The oracle is the certification path: slow, simple, used by tests and
// calibration.  Everything downstream (ladder construction, energies) runs
// on the fast path.
#pragma once

#include <complex>
#include <vector>

namespace ladderlab {

enum class EvalMode { fast, oracle };

// theta(t) = -(t/2) ln pi + Im ln Gamma(1/4 + i t/2) on the continuous
// branch (theta(t) ~ (t/2) ln(t/2pi) - t/2 - pi/8 for large t).
// Throws std::domain_error for t <= 0.
double rs_theta(double t);

// Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it), real-valued.
// Fast mode throws std::domain_error outside [100, 1e8].
double hardy_z(double t, EvalMode mode = EvalMode::fast);

// |zeta(1/2 + it)|^2 = Z(t)^2; same domain rules as hardy_z.
double zeta_mod_sq(double t, EvalMode mode = EvalMode::fast);

// zeta(1/2 + it) itself, Euler-Maclaurin (oracle) path.
std::complex<double> zeta_half(double t);

// First `count` zeros of Z(t) for t > 4, located by oracle-mode sign scan
// and bisection to ~1e-12 absolute.
std::vector<double> hardy_zeros(int count);

}  // namespace ladderlab
