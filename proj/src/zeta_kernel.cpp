#include "ladderlab/zeta_kernel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/detail/rs_coeffs.hpp"

namespace ladderlab {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

std::string bad_t(const char* fn, double t, const char* why) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %s (t = %.17g)", fn, why, t);
  return buf;
}

// Im log Gamma(x0 + i y0) on the continuous branch, by Stirling's series
// after promoting the argument to |z| >= 16 (each promotion step
// contributes arg(z) in (0, pi/2), so no branch jumps occur).
long double im_log_gamma(long double x0, long double y0) {
  std::complex<long double> z(x0, y0);
  long double arg_sum = 0.0L;
  while (std::abs(z) < 16.0L) {
    arg_sum += std::atan2(z.imag(), z.real());
    z += 1.0L;
  }
  std::complex<long double> acc = (z - 0.5L) * std::log(z) - z;
  const std::complex<long double> zinv2 = 1.0L / (z * z);
  std::complex<long double> zp = 1.0L / z;
  for (long double s : detail::kStirling) {
    acc += s * zp;
    zp *= zinv2;
  }
  return acc.imag() - arg_sum;
}

long double rs_theta_impl(long double t) {
  return im_log_gamma(0.25L, 0.5L * t) - 0.5L * t * std::log(kPiL);
}

// log n and 1/sqrt(n) tables for the Riemann-Siegel main sum; the index
// bound covers N = floor(sqrt(t/2pi)) for every t <= kTMaxFast.
constexpr int kMaxMainTerms = 4001;

const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> v(kMaxMainTerms, 0.0);
    for (int n = 1; n < kMaxMainTerms; ++n) v[n] = std::log(double(n));
    return v;
  }();
  return table;
}

const std::vector<double>& rsqrt_table() {
  static const std::vector<double> table = [] {
    std::vector<double> v(kMaxMainTerms, 0.0);
    for (int n = 1; n < kMaxMainTerms; ++n) v[n] = 1.0 / std::sqrt(double(n));
    return v;
  }();
  return table;
}

template <std::size_t M>
double horner(const double (&coef)[M], double u) {
  double acc = 0.0;
  for (std::size_t i = M; i-- > 0;) acc = acc * u + coef[i];
  return acc;
}

// Riemann-Siegel: Z(t) = 2 sum_{n<=N} cos(theta - t log n)/sqrt(n)
//                        + (-1)^{N-1} a^{-1/2} [C0 + C1/a + C2/a^2 + C3/a^3]
// with a = sqrt(t/2pi), N = floor(a), and the C_j Taylor tables in
// u = frac(a) - 1/2.
double riemann_siegel_z(double t) {
  const double a = std::sqrt(t / kTwoPi);
  const int N = (int)a;
  const double p = a - N;
  const double theta = (double)rs_theta_impl(t);
  const double* ln = log_table().data();
  const double* rs = rsqrt_table().data();
  double sum = 0.0;
  for (int n = 1; n <= N; ++n) sum += std::cos(theta - t * ln[n]) * rs[n];

  const double u = p - 0.5;
  const double ainv = 1.0 / a;
  double corr = horner(detail::kC3, u);
  corr = corr * ainv + horner(detail::kC2, u);
  corr = corr * ainv + horner(detail::kC1, u);
  corr = corr * ainv + horner(detail::kC0, u);
  const double sign = (N % 2 == 1) ? 1.0 : -1.0;
  return 2.0 * sum + sign * corr / std::sqrt(a);
}

// Euler-Maclaurin evaluation of zeta(s), s = 1/2 + it, in long double:
//   sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
//   + sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
// N ~ t/2 makes the 20-term tail far smaller than long double epsilon.
std::complex<long double> zeta_half_em(long double t) {
  const long long N = std::max<long long>(32, (long long)std::ceil(0.5L * t));
  long double sre = 0.0L, sim = 0.0L;
  for (long long n = 1; n < N; ++n) {
    const long double ph = t * std::log((long double)n);
    const long double w = 1.0L / std::sqrt((long double)n);
    sre += w * std::cos(ph);
    sim -= w * std::sin(ph);
  }
  const long double phN = t * std::log((long double)N);
  const long double wN = 1.0L / std::sqrt((long double)N);
  const std::complex<long double> n_pow_ms(wN * std::cos(phN),
                                           -wN * std::sin(phN));  // N^{-s}
  const std::complex<long double> s(0.5L, t);
  std::complex<long double> acc(sre, sim);
  acc += 0.5L * n_pow_ms;
  acc += (long double)N * n_pow_ms / (s - 1.0L);
  const long double n_inv2 = 1.0L / ((long double)N * (long double)N);
  std::complex<long double> term = s * n_pow_ms / (long double)N;
  acc += detail::kBernoulliOverFact[0] * term;
  for (std::size_t j = 1; j < std::size(detail::kBernoulliOverFact); ++j) {
    const long double m = (long double)(2 * j);
    term *= (s + (m - 1.0L)) * (s + m) * n_inv2;
    acc += detail::kBernoulliOverFact[j] * term;
  }
  return acc;
}

double hardy_z_oracle(double t) {
  const long double th = rs_theta_impl((long double)t);
  const std::complex<long double> rot(std::cos(th), std::sin(th));
  return (double)(rot * zeta_half_em((long double)t)).real();
}

void check_domain(const char* fn, double t, EvalMode mode) {
  if (!(t > 0.0)) throw std::domain_error(bad_t(fn, t, "t must be positive"));
  if (mode == EvalMode::fast && (t < kTMinFast || t > kTMaxFast))
    throw std::domain_error(
        bad_t(fn, t, "fast mode is valid for 100 <= t <= 1e8"));
}

}  // namespace

double rs_theta(double t) {
  if (!(t > 0.0))
    throw std::domain_error(bad_t("rs_theta", t, "t must be positive"));
  return (double)rs_theta_impl((long double)t);
}

double hardy_z(double t, EvalMode mode) {
  check_domain("hardy_z", t, mode);
  return mode == EvalMode::fast ? riemann_siegel_z(t) : hardy_z_oracle(t);
}

double zeta_mod_sq(double t, EvalMode mode) {
  check_domain("zeta_mod_sq", t, mode);
  if (mode == EvalMode::fast) {
    const double z = riemann_siegel_z(t);
    return z * z;
  }
  const std::complex<long double> zh = zeta_half_em((long double)t);
  return (double)(zh.real() * zh.real() + zh.imag() * zh.imag());
}

std::complex<double> zeta_half(double t) {
  if (!(t > 0.0))
    throw std::domain_error(bad_t("zeta_half", t, "t must be positive"));
  const std::complex<long double> z = zeta_half_em((long double)t);
  return {(double)z.real(), (double)z.imag()};
}

std::vector<double> hardy_zeros(int count) {
  if (count < 1)
    throw std::invalid_argument("hardy_zeros: count must be >= 1");
  std::vector<double> zeros;
  zeros.reserve(count);
  const double step = 0.25;
  double t0 = 4.0;
  double z0 = hardy_z(t0, EvalMode::oracle);
  while ((int)zeros.size() < count) {
    const double t1 = t0 + step;
    const double z1 = hardy_z(t1, EvalMode::oracle);
    if (z0 == 0.0) {
      zeros.push_back(t0);
    } else if (z0 * z1 < 0.0) {
      double lo = t0, hi = t1, flo = z0;
      for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = hardy_z(mid, EvalMode::oracle);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    t0 = t1;
    z0 = z1;
  }
  return zeros;
}

}  // namespace ladderlab
