#include "ladderlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {
namespace {

// prod_{r<k} w(phi1^r(t)), the derivative of phi1^k realized through the
// interpolant, so its integral over a depth-k segment telescopes exactly.
double weighted_integrand(const Ladder& lad, int k, double t) {
  double prod = 1.0;
  double x = t;
  for (int r = 0; r < k; ++r) {
    prod *= lad.phi1_slope(x);
    if (r + 1 < k) x = lad.phi1(x);
  }
  return prod;
}

// prod_{r<k} w(phi1^r(t)) ln(phi1^r(t)); each level contributes one factor
// of ln, producing the (ln T)^k growth law.
double raw_integrand(const Ladder& lad, int k, double t) {
  double prod = 1.0;
  double x = t;
  for (int r = 0; r < k; ++r) {
    prod *= lad.phi1_slope(x) * std::log(x);
    if (r + 1 < k) x = lad.phi1(x);
  }
  return prod;
}

void check_scale(double T, double l) {
  if (!(l > 0.0))
    throw std::invalid_argument("energy: half length l must be positive");
  if (!(2.0 * l <= 0.01 * T / std::log(T)))
    throw std::invalid_argument(
        "energy: base length 2l exceeds the o-scale bound 0.01 T / ln T");
}

QuadOptions panel_options(double tol, double width) {
  QuadOptions opt;
  opt.rel_tol = tol;
  opt.max_panel_width = width / 64.0;
  return opt;
}

SegmentHandle base_only_handle(double T, double l, int p) {
  SegmentHandle h;
  h.p = p;
  h.q = 0;
  h.T = T;
  h.base_len = 2.0 * l;
  h.lo = T;
  h.hi = T + 2.0 * l;
  return h;
}

}  // namespace

double weighted_energy(const Ladder& ladder, double T, double l, int k,
                       double tol) {
  if (k < 0) throw std::invalid_argument("weighted_energy: k must be >= 0");
  check_scale(T, l);
  if (k == 0) return 2.0 * l;  // empty product over the base itself
  const SegmentHandle h = segment_general(ladder, T, 2.0 * l, k);
  const QuadResult q = integrate(
      [&](double t) { return weighted_integrand(ladder, k, t); }, h.lo,
      h.hi, panel_options(tol, h.width()));
  return q.value;
}

EnergyRecord energy_general(const Ladder& ladder, double T, double l, int k,
                            double tol) {
  if (k < 0) throw std::invalid_argument("energy_general: k must be >= 0");
  check_scale(T, l);
  EnergyRecord rec;
  rec.q = k;
  rec.T = T;
  if (k == 0) {
    rec.segment = base_only_handle(T, l, -1);
    rec.value = 2.0 * l;
    rec.predicted = 2.0 * l;
    rec.ratio = 1.0;
    rec.quad_err = 0.0;
    return rec;
  }
  rec.segment = segment_general(ladder, T, 2.0 * l, k);
  const QuadResult q = integrate(
      [&](double t) { return raw_integrand(ladder, k, t); }, rec.segment.lo,
      rec.segment.hi, panel_options(tol, rec.segment.width()));
  rec.value = q.value;
  rec.quad_err = q.abs_error;
  rec.predicted = 2.0 * l * std::pow(std::log(T), k);
  rec.ratio = rec.value / rec.predicted;
  return rec;
}

EnergyRecord energy_pq(const Ladder& ladder, double T, int p, int q,
                       double tol) {
  if (p < 1) throw std::invalid_argument("energy_pq: p must be >= 1");
  if (q < 0) throw std::invalid_argument("energy_pq: q must be >= 0");
  const double logT = std::log(T);
  const double l = 0.5 * std::pow(logT, -p);
  EnergyRecord rec = energy_general(ladder, T, l, q, tol);
  rec.p = p;
  rec.segment.p = p;
  rec.predicted = std::pow(logT, q - p);
  rec.ratio = rec.value / rec.predicted;
  return rec;
}

MeanValuePoints mean_value_points(const Ladder& ladder,
                                  const EnergyRecord& rec) {
  const int q = rec.q;
  if (q < 1)
    throw std::invalid_argument("mean_value_points: record depth must be "
                                ">= 1");
  const double lo = rec.segment.lo, hi = rec.segment.hi;
  const double mean = rec.value / rec.segment.width();
  const auto g = [&](double t) {
    return raw_integrand(ladder, q, t) - mean;
  };

  // Leftmost crossing of the mean: fixed 512-point scan, then bisection.
  // The deterministic grid pins the tie-break when several crossings exist.
  constexpr int kScan = 512;
  double a = 0.0, b = 0.0, ga = 0.0;
  bool found = false;
  double prev_t = lo + (hi - lo) / (kScan + 1);
  double prev_g = g(prev_t);
  for (int i = 2; i <= kScan && !found; ++i) {
    const double t = lo + i * (hi - lo) / (kScan + 1);
    const double gt = g(t);
    if (prev_g == 0.0 || (prev_g < 0.0) != (gt < 0.0)) {
      a = prev_t;
      b = t;
      ga = prev_g;
      found = true;
    } else {
      prev_t = t;
      prev_g = gt;
    }
  }
  if (!found)
    throw std::runtime_error(
        "mean_value_points: integrand never crosses its mean on the scan "
        "grid (degenerate record?)");

  if (ga == 0.0) {
    b = a;
  } else {
    for (int iter = 0; iter < 100 && b - a > 1e-16 * hi; ++iter) {
      const double mid = 0.5 * (a + b);
      const double gm = g(mid);
      if (gm == 0.0) {
        a = b = mid;
        break;
      }
      if ((gm < 0.0) == (ga < 0.0)) {
        a = mid;
        ga = gm;
      } else {
        b = mid;
      }
    }
  }

  MeanValuePoints out;
  out.c1 = 0.5 * (a + b);
  out.d.resize(q);
  double x = out.c1;
  for (int r = 0; r < q; ++r) {
    out.d[r] = x;
    if (r + 1 < q) x = ladder.phi1(x);
  }
  return out;
}

SpectralResult spectral_energy(const Ladder& ladder, const EnergyRecord& rec,
                               double omega_max, int n_omega) {
  if (n_omega < 16)
    throw std::invalid_argument("spectral_energy: n_omega must be >= 16");
  n_omega &= ~1;  // the half-resolution pass strides the grid by two
  const double width = rec.segment.width();
  if (!(width > 0.0))
    throw std::invalid_argument("spectral_energy: degenerate segment");
  if (omega_max <= 0.0) omega_max = 200.0 * kTwoPi / width;

  // Amplitude samples f(u) = sqrt(integrand(lo + u)) on a uniform grid;
  // n_t is a multiple of four so Simpson works on the half grid too.
  const int n_t = std::max(64, (n_omega / 2) & ~3);
  const double du = width / n_t;
  std::vector<double> f(n_t + 1);
  for (int i = 0; i <= n_t; ++i)
    f[i] = std::sqrt(
        std::max(0.0, raw_integrand(ladder, rec.q, rec.segment.lo + i * du)));

  // Cosine transform by composite Simpson over the time samples, with
  // `stride` selecting the full or half time grid.
  const double scale = std::sqrt(2.0 / kPi);
  const auto transform = [&](double omega, int stride) {
    const double h = du * stride;
    double sum = f[0] + f[n_t] * std::cos(omega * width);
    for (int i = stride; i < n_t; i += stride) {
      const double w = (i / stride) % 2 == 1 ? 4.0 : 2.0;
      sum += w * f[i] * std::cos(omega * (i * du));
    }
    return scale * sum * h / 3.0;
  };

  // Trapezoid in omega; the half-resolution pass coarsens both grids so the
  // error estimate sees time aliasing as well as omega discretization.
  const auto recover = [&](int om_stride, int t_stride) {
    const double dw = omega_max / n_omega;
    long double acc = 0.0;
    for (int j = 0; j <= n_omega; j += om_stride) {
      const double F = transform(j * dw, t_stride);
      const double w =
          (j == 0 || j == n_omega) ? 0.5 : 1.0;
      acc += (long double)(w * F * F);
    }
    return (double)acc * dw * om_stride;
  };

  SpectralResult out;
  out.value = recover(1, 1);
  const double coarse = recover(2, 2);
  out.err_estimate =
      std::fabs(coarse - out.value) / std::max(std::fabs(out.value), 1e-300);
  // A half-grid comparison cannot see aliasing once the grid is badly
  // undersampled (both passes alias the same way), so the flag also
  // requires the time grid to resolve omega_max at the Nyquist limit.
  out.resolution_ok = out.err_estimate <= 0.05 && omega_max * du <= kPi;
  return out;
}

}  // namespace ladderlab
