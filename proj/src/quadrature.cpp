#include "ladderlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ladderlab {
namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1,1] (positive half; the
// rule is symmetric).  Even-indexed abscissae carry the embedded 7-point
// Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double kronrod = 0.0;
  double gauss = 0.0;
  double err() const { return std::fabs(kronrod - gauss); }
};

struct Driver {
  const std::function<double(double)>& f;
  const QuadOptions& opt;
  long evals = 0;
  int panels = 0;
  long double total = 0.0L;
  double err_sum = 0.0;

  Panel rule(double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double dx = half * kXgk[i];
      const double fl = f(mid - dx);
      // The center node would be counted twice by the symmetric loop.
      const double fr = (i == 7) ? 0.0 : f(mid + dx);
      const double s = fl + fr;
      fk += kWgk[i] * s;
      if (i % 2 == 1) fg += kWg[i / 2] * s;
    }
    evals += 15;
    if (evals > opt.max_evals)
      throw std::runtime_error(
          "quadrature: evaluation budget exhausted before convergence");
    return Panel{fk * half, fg * half};
  }

  // Recursive bisection: accept a panel when its Gauss/Kronrod discrepancy
  // fits the proportional share `budget_per_len * (b - a)`.
  void refine(double a, double b, const Panel& p, double budget_per_len,
              int depth) {
    const double budget = budget_per_len * (b - a);
    if (p.err() <= budget || depth >= opt.max_depth) {
      if (p.err() > budget)
        throw std::runtime_error(
            "quadrature: max bisection depth reached without meeting the "
            "error budget");
      total += (long double)p.kronrod;
      err_sum += p.err();
      ++panels;
      return;
    }
    const double mid = 0.5 * (a + b);
    const Panel left = rule(a, mid);
    const Panel right = rule(mid, b);
    refine(a, mid, left, budget_per_len, depth + 1);
    refine(mid, b, right, budget_per_len, depth + 1);
  }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt) {
  if (!(a <= b))
    throw std::invalid_argument("quadrature: interval must have a <= b");
  QuadResult out;
  if (a == b) return out;

  Driver drv{f, opt};
  const double len = b - a;
  int n0 = 1;
  if (opt.max_panel_width > 0.0)
    n0 = std::max(1, (int)std::ceil(len / opt.max_panel_width));

  // Pass 1: evaluate the initial uniform split once to fix the scale for
  // the relative part of the budget (sum of |panel| is robust under
  // cancellation between panels).
  std::vector<double> edges(n0 + 1);
  for (int i = 0; i <= n0; ++i)
    edges[i] = a + len * (double(i) / double(n0));
  edges.back() = b;
  std::vector<Panel> first(n0);
  double scale = 0.0;
  for (int i = 0; i < n0; ++i) {
    first[i] = drv.rule(edges[i], edges[i + 1]);
    scale += std::fabs(first[i].kronrod);
  }

  const double budget = opt.rel_tol * scale + opt.abs_tol;
  const double budget_per_len = budget / len;

  // Pass 2: adaptive refinement, left to right (deterministic order).
  for (int i = 0; i < n0; ++i)
    drv.refine(edges[i], edges[i + 1], first[i], budget_per_len, 0);

  out.value = (double)drv.total;
  out.abs_error = drv.err_sum;
  out.panels = drv.panels;
  out.evals = drv.evals;
  return out;
}

QuadResult integrate_fixed(const std::function<double(double)>& f, double a,
                           double b, int panels) {
  if (panels < 1)
    throw std::invalid_argument("quadrature: need at least one panel");
  if (!(a <= b))
    throw std::invalid_argument("quadrature: interval must have a <= b");
  QuadResult out;
  if (a == b) return out;
  QuadOptions opt;
  opt.max_evals = (long)panels * 15 + 15;
  Driver drv{f, opt};
  const double len = b - a;
  long double total = 0.0L;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + len * (double(i) / double(panels));
    const double hi = (i + 1 == panels) ? b : a + len * (double(i + 1) / double(panels));
    const Panel p = drv.rule(lo, hi);
    total += (long double)p.kronrod;
    out.abs_error += p.err();
  }
  out.value = (double)total;
  out.panels = panels;
  out.evals = drv.evals;
  return out;
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("simpson: n must be even and >= 2");
  if (!(a <= b)) throw std::invalid_argument("simpson: need a <= b");
  if (a == b) return 0.0;
  const double h = (b - a) / n;
  long double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i)
    acc += f(a + h * i) * ((i % 2 == 1) ? 4.0 : 2.0);
  return (double)(acc * h / 3.0L);
}

}  // namespace ladderlab
