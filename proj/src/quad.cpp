#include "bliss/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace bliss {

namespace {

// 15-point Kronrod nodes on [-1,1] (positive half) with the embedded
// 7-point Gauss rule; the odd-indexed nodes carry the Gauss weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double err;
  bool splittable;
};

struct PanelEval {
  double value;
  double err;
};

PanelEval evaluate_panel(const ScalarFn& phi, const ScalarFn& pre, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double s[15], e[15], p[15];
  int n = 0;
  for (int i = 0; i < 7; ++i) {
    s[n++] = c - h * kXgk[i];
    s[n++] = c + h * kXgk[i];
  }
  s[n++] = c;

  double m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 15; ++i) {
    e[i] = phi(s[i]);
    if (!std::isfinite(e[i])) throw NonFiniteExponent(s[i], e[i]);
    p[i] = pre ? pre(s[i]) : 1.0;
    if (!std::isfinite(p[i]))
      throw NonFiniteExponent(s[i], p[i]);
    m = std::max(m, e[i]);
  }

  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double fa = p[2 * i] * std::exp(e[2 * i] - m);
    const double fb = p[2 * i + 1] * std::exp(e[2 * i + 1] - m);
    resk += kWgk[i] * (fa + fb);
    if (i % 2 == 1) resg += kWg[i / 2] * (fa + fb);
  }
  const double fc = p[14] * std::exp(e[14] - m);
  resk += kWgk[7] * fc;
  resg += kWg[3] * fc;

  const double scale = h * std::exp(m);
  const double value = scale * resk;
  if (!std::isfinite(value)) throw NonFiniteExponent(c, m);
  return PanelEval{value, std::abs(scale * (resk - resg))};
}

bool can_split(double a, double b) {
  const double w = b - a;
  return w > 8.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

NonFiniteExponent::NonFiniteExponent(double s, double phi)
    : std::runtime_error("non-finite exponent " + std::to_string(phi) + " at s = " +
                         std::to_string(s)),
      s_(s) {}

QuadResult integrate_exp_product(const ScalarFn& phi, const ScalarFn& pre,
                                 std::span<const double> breakpoints,
                                 const QuadConfig& cfg, long total_panel_budget) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw std::invalid_argument("QuadConfig: tolerances must be positive");
  if (cfg.max_panels < 8) throw std::invalid_argument("QuadConfig: max_panels must be >= 8");
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need an interval");

  std::vector<Panel> panels;
  panels.reserve(breakpoints.size() + 64);
  long evals = 0;

  // comparator: largest error first, leftmost panel on ties
  struct ByErr {
    const std::vector<Panel>* p;
    bool operator()(int i, int j) const {
      const Panel &a = (*p)[i], &b = (*p)[j];
      if (a.err != b.err) return a.err > b.err;
      return a.a < b.a;
    }
  };
  std::set<int, ByErr> queue(ByErr{&panels});

  double total = 0.0, total_err = 0.0;
  auto push_panel = [&](double a, double b) {
    const PanelEval pe = evaluate_panel(phi, pre, a, b);
    ++evals;
    panels.push_back(Panel{a, b, pe.value, pe.err, can_split(a, b)});
    queue.insert(static_cast<int>(panels.size()) - 1);
    total += pe.value;
    total_err += pe.err;
  };

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    push_panel(breakpoints[i], breakpoints[i + 1]);

  bool converged = false;
  long since_resync = 0;
  while (true) {
    if (++since_resync >= 256) {
      // running sums drift; refresh them before convergence decisions
      since_resync = 0;
      total = total_err = 0.0;
      for (const Panel& p : panels) {
        total += p.value;
        total_err += p.err;
      }
    }
    if (total_err <= std::max(cfg.rel_tol * std::abs(total), cfg.abs_tol)) {
      converged = true;
      break;
    }
    if (evals >= total_panel_budget) break;

    // split the worst splittable panel
    auto it = queue.begin();
    while (it != queue.end() && !panels[*it].splittable) ++it;
    if (it == queue.end()) break;  // nothing left to refine
    const int idx = *it;
    queue.erase(it);
    const Panel worst = panels[idx];
    total -= worst.value;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);

    const PanelEval left = evaluate_panel(phi, pre, worst.a, mid);
    ++evals;
    panels[idx] = Panel{worst.a, mid, left.value, left.err, can_split(worst.a, mid)};
    queue.insert(idx);
    total += left.value;
    total_err += left.err;
    push_panel(mid, worst.b);
  }

  // deterministic final sum: ascending panels
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.a < b.a; });
  QuadResult out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error_estimate += p.err;
  }
  out.panels_used = evals;
  out.converged = converged;
  return out;
}

double exponent_at(const GridFn& f, const WeightSpec& w, int N, double s) {
  if (s <= 0.0) return 0.0;
  const double v = f(s);
  if (v == 0.0) return 0.0;
  const double ratio = s * std::pow(std::abs(v) / s, N);
  return weight_eval(w, s) * ratio;
}

std::vector<double> integration_breakpoints(const GridFn& f, const QuadConfig& cfg) {
  const auto& x = f.abscissas();
  std::vector<double> bps;
  bps.reserve(static_cast<std::size_t>(x.size()) + 32);
  bps.push_back(0.0);

  // geometric pre-split of the first segment toward the origin; tiny panel
  // budgets cap the pre-split so adaptivity keeps room to act
  const double x1 = x[1];
  const double r = std::max(cfg.origin_refinement, 1.125);
  const int budget_cap = static_cast<int>(std::max<long>(1, cfg.max_panels / 2 - 2));
  const int levels = std::min(
      {60, budget_cap, static_cast<int>(std::ceil(std::log(1e6) / std::log(r)))});
  for (int m = levels; m >= 1; --m) {
    const double b = x1 * std::pow(r, -m);
    if (b > bps.back() * (1.0 + 1e-12) && b < x1) bps.push_back(b);
  }
  for (Eigen::Index i = 1; i < x.size(); ++i) bps.push_back(x[i]);
  return bps;
}

QuadResult integrate_exp(const GridFn& f, const WeightSpec& w, int N,
                         const QuadConfig& cfg) {
  if (N < 2) throw std::domain_error("integrate_exp: N must be >= 2");
  const auto bps = integration_breakpoints(f, cfg);
  const long budget = cfg.max_panels * static_cast<long>(f.segments());
  const ScalarFn phi = [&f, &w, N](double s) { return exponent_at(f, w, N, s); };
  return integrate_exp_product(phi, ScalarFn{}, bps, cfg, budget);
}

}  // namespace bliss
