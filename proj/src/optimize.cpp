#include "bliss/optimize.hpp"

#include "bliss/sequences.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace bliss {

ScanResult scan_broken_line(const WeightSpec& w, int N, std::span<const double> a_grid,
                            const QuadConfig& cfg) {
  if (a_grid.empty()) throw std::invalid_argument("scan_broken_line: empty grid");
  ScanResult out;
  out.table.reserve(a_grid.size());
  out.best_a = a_grid.front();
  out.best_value = -std::numeric_limits<double>::infinity();
  for (double a : a_grid) {
    if (!(a > 0.0 && a <= 1.0))
      throw std::domain_error("scan_broken_line: a must lie in (0,1]");
    ScanRow row{a, std::numeric_limits<double>::quiet_NaN(), false};
    try {
      const QuadResult r = eval_functional(broken_line(a, N), w, N, cfg);
      row.value = r.value;
      row.converged = r.converged;
      if (r.value > out.best_value) {
        out.best_value = r.value;
        out.best_a = a;
      }
    } catch (const NonFiniteExponent&) {
      // keep the row, value stays NaN
    }
    out.table.push_back(row);
  }
  return out;
}

namespace {

Eigen::ArrayXd cell_widths(const Eigen::ArrayXd& x) {
  return x.tail(x.size() - 1) - x.head(x.size() - 1);
}

Eigen::ArrayXd normalize_slopes(const Eigen::ArrayXd& g, const Eigen::ArrayXd& dx, int N) {
  const double e = (g.abs().pow(N) * dx).sum();
  if (!(e > 0.0)) throw std::domain_error("maximize_gridfn: zero-energy slope vector");
  return g * std::pow(e, -1.0 / N);
}

// slopes of f resampled onto grid x; exact when the kinks of f are nodes of x
Eigen::ArrayXd resample_slopes(const GridFn& f, const Eigen::ArrayXd& x) {
  Eigen::ArrayXd g(x.size() - 1);
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
    g[i] = (f(x[i + 1]) - f(x[i])) / (x[i + 1] - x[i]);
  return g;
}

}  // namespace

OptimizeReport maximize_gridfn(const WeightSpec& w, int N, int segments,
                               const std::optional<GridFn>& init, std::uint64_t seed,
                               const OptimizeConfig& cfg) {
  if (segments < 2) throw std::invalid_argument("maximize_gridfn: segments must be >= 2");
  if (N < 2) throw std::domain_error("maximize_gridfn: N must be >= 2");

  double x_min = cfg.x_min;
  Eigen::ArrayXd x = geometric_grid(segments, x_min);
  Eigen::ArrayXd dx = cell_widths(x);

  auto value_of = [&](const Eigen::ArrayXd& g) {
    return eval_functional(grid_fn_from_slopes(x, g), w, N, cfg.quad).value;
  };

  // stage-0 start
  Eigen::ArrayXd g;
  if (init.has_value()) {
    g = resample_slopes(*init, x);
    const GridFn rebuilt = grid_fn_from_slopes(x, g);
    for (Eigen::Index i = 0; i < init->abscissas().size(); ++i) {
      const double xi = init->abscissas()[i];
      const double vi = init->values()[i];
      if (std::abs(rebuilt(xi) - vi) > 1e-12 * std::max(1.0, std::abs(vi)))
        throw std::invalid_argument(
            "maximize_gridfn: init does not live on the optimizer grid");
    }
    g = normalize_slopes(g.cwiseMax(0.0), dx, N);
  } else if (seed != 0) {
    std::mt19937_64 rng(seed);
    g.resize(segments);
    for (int i = 0; i < segments; ++i)
      g[i] = -std::log(1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53);
    g = normalize_slopes(g, dx, N);
  } else {
    g = normalize_slopes(Eigen::ArrayXd::Ones(segments), dx, N);
  }

  OptimizeReport report{grid_fn_from_slopes(x, g), value_of(g), 0,
                        OptimizeStatus::converged, {}, 1.0};
  report.trace.push_back(report.best_value);

  double stage_value = report.best_value;
  Eigen::ArrayXd stage_slopes = g;
  double prev_stage_best = -std::numeric_limits<double>::infinity();
  bool growth_persisted = true;
  bool last_stage_budget_hit = false;

  for (int stage = 0; stage <= cfg.refine_stages; ++stage) {
    if (stage > 0) {
      // deepen the grid and probe broken lines at the newly reachable scales
      x_min *= cfg.stage_shrink;
      const GridFn carried = grid_fn_from_slopes(x, stage_slopes);
      x = geometric_grid(segments, x_min);
      dx = cell_widths(x);
      stage_slopes = normalize_slopes(resample_slopes(carried, x).cwiseMax(0.0), dx, N);
      stage_value = value_of(stage_slopes);
      for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
        const Eigen::ArrayXd probe =
            normalize_slopes(resample_slopes(broken_line(x[i], N), x).cwiseMax(0.0), dx, N);
        const double pv = value_of(probe);
        if (pv > stage_value) {
          stage_value = pv;
          stage_slopes = probe;
        }
      }
    }

    // projected gradient ascent at the current grid
    bool capped = false;
    bool budget_hit = true;
    double step_scale = 1.0;  // warm-started across iterations
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      if (stage_value > cfg.divergence_cap) {
        capped = true;
        budget_hit = false;
        break;
      }
      const GridFn cur = grid_fn_from_slopes(x, stage_slopes);
      const GradResult gr = grad_slopes(cur, w, N, cfg.quad);
      // ascend along the component tangent to the energy sphere; the radial
      // component is removed again by the renormalization anyway
      const Eigen::ArrayXd normal = N * stage_slopes.pow(N - 1) * dx;
      const double nn = (normal * normal).sum();
      const Eigen::ArrayXd dir =
          gr.grad - ((gr.grad * normal).sum() / nn) * normal;
      const double gnorm = std::sqrt((dir * dir).sum());
      if (!(gnorm > 1e-14)) {
        budget_hit = false;
        break;
      }

      double eta = step_scale / (1.0 + gnorm);
      bool accepted = false;
      double candidate_value = stage_value;
      Eigen::ArrayXd candidate;
      for (int h = 0; h < cfg.line_search_halvings; ++h) {
        Eigen::ArrayXd trial = (stage_slopes + eta * dir).cwiseMax(0.0);
        if ((trial > 0.0).any()) {
          trial = normalize_slopes(trial, dx, N);
          const double tv = value_of(trial);
          if (tv > stage_value) {
            candidate = trial;
            candidate_value = tv;
            accepted = true;
            step_scale = (h == 0) ? std::min(step_scale * 2.0, 1e6)
                                  : std::max(step_scale * std::pow(0.5, h - 1), 1e-12);
            break;
          }
        }
        eta *= 0.5;
      }
      if (!accepted) {
        budget_hit = false;
        break;
      }

      const double rel_gain =
          (candidate_value - stage_value) / std::max(1.0, std::abs(stage_value));
      stage_slopes = candidate;
      stage_value = candidate_value;
      ++report.iterations;
      if (stage_value > report.best_value) {
        report.best_value = stage_value;
        report.best_fn = grid_fn_from_slopes(x, stage_slopes);
      }
      report.trace.push_back(report.best_value);
      if (rel_gain < cfg.improvement_tol) {
        budget_hit = false;
        break;
      }
    }
    last_stage_budget_hit = budget_hit;

    if (capped || stage_value > cfg.divergence_cap) {
      // crossing the cap always happens at the running stage maximum
      report.status = OptimizeStatus::divergence_detected;
      report.best_value = stage_value;
      report.best_fn = grid_fn_from_slopes(x, stage_slopes);
      break;
    }

    if (stage > 0) {
      const double growth = stage_value - prev_stage_best;
      if (growth < cfg.stage_growth_tol) {
        growth_persisted = false;
        report.status = OptimizeStatus::converged;
        break;
      }
    }
    prev_stage_best = stage_value;

    if (stage == cfg.refine_stages && growth_persisted && cfg.refine_stages > 0) {
      // the supremum kept climbing at every deepening of the concentration
      // scale; report it as divergence rather than a converged maximum
      report.status = OptimizeStatus::divergence_detected;
    }
  }

  if (report.status == OptimizeStatus::converged && last_stage_budget_hit)
    report.status = OptimizeStatus::budget_exhausted;
  report.concentration_abscissa = max_ratio(report.best_fn, N).a;
  return report;
}

}  // namespace bliss
