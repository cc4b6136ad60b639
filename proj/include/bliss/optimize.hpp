#pragma once

// Lower-bound search for sup of a weighted functional over E_N:
//
//  * scan_broken_line evaluates the functional on the one-parameter family
//    of unit-energy broken lines (the maximizers of the basic inequality)
//    over a geometric grid of kink positions;
//
//  * maximize_gridfn runs projected gradient ascent on the nonnegative
//    slope vector of a log-uniform abscissa grid (step along the gradient,
//    clip negatives, renormalize the energy, backtracking line search), then
//    repeatedly deepens the grid toward s = 0, re-seeding each stage with
//    broken-line probes at the new scales. A supremum that keeps growing by
//    more than stage_growth_tol per deepening, concentrating at the grid
//    floor, is reported as divergence_detected; so is any iterate whose
//    value passes divergence_cap. Supercritical blow-up is a reportable
//    outcome, not an error.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bliss/functionals.hpp"
#include "bliss/gridfn.hpp"
#include "bliss/quad.hpp"
#include "bliss/weights.hpp"

namespace bliss {

struct ScanRow {
  double a;
  double value;
  bool converged;
};

struct ScanResult {
  double best_a;
  double best_value;
  std::vector<ScanRow> table;
};

ScanResult scan_broken_line(const WeightSpec& w, int N, std::span<const double> a_grid,
                            const QuadConfig& cfg = {});

enum class OptimizeStatus : std::uint8_t { converged, budget_exhausted, divergence_detected };

struct OptimizeConfig {
  int max_iters = 200;             // accepted ascent steps per stage
  double improvement_tol = 1e-8;   // relative improvement stopping rule
  double divergence_cap = 1e6;     // value cap; crossing it flags divergence
  double x_min = 1e-9;             // finest abscissa of the initial grid
  int refine_stages = 4;           // grid deepenings probing concentration
  double stage_shrink = 1e-3;      // x_min multiplier per deepening
  double stage_growth_tol = 0.05;  // persistent growth per deepening => divergence
  int line_search_halvings = 30;
  QuadConfig quad{};
};

struct OptimizeReport {
  GridFn best_fn;
  double best_value;
  int iterations;                  // accepted ascent steps, all stages
  OptimizeStatus status;
  std::vector<double> trace;       // best value so far at each accepted step
  double concentration_abscissa;   // max_ratio(best_fn).a
};

// init: a function living on the stage-0 grid (kinks must be grid nodes), or
// std::nullopt for the deterministic uniform-slope start. seed != 0 draws a
// random monotone start instead.
OptimizeReport maximize_gridfn(const WeightSpec& w, int N, int segments,
                               const std::optional<GridFn>& init = std::nullopt,
                               std::uint64_t seed = 0, const OptimizeConfig& cfg = {});

}  // namespace bliss
