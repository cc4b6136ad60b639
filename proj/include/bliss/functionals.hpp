#pragma once

// The weighted exponential functionals on E_N,
//
//   F_W(v) = integral_0^1 exp( W(s) |v(s)|^N / s^{N-1} ) ds,
//
// their slope gradients, and the closed-form comparison values along the
// concentrating Moser family w_j: the divergence lower bound for pure-log
// weights with beta = 1 + delta, and the (log j)^{gamma-1} growth model for
// supercritical log log weights.

#include <Eigen/Dense>

#include "bliss/gridfn.hpp"
#include "bliss/quad.hpp"
#include "bliss/weights.hpp"

namespace bliss {

// Named entry point for evaluating the functional; delegates to integrate_exp.
QuadResult eval_functional(const GridFn& f, const WeightSpec& w, int N,
                           const QuadConfig& cfg = {});

struct GradResult {
  Eigen::ArrayXd grad;    // one component per segment of f
  double error_estimate;  // summed across components
  long panels_used;
  bool converged;         // all component integrals converged
};

// d F_W / d g_i for the segment slopes g_i. The integrand of component i is
//   exp(phi(s)) W(s) N |v|^{N-1} sign(v) overlap_i(s) / s^{N-1},
// overlap_i(s) = max(0, min(s, x_{i+1}) - x_i), integrated over [x_i, 1].
GradResult grad_slopes(const GridFn& f, const WeightSpec& w, int N,
                       const QuadConfig& cfg = {});

// e^{1+delta}/(1+delta) * j^delta/log(je) - 1/(j (1+delta) log(je));
// a lower bound for the pure-log functional at beta = 1+delta along w_j,
// valid for every N >= 2.
double moser_lower_bound(double j, double delta);

// e * (log(ej))^{gamma-1}, the divergence rate of the log log functional
// along w_j for gamma > 1.
double loglog_growth_model(double gamma, double j);

}  // namespace bliss
