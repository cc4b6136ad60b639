#pragma once

// Adaptive evaluation of integrals of the form
//
//   integral_0^1 pre(s) * exp(phi(s)) ds,
//
// with phi(s) = W(s) * |v(s)|^N / s^{N-1} for a piecewise-linear v. Panels
// use a 15-point Kronrod rule with the embedded 7-point Gauss estimate for
// the error. Each panel is computed as exp(m) * sum w_i pre_i exp(phi_i - m)
// with m the largest phi sample on the panel, so huge integrands keep full
// relative accuracy before summation. Breakpoints of v are always panel
// boundaries (phi is smooth only per segment) and the segment touching s = 0
// is pre-split geometrically. Panels are summed in ascending order; results
// are deterministic for fixed inputs.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bliss/gridfn.hpp"
#include "bliss/weights.hpp"

namespace bliss {

struct QuadConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  long max_panels = 100000;         // panel budget per segment of v
  double origin_refinement = 2.0;   // geometric pre-split ratio toward s = 0
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long panels_used = 0;
  bool converged = false;
};

// phi produced a non-finite value at abscissa s.
class NonFiniteExponent : public std::runtime_error {
 public:
  NonFiniteExponent(double s, double phi);
  double s() const { return s_; }

 private:
  double s_;
};

using ScalarFn = std::function<double(double)>;

// Core engine over an explicit breakpoint list. `prefactor` may be empty
// (treated as 1). Budget exhaustion returns the best estimate with
// converged = false; a non-finite exponent throws NonFiniteExponent.
QuadResult integrate_exp_product(const ScalarFn& phi, const ScalarFn& prefactor,
                                 std::span<const double> breakpoints,
                                 const QuadConfig& cfg, long total_panel_budget);

// phi(f, W, N) at s; the ratio is evaluated as s * (|v|/s)^N.
double exponent_at(const GridFn& f, const WeightSpec& w, int N, double s);

// integral_0^1 exp(W(s) |v(s)|^N / s^{N-1}) ds.
QuadResult integrate_exp(const GridFn& f, const WeightSpec& w, int N,
                         const QuadConfig& cfg = {});

// Breakpoints used by integrate_exp: the nodes of f plus the geometric
// refinement of the first segment. Exposed so gradient integrals share the
// same panel skeleton.
std::vector<double> integration_breakpoints(const GridFn& f, const QuadConfig& cfg);

}  // namespace bliss
