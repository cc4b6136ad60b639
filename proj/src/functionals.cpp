#include "bliss/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace bliss {

QuadResult eval_functional(const GridFn& f, const WeightSpec& w, int N,
                           const QuadConfig& cfg) {
  return integrate_exp(f, w, N, cfg);
}

GradResult grad_slopes(const GridFn& f, const WeightSpec& w, int N,
                       const QuadConfig& cfg) {
  if (N < 2) throw std::domain_error("grad_slopes: N must be >= 2");
  const auto bps = integration_breakpoints(f, cfg);
  const auto& x = f.abscissas();
  const Eigen::Index nseg = f.segments();

  GradResult out;
  out.grad.resize(nseg);
  out.error_estimate = 0.0;
  out.panels_used = 0;
  out.converged = true;

  const ScalarFn phi = [&f, &w, N](double s) { return exponent_at(f, w, N, s); };

  for (Eigen::Index i = 0; i < nseg; ++i) {
    const double xi = x[i], xi1 = x[i + 1];
    const ScalarFn pre = [&f, &w, N, xi, xi1](double s) {
      if (s <= xi) return 0.0;
      const double v = f(s);
      const double q = std::abs(v) / s;  // bounded by the largest slope
      const double sgn = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
      const double overlap = std::min(s, xi1) - xi;
      return weight_eval(w, s) * N * std::pow(q, N - 1) * sgn * overlap;
    };

    // integrand of component i vanishes below x_i
    std::vector<double> local;
    local.reserve(bps.size());
    local.push_back(xi);
    for (double b : bps)
      if (b > xi) local.push_back(b);
    if (local.size() < 2) local.push_back(1.0);

    const long budget = cfg.max_panels * static_cast<long>(nseg - i);
    const QuadResult r = integrate_exp_product(phi, pre, local, cfg, budget);
    out.grad[i] = r.value;
    out.error_estimate += r.error_estimate;
    out.panels_used += r.panels_used;
    out.converged = out.converged && r.converged;
  }
  return out;
}

double moser_lower_bound(double j, double delta) {
  if (!(j >= 1.0)) throw std::domain_error("moser_lower_bound: j must be >= 1");
  if (!(delta > 0.0)) throw std::domain_error("moser_lower_bound: delta must be > 0");
  const double log_je = 1.0 + std::log(j);
  return std::exp(1.0 + delta) / (1.0 + delta) * std::pow(j, delta) / log_je -
         1.0 / (j * (1.0 + delta) * log_je);
}

double loglog_growth_model(double gamma, double j) {
  if (!(gamma > 1.0)) throw std::domain_error("loglog_growth_model: gamma must be > 1");
  if (!(j >= 1.0)) throw std::domain_error("loglog_growth_model: j must be >= 1");
  const double log_ej = 1.0 + std::log(j);
  return std::exp(1.0) * std::pow(log_ej, gamma - 1.0);
}

}  // namespace bliss
