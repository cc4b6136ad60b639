#pragma once

// The exponent weight multiplying |v(s)|^N / s^{N-1}:
//
//   W(s) = beta * log(e/s) + gamma * log log(e/s) + h(1/s),
//
// where the optional perturbation is h(1/s) = log log log(e^e/s). On (0,1]
// every summand is finite: log(e/s) >= 1, so log log(e/s) >= 0, and
// log(e^e/s) >= e. W(1) = beta.

#include <cstdint>

namespace bliss {

enum class Perturbation : std::uint8_t { none, triple_log };

struct WeightSpec {
  double beta = 0.0;   // coefficient of log(e/s)
  double gamma = 0.0;  // coefficient of log log(e/s)
  Perturbation perturbation = Perturbation::none;
};

// W(s) for s in (0,1]; throws std::domain_error outside.
double weight_eval(const WeightSpec& w, double s);

// The three named weight families: pure log, critical log with a log log
// improvement, and the critical pair with the triple-log perturbation.
inline WeightSpec log_weight(double beta) { return {beta, 0.0, Perturbation::none}; }
inline WeightSpec loglog_weight(double gamma) { return {1.0, gamma, Perturbation::none}; }
inline WeightSpec perturbed_weight() { return {1.0, 1.0, Perturbation::triple_log}; }

}  // namespace bliss
