#include "bliss/weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bliss {

double weight_eval(const WeightSpec& w, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::domain_error("weight_eval: s outside (0,1]");
  const double L = 1.0 - std::log(s);  // log(e/s) >= 1
  double value = w.beta * L;
  if (w.gamma != 0.0) value += w.gamma * std::log(L);
  if (w.perturbation == Perturbation::triple_log) {
    // log(e^e/s) = e + (L - 1)
    value += std::log(std::log(std::numbers::e + (L - 1.0)));
  }
  return value;
}

}  // namespace bliss
