#include "bliss/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bliss {

namespace {

// Lanczos g = 7 coefficient set (Godfrey).
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be positive");
  if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double harmonic(int n) {
  if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
  double h = 0.0;
  for (int i = n; i >= 1; --i) h += 1.0 / i;
  return h;
}

double log_bliss_constant(int N, double k) {
  if (N < 2) throw std::domain_error("bliss_constant: N must be >= 2");
  if (!(k >= 1.0)) throw std::domain_error("bliss_constant: k must be >= 1");
  if (k == 1.0) {
    // Hardy inequality: sharp constant (N/(N-1))^N.
    return N * std::log(static_cast<double>(N) / (N - 1));
  }
  const double m = k - 1.0;
  // Gamma arguments written as N + N/m, 1/m, N + (N-1)/m to keep them
  // well-scaled for large k.
  const double bracket = std::log(m) + log_gamma(N + static_cast<double>(N) / m) -
                         log_gamma(1.0 / m) - log_gamma(N + (N - 1.0) / m);
  return -std::log((N - 1.0) * k) + m * bracket;
}

double bliss_constant(int N, double k) {
  const double lc = log_bliss_constant(N, k);
  if (lc > 709.0) {
    throw std::overflow_error("bliss_constant: log C_{N,k} = " + std::to_string(lc) +
                              " exceeds the representable range");
  }
  return std::exp(lc);
}

double bliss_limit(int N) {
  if (N < 2) throw std::domain_error("bliss_limit: N must be >= 2");
  return std::exp(harmonic(N - 1)) / (N - 1);
}

double carleson_chang_threshold(int N) {
  if (N < 2) throw std::domain_error("carleson_chang_threshold: N must be >= 2");
  return 1.0 + std::exp(harmonic(N - 1));
}

BlissConstantRow bliss_row(int N, double k) {
  const double c = bliss_constant(N, k);
  return BlissConstantRow{N, k, c, k * c, bliss_limit(N)};
}

}  // namespace bliss
