#include "bliss/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bliss/special.hpp"

namespace bliss {

namespace {

// log of a_k = e (k^{k-1}/k!) (beta/e)^k (k C_{N,k})
double log_series_term(int N, double beta, long k) {
  const double kd = static_cast<double>(k);
  return 1.0 + (kd - 1.0) * std::log(kd) - log_gamma(kd + 1.0) +
         kd * (std::log(beta) - 1.0) + std::log(kd) + log_bliss_constant(N, kd);
}

}  // namespace

double series_term(int N, double beta, long k) {
  if (k < 1) throw std::domain_error("series_term: k must be >= 1");
  if (!(beta >= 0.0)) throw std::domain_error("series_term: beta must be >= 0");
  if (beta == 0.0) return 0.0;
  return std::exp(log_series_term(N, beta, k));
}

double series_term_ratio(int N, double beta, long k) {
  if (beta == 0.0) return 0.0;
  return std::exp(log_series_term(N, beta, k + 1) - log_series_term(N, beta, k));
}

SeriesBound series_bound(int N, double beta, const SeriesConfig& cfg) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::domain_error(
        "series_bound: requires beta in [0,1); the term ratio tends to beta, so no "
        "geometric tail certificate exists at or beyond beta = 1");
  if (cfg.max_terms < 1) throw std::invalid_argument("series_bound: max_terms must be >= 1");
  if (beta == 0.0) return SeriesBound{1.0, 0, 0.0, true};

  double sum = 0.0;
  double prev_term = 0.0;
  double recent_ratio_max = 0.0;
  long k = 0;
  double term = 0.0;

  while (k < cfg.max_terms) {
    ++k;
    term = series_term(N, beta, k);
    sum += term;
    if (prev_term > 0.0) {
      const double r = term / prev_term;
      // a short decaying memory of the ratio; the true ratio tends to beta
      recent_ratio_max = std::max(r, 0.98 * recent_ratio_max);
      // 5% inflation, capped at half the remaining distance to 1 so the
      // certificate stays finite for beta near 1
      const double rhat =
          std::min(1.05 * recent_ratio_max, 1.0 - 0.5 * (1.0 - recent_ratio_max));
      if (k >= 8 && rhat < 1.0) {
        const double tail = term * rhat / (1.0 - rhat);
        if (tail <= cfg.tail_tol)
          return SeriesBound{1.0 + sum, k, tail, true};
      }
    }
    prev_term = term;
  }
  const double rhat = std::min(1.05 * recent_ratio_max,
                               1.0 - 0.5 * (1.0 - recent_ratio_max));
  const double tail = (rhat < 1.0) ? term * rhat / (1.0 - rhat) : INFINITY;
  return SeriesBound{1.0 + sum, k, tail, false};
}

double divergence_term(int N, double beta, long k) {
  if (k < 1) throw std::domain_error("divergence_term: k must be >= 1");
  if (!(beta >= 1.0)) throw std::domain_error("divergence_term: beta must be >= 1");
  const double kd = static_cast<double>(k);
  // t_k = (k/e) a_k, assembled directly in the log domain
  return std::exp(kd * std::log(kd) - log_gamma(kd + 1.0) +
                  kd * (std::log(beta) - 1.0) + std::log(kd) +
                  log_bliss_constant(N, kd));
}

std::vector<double> divergence_partial_sums(int N, double beta, long K) {
  if (K < 1) throw std::domain_error("divergence_partial_sums: K must be >= 1");
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(K));
  double acc = 0.0;
  for (long k = 1; k <= K; ++k) {
    acc += divergence_term(N, beta, k);
    sums.push_back(acc);
  }
  return sums;
}

}  // namespace bliss
