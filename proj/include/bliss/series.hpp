#pragma once

// Taylor-series upper bound for the pure-log functional on E_N:
//
//   sup_{E_N} F_{beta*log} <= 1 + sum_{k>=1} a_k,
//   a_k = e * (k^{k-1}/k!) * (beta/e)^k * (k * C_{N,k}),
//
// valid for beta < 1 (the consecutive-term ratio tends to beta). Terms are
// assembled in the log domain; the tail is certified geometrically from the
// observed local ratio.
//
// divergence_partial_sums tracks the failure of the method at beta >= 1: it
// accumulates the k-scaled terms t_k = (k/e) a_k = (k^k/k!) (beta/e)^k k C_{N,k},
// which decay like C_N beta^k / sqrt(2 pi k). At beta = 1 their partial sums
// grow like sqrt(k), and for beta > 1 the terms themselves eventually grow;
// either way no geometric tail certificate exists at or beyond beta = 1.

#include <vector>

namespace bliss {

// a_k above; 0 when beta = 0.
double series_term(int N, double beta, long k);

// a_{k+1}/a_k.
double series_term_ratio(int N, double beta, long k);

struct SeriesConfig {
  long max_terms = 100000;
  double tail_tol = 1e-14;
};

struct SeriesBound {
  double value;          // 1 + partial sum (+ certified tail margin excluded)
  long terms_used;
  double tail_estimate;  // geometric tail bound at the stopping index
  bool tail_certified;   // false when max_terms was hit first
};

// Upper bound for sup F_{beta*log} over E_N; requires 0 <= beta < 1.
SeriesBound series_bound(int N, double beta, const SeriesConfig& cfg = {});

// Partial sums S_1..S_K of the scaled terms t_k; requires beta >= 1.
std::vector<double> divergence_partial_sums(int N, double beta, long K);

// t_k itself (the scaled term).
double divergence_term(int N, double beta, long k);

}  // namespace bliss
