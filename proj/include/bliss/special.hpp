#pragma once

// Log-Gamma, harmonic numbers and the sharp Bliss embedding constants
//
//   C_{N,k} = 1/((N-1)k) * [ (k-1) G(Nk/(k-1)) / ( G(1/(k-1)) G((Nk-1)/(k-1)) ) ]^{k-1}
//
// (G = Gamma), together with the k -> infinity limit
//
//   k*C_{N,k} -> C_N = e^{1 + 1/2 + ... + 1/(N-1)} / (N-1)
//
// and the Carleson-Chang energy threshold 1 + e^{H_{N-1}}.
//
// All Gamma factors are combined in the log domain: at large k the individual
// Gamma values are astronomically large before cancellation.

namespace bliss {

// Natural log of Gamma(x), x > 0. Lanczos approximation (g = 7, 9 terms),
// relative error below 1e-13 on [1e-3, 1e12].
double log_gamma(double x);

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
double harmonic(int n);

// log C_{N,k} for N >= 2, k >= 1. k = 1 is the Hardy inequality and gets the
// classical sharp constant (N/(N-1))^N; the Gamma formula is singular there.
double log_bliss_constant(int N, double k);

// C_{N,k} itself. Throws std::overflow_error if exp would overflow.
double bliss_constant(int N, double k);

// C_N = e^{H_{N-1}}/(N-1), the limit of k*C_{N,k}.
double bliss_limit(int N);

// 1 + e^{H_{N-1}}; equals 1 + (N-1)*bliss_limit(N).
double carleson_chang_threshold(int N);

struct BlissConstantRow {
  int N;
  double k;
  double c_value;    // C_{N,k}
  double k_times_c;  // k * C_{N,k}
  double limit;      // C_N
};

BlissConstantRow bliss_row(int N, double k);

}  // namespace bliss
