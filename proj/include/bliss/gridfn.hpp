#pragma once

// Piecewise-linear functions v on [0,1] with v(0) = 0, the computational
// model for the constraint set
//
//   E_N = { v : v(0) = 0, integral_0^1 |v'|^N ds = 1 }.
//
// Everything here is exact for piecewise-linear data: the energy is a finite
// sum of |slope|^N * dx, and the maximum of the ratio |v(s)|^N / s^{N-1} is
// located per segment from the closed-form critical point.

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace bliss {

class GridFn {
 public:
  // Validates: first node (0,0), last abscissa 1, strictly increasing x,
  // at least 2 nodes, finite values. Throws std::invalid_argument otherwise.
  GridFn(Eigen::ArrayXd abscissas, Eigen::ArrayXd values);

  const Eigen::ArrayXd& abscissas() const { return x_; }
  const Eigen::ArrayXd& values() const { return v_; }
  const Eigen::ArrayXd& slopes() const { return slope_; }
  Eigen::Index segments() const { return slope_.size(); }

  // Linear interpolation; exact at nodes. s must lie in [0,1].
  double operator()(double s) const;

  // Index of the segment containing s (the last one whose left node is <= s).
  Eigen::Index segment_of(double s) const;

 private:
  Eigen::ArrayXd x_;
  Eigen::ArrayXd v_;
  Eigen::ArrayXd slope_;
};

GridFn make_grid_fn(const std::vector<std::pair<double, double>>& nodes);

// Rebuild a function on the abscissa grid `x` from per-segment slopes.
GridFn grid_fn_from_slopes(const Eigen::ArrayXd& x, const Eigen::ArrayXd& slopes);

// sum_i |slope_i|^N dx_i, exact.
double energy(const GridFn& f, int N);

// f scaled by energy^{-1/N}. Throws on zero energy.
GridFn normalize(const GridFn& f, int N);

struct MaxRatioResult {
  double a;          // smallest maximizing abscissa in (0,1]
  double max_value;  // max_s |v(s)|^N / s^{N-1}
  double delta;      // 1 - max_value (the criticality gap on E_N)
  bool degenerate;   // true for the all-zero function (a = 1, max_value = 0)
};

// Global maximum of |v(s)|^N / s^{N-1} over (0,1] (the s -> 0 limit is 0).
// On a segment v(s) = alpha + beta*s the only interior critical point is
// s* = (N-1)*alpha/beta, so candidates are segment endpoints, s*, and the
// root of v; ties break toward the smallest abscissa.
MaxRatioResult max_ratio(const GridFn& f, int N);

// Worst signed violation of |v(s)| <= s^{(N-1)/N} * energy^{1/N}.
// |v| minus a concave function is convex on each sign-constant piece, so the
// exact maximum is attained at nodes or roots of v; <= 0 for every GridFn.
double bound_violation(const GridFn& f, int N);

enum class GridSpacing : std::uint8_t { uniform, geometric, random_jitter };

// Log-uniform abscissas {0, x_min, ..., 1} with `segments` cells; the first
// interior node is x_min. segments == 1 gives {0, 1}.
Eigen::ArrayXd geometric_grid(int segments, double x_min);

// Deterministic nonnegative-slope member of E_N: slopes drawn from Exp(1)
// on the requested grid, then normalized. Same seed, same function.
GridFn random_monotone(std::uint64_t seed, int segments, int N,
                       GridSpacing spacing = GridSpacing::uniform,
                       double x_min = 1e-6);

}  // namespace bliss
