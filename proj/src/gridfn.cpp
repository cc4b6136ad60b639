#include "bliss/gridfn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bliss {

namespace {

// s * (|v|/s)^N; the quotient |v|/s is bounded by the largest slope, so this
// form never under/overflows where the direct powers would.
double ratio_value(double v, double s, int N) {
  if (s <= 0.0) return 0.0;
  const double r = std::abs(v) / s;
  return s * std::pow(r, N);
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

GridFn::GridFn(Eigen::ArrayXd abscissas, Eigen::ArrayXd values)
    : x_(std::move(abscissas)), v_(std::move(values)) {
  const Eigen::Index n = x_.size();
  if (n != v_.size()) throw std::invalid_argument("GridFn: node arrays differ in length");
  if (n < 2) throw std::invalid_argument("GridFn: need at least 2 nodes");
  if (!(x_[0] == 0.0 && v_[0] == 0.0))
    throw std::invalid_argument("GridFn: first node must be (0, 0)");
  if (x_[n - 1] != 1.0) throw std::invalid_argument("GridFn: last abscissa must be 1");
  if (!x_.isFinite().all() || !v_.isFinite().all())
    throw std::invalid_argument("GridFn: non-finite node");
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (!(x_[i] < x_[i + 1]))
      throw std::invalid_argument("GridFn: abscissas must be strictly increasing");
  }
  slope_ = (v_.tail(n - 1) - v_.head(n - 1)) / (x_.tail(n - 1) - x_.head(n - 1));
}

Eigen::Index GridFn::segment_of(double s) const {
  const double* begin = x_.data();
  const double* end = begin + x_.size();
  // last index i with x_[i] <= s, clamped to a valid segment
  Eigen::Index i = std::upper_bound(begin, end, s) - begin - 1;
  return std::clamp<Eigen::Index>(i, 0, segments() - 1);
}

double GridFn::operator()(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("GridFn: s outside [0,1]");
  const Eigen::Index i = segment_of(s);
  if (s == x_[i]) return v_[i];
  return v_[i] + slope_[i] * (s - x_[i]);
}

GridFn make_grid_fn(const std::vector<std::pair<double, double>>& nodes) {
  Eigen::ArrayXd x(static_cast<Eigen::Index>(nodes.size()));
  Eigen::ArrayXd v(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    x[static_cast<Eigen::Index>(i)] = nodes[i].first;
    v[static_cast<Eigen::Index>(i)] = nodes[i].second;
  }
  return GridFn(std::move(x), std::move(v));
}

GridFn grid_fn_from_slopes(const Eigen::ArrayXd& x, const Eigen::ArrayXd& slopes) {
  if (slopes.size() + 1 != x.size())
    throw std::invalid_argument("grid_fn_from_slopes: size mismatch");
  Eigen::ArrayXd v(x.size());
  v[0] = 0.0;
  for (Eigen::Index i = 0; i < slopes.size(); ++i)
    v[i + 1] = v[i] + slopes[i] * (x[i + 1] - x[i]);
  return GridFn(x, std::move(v));
}

double energy(const GridFn& f, int N) {
  if (N < 2) throw std::domain_error("energy: N must be >= 2");
  const Eigen::ArrayXd dx =
      f.abscissas().tail(f.segments()) - f.abscissas().head(f.segments());
  return (f.slopes().abs().pow(N) * dx).sum();
}

GridFn normalize(const GridFn& f, int N) {
  const double e = energy(f, N);
  if (!(e > 0.0)) throw std::domain_error("normalize: zero-energy function");
  const double scale = std::pow(e, -1.0 / N);
  return GridFn(f.abscissas(), f.values() * scale);
}

MaxRatioResult max_ratio(const GridFn& f, int N) {
  if (N < 2) throw std::domain_error("max_ratio: N must be >= 2");
  const auto& x = f.abscissas();
  const auto& v = f.values();
  const auto& g = f.slopes();

  double best_a = 1.0;
  double best_val = 0.0;
  bool found = false;
  auto consider = [&](double s, double val) {
    if (!found || val > best_val) {
      best_a = s;
      best_val = val;
      found = true;
    }
  };

  for (Eigen::Index i = 0; i < f.segments(); ++i) {
    const double s0 = x[i], s1 = x[i + 1];
    const double alpha = v[i] - g[i] * s0;
    // candidates in ascending order inside the segment, so the smallest
    // maximizing abscissa wins ties
    double cand[3];
    int nc = 0;
    if (g[i] != 0.0) {
      const double root = -alpha / g[i];
      const double crit = (N - 1) * alpha / g[i];
      if (s0 < root && root < s1) cand[nc++] = root;
      if (s0 < crit && crit < s1) cand[nc++] = crit;
      if (nc == 2 && cand[0] > cand[1]) std::swap(cand[0], cand[1]);
    }
    cand[nc++] = s1;
    for (int c = 0; c < nc; ++c) {
      const double s = cand[c];
      const double val = (s == s1) ? ratio_value(v[i + 1], s, N)
                                   : ratio_value(alpha + g[i] * s, s, N);
      consider(s, val);
    }
  }

  if (best_val == 0.0) return MaxRatioResult{1.0, 0.0, 1.0, true};
  return MaxRatioResult{best_a, best_val, 1.0 - best_val, false};
}

double bound_violation(const GridFn& f, int N) {
  const double croot = std::pow(energy(f, N), 1.0 / N);
  const double p = (N - 1.0) / N;
  const auto& x = f.abscissas();
  const auto& v = f.values();
  const auto& g = f.slopes();

  double worst = -std::abs(v[0]);  // s = 0 contributes 0 - 0
  auto consider = [&](double s, double vs) {
    const double margin = std::abs(vs) - croot * std::pow(s, p);
    worst = std::max(worst, margin);
  };
  for (Eigen::Index i = 0; i < f.segments(); ++i) {
    consider(x[i + 1], v[i + 1]);
    if (g[i] != 0.0) {
      const double root = (g[i] * x[i] - v[i]) / g[i];
      if (x[i] < root && root < x[i + 1]) consider(root, 0.0);
    }
  }
  return worst;
}

Eigen::ArrayXd geometric_grid(int segments, double x_min) {
  if (segments < 1) throw std::invalid_argument("geometric_grid: segments must be >= 1");
  if (!(x_min > 0.0 && x_min < 1.0))
    throw std::invalid_argument("geometric_grid: x_min must lie in (0,1)");
  Eigen::ArrayXd x(segments + 1);
  x[0] = 0.0;
  if (segments == 1) {
    x[1] = 1.0;
    return x;
  }
  const double l0 = std::log(x_min);
  for (int i = 1; i <= segments; ++i)
    x[i] = std::exp(l0 * static_cast<double>(segments - i) / (segments - 1));
  x[segments] = 1.0;
  return x;
}

GridFn random_monotone(std::uint64_t seed, int segments, int N, GridSpacing spacing,
                       double x_min) {
  if (segments < 1) throw std::invalid_argument("random_monotone: segments must be >= 1");
  std::mt19937_64 rng(seed);

  Eigen::ArrayXd x;
  switch (spacing) {
    case GridSpacing::uniform:
      x = Eigen::ArrayXd::LinSpaced(segments + 1, 0.0, 1.0);
      x[segments] = 1.0;
      break;
    case GridSpacing::geometric:
      x = geometric_grid(segments, x_min);
      break;
    case GridSpacing::random_jitter: {
      // sorted uniforms with a floor on the gap so slopes stay well-scaled
      std::vector<double> pts(static_cast<std::size_t>(segments) - 1);
      for (auto& p : pts) p = u01(rng);
      std::sort(pts.begin(), pts.end());
      x.resize(segments + 1);
      x[0] = 0.0;
      x[segments] = 1.0;
      const double floor_gap = 0.1 / segments;
      double prev = 0.0;
      for (int i = 1; i < segments; ++i) {
        const double raw = pts[static_cast<std::size_t>(i) - 1];
        prev = std::max(raw, prev + floor_gap);
        x[i] = std::min(prev, 1.0 - floor_gap * (segments - i));
        prev = x[i];
      }
      break;
    }
  }

  Eigen::ArrayXd slopes(segments);
  for (int i = 0; i < segments; ++i) slopes[i] = -std::log(1.0 - u01(rng));
  return normalize(grid_fn_from_slopes(x, slopes), N);
}

}  // namespace bliss
