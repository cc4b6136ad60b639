#include "bliss/sequences.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bliss {

GridFn broken_line(double a, int N) {
  if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("broken_line: a must lie in (0,1]");
  if (N < 2) throw std::domain_error("broken_line: N must be >= 2");
  const double plateau = std::pow(a, (N - 1.0) / N);
  if (a == 1.0) return make_grid_fn({{0.0, 0.0}, {1.0, 1.0}});
  return make_grid_fn({{0.0, 0.0}, {a, plateau}, {1.0, plateau}});
}

GridFn moser_w(double j, int N) {
  if (!(j > 1.0)) throw std::domain_error("moser_w: j must be > 1");
  return broken_line(1.0 / j, N);
}

SweepTable sweep(const WeightSpec& w, int N, std::span<const double> j_schedule,
                 const QuadConfig& cfg) {
  SweepTable table{N, w, cfg, {}};
  table.rows.reserve(j_schedule.size());
  double prev = 1.0;
  for (double j : j_schedule) {
    if (!(j > 1.0)) throw std::domain_error("sweep: every j must be > 1");
    if (!(j > prev)) throw std::domain_error("sweep: schedule must be strictly increasing");
    prev = j;

    SweepRow row{j, std::numeric_limits<double>::quiet_NaN(), false,
                 std::numeric_limits<double>::quiet_NaN(), false};
    try {
      const QuadResult r = eval_functional(moser_w(j, N), w, N, cfg);
      row.value = r.value;
      row.converged = r.converged;
    } catch (const NonFiniteExponent&) {
      row.converged = false;
    }
    if (w.gamma > 1.0) {
      row.model = loglog_growth_model(w.gamma, j);
      row.has_model = true;
    } else if (w.beta > 1.0 && w.gamma == 0.0 && w.perturbation == Perturbation::none) {
      row.model = moser_lower_bound(j, w.beta - 1.0);
      row.has_model = true;
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace {

// exact integral of (v' - c)^2 over [lo, hi]
double defect_head(const GridFn& f, double c, double lo, double hi) {
  const auto& x = f.abscissas();
  const auto& g = f.slopes();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.segments(); ++i) {
    const double a = std::max(lo, x[i]);
    const double b = std::min(hi, x[i + 1]);
    if (b > a) {
      const double d = g[i] - c;
      acc += d * d * (b - a);
    }
  }
  return acc;
}

// exact integral of |v'|^N over [lo, hi]
double defect_tail(const GridFn& f, int N, double lo, double hi) {
  const auto& x = f.abscissas();
  const auto& g = f.slopes();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.segments(); ++i) {
    const double a = std::max(lo, x[i]);
    const double b = std::min(hi, x[i + 1]);
    if (b > a) acc += std::pow(std::abs(g[i]), N) * (b - a);
  }
  return acc;
}

}  // namespace

MoserCloseness moser_closeness(const GridFn& f, int N) {
  if (N < 2) throw std::domain_error("moser_closeness: N must be >= 2");
  if ((f.slopes() < 0.0).any())
    throw std::invalid_argument("moser_closeness: slopes must be nonnegative");
  const MaxRatioResult mr = max_ratio(f, N);
  if (mr.degenerate)
    throw std::invalid_argument("moser_closeness: the zero function has no ratio maximum");

  const double a = mr.a;
  const double delta = mr.delta;
  const double va = f(a);
  const double c = va / a;

  MoserCloseness out;
  out.a = a;
  out.delta = delta;
  out.defect = std::pow(c, N - 2) * defect_head(f, c, 0.0, a) + defect_tail(f, N, a, 1.0);
  out.defect_margin = out.defect - delta;

  const double inv_n = 1.0 / N;
  const double delta_root = std::pow(delta, inv_n);
  const double ramp_coeff = std::pow(2.0 * delta, inv_n);
  const double chord_coeff = std::sqrt(delta) * std::pow(c, -(N - 2.0) / 2.0);
  out.ramp_checked = delta < 0.5;

  double plateau = -std::numeric_limits<double>::infinity();
  double chord = -std::numeric_limits<double>::infinity();
  double ramp = -std::numeric_limits<double>::infinity();

  auto check_left = [&](double s) {
    const double v = f(s);
    chord = std::max(chord, v - (s * c + std::sqrt(a - s) * chord_coeff));
    if (out.ramp_checked) {
      ramp = std::max(ramp, v - (s * std::pow(a, -inv_n) +
                                 std::pow(s, (N - 1.0) / N) * ramp_coeff));
    }
  };
  auto check_right = [&](double s) {
    const double v = f(s);
    plateau = std::max(plateau, v - (va + std::pow(s - a, 1.0 - inv_n) * delta_root));
  };

  constexpr int kSamples = 200;
  for (int i = 0; i <= kSamples; ++i) {
    check_left(a * i / kSamples);
    check_right(std::min(1.0, a + (1.0 - a) * i / kSamples));
  }
  for (Eigen::Index i = 0; i < f.abscissas().size(); ++i) {
    const double s = f.abscissas()[i];
    if (s <= a) check_left(s);
    if (s >= a) check_right(s);
  }

  out.plateau_margin = plateau;
  out.chord_margin = chord;
  out.ramp_margin = out.ramp_checked ? ramp : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace bliss
