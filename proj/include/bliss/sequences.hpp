#pragma once

// Concentrating families and asymptotic sweeps. The Moser family
//
//   w_j(s) = j^{1/N} s on [0, 1/j],   j^{-(N-1)/N} on [1/j, 1]
//
// has energy exactly 1 and saturates |v(s)|^N/s^{N-1} <= 1 at s = 1/j; it is
// the blow-up direction behind every criticality statement here. Sweeps
// evaluate a weighted functional along w_j over a schedule of j values.
//
// moser_closeness quantifies how close a monotone member of E_N is to a
// broken line once its ratio maximum (a, 1-delta) is known: an exact energy
// defect bounded by delta, and three pointwise upper bounds checked on a
// dense sample.

#include <span>
#include <vector>

#include "bliss/functionals.hpp"
#include "bliss/gridfn.hpp"
#include "bliss/quad.hpp"
#include "bliss/weights.hpp"

namespace bliss {

// Unit-energy broken line with kink at a: v(s) = a^{-1/N} s on [0,a], then
// constant a^{(N-1)/N}. a = 1 degenerates to v(s) = s.
GridFn broken_line(double a, int N);

// w_j = broken_line(1/j); requires j > 1.
GridFn moser_w(double j, int N);

struct SweepRow {
  double j;
  double value;
  bool converged;
  double model;    // comparison value, NaN when not applicable
  bool has_model;
};

struct SweepTable {
  int N;
  WeightSpec weight;
  QuadConfig quad;
  std::vector<SweepRow> rows;
};

// Evaluates the functional along w_j for each j in the (strictly increasing,
// all > 1) schedule. Attaches the loglog growth model when gamma > 1 and the
// Moser lower bound when beta > 1 on a pure-log weight. Quadrature failures
// are flagged per row, never aborting the sweep.
SweepTable sweep(const WeightSpec& w, int N, std::span<const double> j_schedule,
                 const QuadConfig& cfg = {});

struct MoserCloseness {
  double a;
  double delta;
  double defect;          // (v(a)/a)^{N-2} int_0^a |v'-v(a)/a|^2 + int_a^1 |v'|^N
  double defect_margin;   // defect - delta, <= 0 up to rounding
  double plateau_margin;  // worst v(s) - [v(a) + (s-a)^{1-1/N} delta^{1/N}], s in [a,1]
  double chord_margin;    // worst v(s) - [s v(a)/a + (a-s)^{1/2} delta^{1/2} (v(a)/a)^{-(N-2)/2}]
  double ramp_margin;     // worst v(s) - [s a^{-1/N} + s^{(N-1)/N} (2 delta)^{1/N}], s in [0,a]
  bool ramp_checked;      // the ramp bound needs delta < 1/2
};

// Requires nonnegative slopes and positive energy. The defect integrals are
// exact piecewise sums; the pointwise bounds are sampled at 200 points per
// side plus every node.
MoserCloseness moser_closeness(const GridFn& f, int N);

}  // namespace bliss
