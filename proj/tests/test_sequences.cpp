#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bliss/sequences.hpp"
#include "test_helpers.hpp"

using namespace bliss;
using std::numbers::e;

TEST_CASE("Moser family construction") {
  const GridFn w4 = moser_w(4.0, 2);
  CHECK(w4.abscissas()[1] == 0.25);
  CHECK(w4.values()[1] == 0.5);
  CHECK(w4.values()[2] == 0.5);

  CHECK(moser_w(8.0, 3).values()[1] == doctest::Approx(0.25).epsilon(1e-15));

  for (int N : {2, 3, 4}) {
    for (double j : {1.5, 42.0, 1e6}) {
      const GridFn w = moser_w(j, N);
      CHECK(std::abs(energy(w, N) - 1.0) <= 1e-14);
      const MaxRatioResult r = max_ratio(w, N);
      CHECK(r.a == 1.0 / j);
      CHECK(std::abs(r.max_value - 1.0) <= 1e-13);
    }
  }
  CHECK_THROWS_AS(moser_w(1.0, 2), std::domain_error);
  CHECK_THROWS_AS(moser_w(0.5, 2), std::domain_error);
}

TEST_CASE("broken lines generalize the Moser family") {
  const GridFn ident = broken_line(1.0, 2);
  CHECK(ident.segments() == 1);
  CHECK(ident.values()[1] == 1.0);

  const GridFn a = broken_line(0.25, 2);
  const GridFn b = moser_w(4.0, 2);
  CHECK((a.abscissas() == b.abscissas()).all());
  CHECK((a.values() == b.values()).all());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const double kink = std::exp(-8.0 * testutil::u01(rng));
    const int N = 2 + static_cast<int>(rng() % 3);
    const GridFn f = broken_line(kink, N);
    CHECK(std::abs(energy(f, N) - 1.0) <= 1e-14);
    CHECK(std::abs(bound_violation(f, N)) <= 1e-13);  // equality at the kink
  }
  CHECK_THROWS_AS(broken_line(0.0, 2), std::domain_error);
  CHECK_THROWS_AS(broken_line(1.5, 2), std::domain_error);
}

namespace {

std::vector<double> geometric_schedule(double lo, double hi, double ratio) {
  std::vector<double> js;
  for (double j = lo; j <= hi * (1.0 + 1e-9); j *= ratio) js.push_back(j);
  return js;
}

}  // namespace

TEST_CASE("sweep trichotomy: subcritical decreasing, supercritical increasing") {
  const auto js = geometric_schedule(1e2, 1e8, 10.0);

  const SweepTable sub = sweep(loglog_weight(0.5), 2, js);
  for (std::size_t i = 0; i + 1 < sub.rows.size(); ++i)
    CHECK(sub.rows[i].value > sub.rows[i + 1].value);
  for (const SweepRow& r : sub.rows) {
    CHECK(r.converged);
    CHECK(r.value > 1.0);
    CHECK(!r.has_model);
  }

  const SweepTable sup = sweep(loglog_weight(1.5), 2, js);
  for (std::size_t i = 0; i + 1 < sup.rows.size(); ++i)
    CHECK(sup.rows[i].value < sup.rows[i + 1].value);
  for (const SweepRow& r : sup.rows) {
    CHECK(r.has_model);
    CHECK(r.value / r.model >= 0.5);
    CHECK(r.value / r.model <= 5.0);
  }

  const SweepTable crit = sweep(loglog_weight(1.0), 2, js);
  for (const SweepRow& r : crit.rows) {
    if (r.j >= 1e5) CHECK(r.value >= e + 1.0 - 0.05);
    CHECK(r.value <= 8.0);
  }
}

TEST_CASE("critical pure-log sweep decreases toward 1 at a 1/log j rate") {
  const auto js = geometric_schedule(1e2, 1e8, 10.0);
  const SweepTable t = sweep(log_weight(1.0), 2, js);
  double prev = INFINITY;
  for (const SweepRow& r : t.rows) {
    CHECK(r.value < prev);
    CHECK(r.value > 1.0);
    prev = r.value;
    const double scaled = (r.value - 1.0) * (1.0 + std::log(r.j));
    CHECK(scaled >= 4.0);
    CHECK(scaled <= 8.0);
  }
}

TEST_CASE("halving property of the critical pure-log gap") {
  for (double j : {1e3, 1e4}) {
    const double gap1 = sweep(log_weight(1.0), 2, std::vector<double>{j}).rows[0].value - 1.0;
    const double gap2 =
        sweep(log_weight(1.0), 2, std::vector<double>{j * j}).rows[0].value - 1.0;
    const double ratio = gap2 / gap1;
    CHECK(ratio >= 0.35);
    CHECK(ratio <= 0.65);
  }
}

TEST_CASE("supercritical pure-log sweeps attach the closed-form lower bound") {
  const auto js = geometric_schedule(1e1, 1e4, 10.0);
  const SweepTable t = sweep(log_weight(1.5), 2, js);
  for (const SweepRow& r : t.rows) {
    CHECK(r.has_model);
    CHECK(r.value > r.model);
  }
}

TEST_CASE("sweep schedule validation") {
  CHECK_THROWS_AS(sweep(log_weight(1.0), 2, std::vector<double>{1e2, 1e2}),
                  std::domain_error);
  CHECK_THROWS_AS(sweep(log_weight(1.0), 2, std::vector<double>{0.5, 10.0}),
                  std::domain_error);
}

TEST_CASE("perturbed critical sweep dominates the unperturbed one with growing margin") {
  const auto js = geometric_schedule(1e2, 1e8, 10.0);
  const SweepTable base = sweep(loglog_weight(1.0), 2, js);
  const SweepTable pert = sweep(perturbed_weight(), 2, js);
  double prev_value = 0.0, prev_margin = 0.0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    CHECK(pert.rows[i].value > prev_value);
    prev_value = pert.rows[i].value;
    const double margin = pert.rows[i].value - base.rows[i].value;
    CHECK(margin > prev_margin);
    prev_margin = margin;
  }
}

TEST_CASE("closeness report on exact broken lines") {
  for (int N : {2, 3, 4}) {
    for (double j : {4.0, 1e3}) {
      const MoserCloseness c = moser_closeness(moser_w(j, N), N);
      CHECK(std::abs(c.delta) <= 1e-13);
      CHECK(std::abs(c.defect) <= 1e-12);
      CHECK(c.defect_margin <= 1e-9);
      CHECK(c.plateau_margin <= 1e-9);
      CHECK(c.chord_margin <= 1e-9);
      CHECK(c.ramp_checked);
      CHECK(c.ramp_margin <= 1e-9);
    }
  }
  const MoserCloseness ident = moser_closeness(make_grid_fn({{0, 0}, {1, 1}}), 2);
  CHECK(ident.a == 1.0);
  CHECK(std::abs(ident.delta) <= 1e-15);
  CHECK(std::abs(ident.defect) <= 1e-15);
}

TEST_CASE("closeness lemma suite over a random monotone corpus") {
  std::mt19937_64 rng(20240903);
  for (int N : {2, 3, 4}) {
    for (int t = 0; t < 1000; ++t) {
      const int segs = 1 + static_cast<int>(rng() % 12);
      const auto spacing = (t % 3 == 0) ? GridSpacing::geometric
                          : (t % 3 == 1) ? GridSpacing::uniform
                                         : GridSpacing::random_jitter;
      const GridFn f = random_monotone(rng(), segs, N, spacing, 1e-5);
      const MoserCloseness c = moser_closeness(f, N);
      CHECK(c.defect <= c.delta + 1e-9);
      CHECK(c.plateau_margin <= 1e-9);
      CHECK(c.chord_margin <= 1e-9);
      if (c.ramp_checked) CHECK(c.ramp_margin <= 1e-9);
    }
  }
}

TEST_CASE("closeness rejects improper input") {
  const GridFn signchange = make_grid_fn({{0, 0}, {0.5, 0.4}, {1, 0.1}});
  CHECK_THROWS_AS(moser_closeness(signchange, 2), std::invalid_argument);
  const GridFn zero = make_grid_fn({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(moser_closeness(zero, 2), std::invalid_argument);
}
