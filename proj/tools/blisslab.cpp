// blisslab: numerical laboratory for the limiting Bliss inequalities, their
// log log improvement, and concentration along the infinitesimal Moser
// sequence. Subcommands emit full-precision CSV for offline plotting.
//
// Exit codes: 0 success, 2 usage/validation, 3 numerical non-convergence,
// 4 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bliss/functionals.hpp"
#include "bliss/gridfn.hpp"
#include "bliss/io.hpp"
#include "bliss/optimize.hpp"
#include "bliss/quad.hpp"
#include "bliss/sequences.hpp"
#include "bliss/series.hpp"
#include "bliss/special.hpp"
#include "bliss/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerify = 4;

struct WeightFlags {
  std::optional<double> beta;
  std::optional<double> gamma;
  std::string perturb;

  void attach(CLI::App* cmd) {
    cmd->add_option("--beta", beta, "coefficient of log(e/s)");
    cmd->add_option("--gamma", gamma, "coefficient of log log(e/s)");
    cmd->add_option("--perturb", perturb, "extra exponent term: triple_log")
        ->check(CLI::IsMember({"triple_log"}));
  }

  // --beta b            -> (b, 0, none)
  // --gamma g           -> (1, g, none)
  // --perturb triple_log-> (1, 1, triple_log), beta/gamma may override
  bliss::WeightSpec resolve() const {
    if (!beta && !gamma && perturb.empty())
      throw CLI::ValidationError("weight", "need --beta, --gamma or --perturb");
    bliss::WeightSpec w;
    w.perturbation =
        perturb.empty() ? bliss::Perturbation::none : bliss::Perturbation::triple_log;
    const bool critical_default = gamma.has_value() || !perturb.empty();
    w.beta = beta.value_or(critical_default ? 1.0 : 0.0);
    w.gamma = gamma.value_or(perturb.empty() ? 0.0 : 1.0);
    if (w.beta < 0.0) throw CLI::ValidationError("--beta", "must be >= 0");
    return w;
  }
};

struct QuadFlags {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  void attach(CLI::App* cmd) {
    cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
  }
  bliss::QuadConfig resolve() const {
    bliss::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    return cfg;
  }
};

// "a:b:xR" -> geometric schedule a, a*R, ..., <= b
std::vector<double> parse_schedule(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos || text[c2 + 1] != 'x')
    throw CLI::ValidationError("--j", "expected a:b:xR, e.g. 1e2:1e8:x10");
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double ratio = std::stod(text.substr(c2 + 2));
  if (!(lo > 1.0) || !(hi >= lo) || !(ratio > 1.0))
    throw CLI::ValidationError("--j", "need 1 < a <= b and ratio > 1");
  std::vector<double> js;
  for (double j = lo; j <= hi * (1.0 + 1e-12); j *= ratio) js.push_back(j);
  return js;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!piece.empty()) out.push_back(std::stod(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--k", "empty list");
  return out;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

// ---------------------------------------------------------------- verify --

struct CheckTable {
  int failed = 0;
  void row(const std::string& name, bool ok, double detail) {
    std::printf("%-52s %-4s %.3g\n", name.c_str(), ok ? "ok" : "FAIL", detail);
    if (!ok) ++failed;
  }
};

void verify_constants(CheckTable& t) {
  using namespace bliss;
  for (int N : {2, 3, 4}) {
    double prev = INFINITY;
    bool monotone = true;
    for (double k : {1e2, 1e3, 1e4, 1e5, 1e6}) {
      const double gap = std::abs(k * bliss_constant(N, k) - bliss_limit(N));
      monotone = monotone && gap < prev;
      prev = gap;
    }
    t.row("constants: limit gap monotone, N=" + std::to_string(N), monotone && prev <= 1e-2,
          prev);
  }
  double worst = 0.0;
  for (int N = 2; N <= 10; ++N) {
    const double lhs = bliss::carleson_chang_threshold(N);
    const double rhs = 1.0 + (N - 1) * bliss::bliss_limit(N);
    worst = std::max(worst, std::abs(lhs - rhs) / lhs);
  }
  t.row("constants: threshold identity N=2..10", worst <= 1e-15, worst);
}

void verify_gridfn(CheckTable& t) {
  using namespace bliss;
  std::mt19937_64 rng(101);
  double worst_energy = 0.0, worst_bound = -1.0, worst_ratio = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int N = 2 + static_cast<int>(rng() % 3);
    const GridFn f = random_monotone(rng(), 1 + static_cast<int>(rng() % 10), N,
                                     GridSpacing::random_jitter);
    worst_energy = std::max(worst_energy, std::abs(energy(f, N) - 1.0));
    worst_bound = std::max(worst_bound, bound_violation(f, N));
    const MaxRatioResult r = max_ratio(f, N);
    worst_ratio = std::max(worst_ratio, r.max_value - 1.0);
  }
  t.row("gridfn: random members stay on the energy sphere", worst_energy <= 1e-14,
        worst_energy);
  t.row("gridfn: growth bound violations", worst_bound <= 1e-12, worst_bound);
  t.row("gridfn: ratio maximum <= 1 on E_N", worst_ratio <= 1e-12, worst_ratio);
}

void verify_quad(CheckTable& t) {
  using namespace bliss;
  const GridFn zero = make_grid_fn({{0, 0}, {1, 0}});
  const double z = integrate_exp(zero, loglog_weight(1.0), 2).value;
  t.row("quad: zero function integrates to 1", std::abs(z - 1.0) <= 1e-14,
        std::abs(z - 1.0));

  std::mt19937_64 rng(202);
  bool monotone = true, floor1 = true, consistent = true;
  for (int i = 0; i < 20; ++i) {
    const GridFn f = random_monotone(rng(), 2 + static_cast<int>(rng() % 6), 2,
                                     GridSpacing::random_jitter);
    const double lo = integrate_exp(f, log_weight(0.5), 2).value;
    const double hi = integrate_exp(f, log_weight(0.9), 2).value;
    monotone = monotone && lo <= hi + 1e-12;
    floor1 = floor1 && lo >= 1.0 - 1e-12;
    QuadConfig coarse;
    coarse.rel_tol = 1e-6;
    coarse.abs_tol = 1e-9;
    QuadConfig fine = coarse;
    fine.rel_tol = 5e-7;
    const QuadResult a = integrate_exp(f, loglog_weight(0.8), 2, coarse);
    const QuadResult b = integrate_exp(f, loglog_weight(0.8), 2, fine);
    consistent = consistent && std::abs(a.value - b.value) <= a.error_estimate;
  }
  t.row("quad: monotone in the weight", monotone, 0.0);
  t.row("quad: nonnegative weights keep the value >= 1", floor1, 0.0);
  t.row("quad: refinement consistency", consistent, 0.0);
}

void verify_grad(CheckTable& t) {
  using namespace bliss;
  QuadConfig tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-15;
  std::mt19937_64 rng(555);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int N = 2 + static_cast<int>(rng() % 2);
    const double beta = 0.3 + 0.3 * static_cast<double>(rng() % 3);
    const GridFn f = random_monotone(rng(), 4 + static_cast<int>(rng() % 5), N,
                                     GridSpacing::uniform);
    const GradResult g = grad_slopes(f, log_weight(beta), N, tight);
    for (Eigen::Index i = 0; i < f.segments(); ++i) {
      const double step = 1e-5 * std::max(1.0, std::abs(f.slopes()[i]));
      Eigen::ArrayXd up = f.slopes(), dn = f.slopes();
      up[i] += step;
      dn[i] -= step;
      const double fp =
          eval_functional(grid_fn_from_slopes(f.abscissas(), up), log_weight(beta), N, tight)
              .value;
      const double fm =
          eval_functional(grid_fn_from_slopes(f.abscissas(), dn), log_weight(beta), N, tight)
              .value;
      const double fd = (fp - fm) / (2.0 * step);
      worst = std::max(worst, std::abs(g.grad[i] - fd) / std::max(std::abs(fd), 1e-6));
    }
  }
  t.row("grad: matches central finite differences", worst <= 1e-5, worst);
}

void verify_lemmas(CheckTable& t) {
  using namespace bliss;
  std::mt19937_64 rng(20240903);
  double worst_defect = -INFINITY, worst_margin = -INFINITY;
  long violations = 0;
  for (int N : {2, 3, 4}) {
    for (int i = 0; i < 1000; ++i) {
      const auto spacing = (i % 3 == 0) ? GridSpacing::geometric
                          : (i % 3 == 1) ? GridSpacing::uniform
                                         : GridSpacing::random_jitter;
      const GridFn f =
          random_monotone(rng(), 1 + static_cast<int>(rng() % 12), N, spacing, 1e-5);
      const MoserCloseness c = moser_closeness(f, N);
      worst_defect = std::max(worst_defect, c.defect - c.delta);
      worst_margin = std::max({worst_margin, c.plateau_margin, c.chord_margin});
      if (c.ramp_checked) worst_margin = std::max(worst_margin, c.ramp_margin);
      if (c.defect > c.delta + 1e-9 || c.plateau_margin > 1e-9 || c.chord_margin > 1e-9 ||
          (c.ramp_checked && c.ramp_margin > 1e-9))
        ++violations;
    }
  }
  t.row("lemmas: defect bounded by delta (3000 functions)", worst_defect <= 1e-9,
        worst_defect);
  t.row("lemmas: pointwise bounds hold (3000 functions)", worst_margin <= 1e-9,
        worst_margin);
  t.row("lemmas: total violations", violations == 0, static_cast<double>(violations));
}

void verify_series(CheckTable& t) {
  using namespace bliss;
  double worst = 0.0;
  for (int N : {2, 3}) {
    for (double beta : {0.3, 0.5, 0.9}) {
      worst = std::max(worst, std::abs(series_term_ratio(N, beta, 10000) - beta));
    }
  }
  t.row("series: term ratio approaches beta", worst <= 1e-3, worst);

  std::mt19937_64 rng(808);
  long violations = 0;
  for (int N : {2, 3}) {
    for (double beta : {0.3, 0.6, 0.9}) {
      const double bound = series_bound(N, beta).value;
      for (int i = 0; i < 20; ++i) {
        const GridFn f = random_monotone(rng(), 1 + static_cast<int>(rng() % 10), N,
                                         GridSpacing::random_jitter);
        if (eval_functional(f, log_weight(beta), N).value > bound) ++violations;
      }
    }
  }
  t.row("series: bound dominates the functional", violations == 0,
        static_cast<double>(violations));

  const auto sums = divergence_partial_sums(2, 1.0, 10000);
  t.row("series: scaled partial sums grow at beta = 1", sums[9999] >= 5.0 * sums[99],
        sums[9999] / sums[99]);
}

void verify_sweeps(CheckTable& t) {
  using namespace bliss;
  std::vector<double> js;
  for (double j = 1e2; j <= 1e6 + 1; j *= 10) js.push_back(j);

  const SweepTable sub = sweep(loglog_weight(0.5), 2, js);
  bool dec = true;
  for (std::size_t i = 0; i + 1 < sub.rows.size(); ++i)
    dec = dec && sub.rows[i].value > sub.rows[i + 1].value;
  t.row("sweeps: gamma = 0.5 strictly decreasing", dec, sub.rows.back().value);

  const SweepTable sup = sweep(loglog_weight(1.5), 2, js);
  bool inc = true;
  for (std::size_t i = 0; i + 1 < sup.rows.size(); ++i)
    inc = inc && sup.rows[i].value < sup.rows[i + 1].value;
  t.row("sweeps: gamma = 1.5 strictly increasing", inc, sup.rows.back().value);

  const SweepTable crit = sweep(loglog_weight(1.0), 2, js);
  bool band = true;
  for (const SweepRow& r : crit.rows)
    if (r.j >= 1e5) band = band && r.value >= std::numbers::e + 1.0 - 0.05;
  t.row("sweeps: gamma = 1 stays above e+1-0.05 for j >= 1e5", band,
        crit.rows.back().value);

  const SweepTable pure = sweep(log_weight(1.0), 2, js);
  bool dec2 = true;
  for (std::size_t i = 0; i + 1 < pure.rows.size(); ++i)
    dec2 = dec2 && pure.rows[i].value > pure.rows[i + 1].value;
  const double g1 = pure.rows[1].value - 1.0;  // j = 1e3
  const double g2 = sweep(log_weight(1.0), 2, std::vector<double>{1e6}).rows[0].value - 1.0;
  const double halving = g2 / g1;
  t.row("sweeps: beta = 1 strictly decreasing", dec2, pure.rows.back().value);
  t.row("sweeps: beta = 1 halving ratio in [0.35, 0.65]",
        halving >= 0.35 && halving <= 0.65, halving);

  std::vector<double> js2{10.0, 1e2, 1e3, 1e4};
  const SweepTable hot = sweep(log_weight(1.2), 2, js2);
  bool above = true;
  for (const SweepRow& r : hot.rows) above = above && r.has_model && r.value >= r.model;
  t.row("sweeps: beta = 1.2 dominates the closed-form bound", above, 0.0);
}

void verify_optimize(CheckTable& t) {
  using namespace bliss;
  OptimizeConfig cfg;
  cfg.max_iters = 60;
  cfg.refine_stages = 3;

  const Eigen::ArrayXd x = geometric_grid(32, cfg.x_min);
  std::vector<double> a_grid;
  for (Eigen::Index i = 1; i < x.size(); ++i) a_grid.push_back(x[i]);
  const ScanResult scan = scan_broken_line(log_weight(0.9), 2, a_grid);
  const OptimizeReport rep = maximize_gridfn(
      log_weight(0.9), 2, 32, std::optional<GridFn>(broken_line(scan.best_a, 2)), 0, cfg);
  const double bound = series_bound(2, 0.9).value;
  t.row("optimize: scan <= ascent <= series bound",
        rep.status != OptimizeStatus::divergence_detected &&
            scan.best_value <= rep.best_value && rep.best_value <= bound,
        rep.best_value);

  const OptimizeReport sup =
      maximize_gridfn(loglog_weight(1.5), 2, 32, std::nullopt, 0, cfg);
  t.row("optimize: gamma = 1.5 diverges with concentration",
        sup.status == OptimizeStatus::divergence_detected &&
            sup.concentration_abscissa < 1e-3,
        sup.concentration_abscissa);
}

int run_verify(const std::string& suite) {
  CheckTable t;
  const bool all = suite == "all";
  if (all || suite == "constants") verify_constants(t);
  if (all || suite == "gridfn") verify_gridfn(t);
  if (all || suite == "quad") verify_quad(t);
  if (all || suite == "grad") verify_grad(t);
  if (all || suite == "lemmas") verify_lemmas(t);
  if (all || suite == "series") verify_series(t);
  if (all || suite == "sweeps") verify_sweeps(t);
  if (all || suite == "optimize") verify_optimize(t);
  std::printf("%d check(s) failed\n", t.failed);
  return t.failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for limiting Bliss inequalities"};
  app.require_subcommand(1);

  // ---- constants ----
  auto* c_cmd = app.add_subcommand("constants", "Bliss constants C_{N,k} and their limit");
  int c_N = 2;
  std::string c_klist;
  c_cmd->add_option("--N", c_N, "dimension, N >= 2")->required();
  c_cmd->add_option("--k", c_klist, "comma-separated k values, each >= 1")->required();

  // ---- sweep ----
  auto* s_cmd = app.add_subcommand("sweep", "evaluate a functional along the Moser family");
  WeightFlags s_weight;
  QuadFlags s_quad;
  int s_N = 2;
  std::string s_j = "1e2:1e8:x10";
  std::string s_out;
  s_weight.attach(s_cmd);
  s_quad.attach(s_cmd);
  s_cmd->add_option("--N", s_N, "dimension, N >= 2")->required();
  s_cmd->add_option("--j", s_j, "geometric schedule a:b:xR");
  s_cmd->add_option("--out", s_out, "CSV output path (default stdout)");

  // ---- eval ----
  auto* e_cmd = app.add_subcommand("eval", "evaluate a functional on a stored function");
  WeightFlags e_weight;
  QuadFlags e_quad;
  int e_N = 2;
  std::string e_fn;
  e_weight.attach(e_cmd);
  e_quad.attach(e_cmd);
  e_cmd->add_option("--N", e_N, "dimension, N >= 2")->required();
  e_cmd->add_option("--fn", e_fn, "path to a GridFn JSON file")->required();

  // ---- series ----
  auto* r_cmd = app.add_subcommand("series", "Taylor-series upper bound diagnostics");
  int r_N = 2;
  double r_beta = 0.5;
  long r_max_terms = 100000;
  double r_tail_tol = 1e-14;
  long r_witness = 0;
  std::string r_out;
  r_cmd->add_option("--N", r_N, "dimension, N >= 2")->required();
  r_cmd->add_option("--beta", r_beta, "exponent coefficient")->required();
  r_cmd->add_option("--max-terms", r_max_terms, "term budget");
  r_cmd->add_option("--tail-tol", r_tail_tol, "tail certificate tolerance");
  r_cmd->add_option("--witness", r_witness,
                    "emit K scaled partial sums instead (requires beta >= 1)");
  r_cmd->add_option("--out", r_out, "CSV output path for the term table");

  // ---- optimize ----
  auto* o_cmd = app.add_subcommand("optimize", "search E_N for large functional values");
  WeightFlags o_weight;
  QuadFlags o_quad;
  int o_N = 2;
  int o_segments = 48;
  int o_iters = 100;
  std::uint64_t o_seed = 0;
  std::string o_out;
  o_weight.attach(o_cmd);
  o_quad.attach(o_cmd);
  o_cmd->add_option("--N", o_N, "dimension, N >= 2")->required();
  o_cmd->add_option("--segments", o_segments, "slope segments (>= 2)");
  o_cmd->add_option("--iters", o_iters, "ascent steps per stage");
  o_cmd->add_option("--seed", o_seed, "random start seed (0 = uniform start)");
  o_cmd->add_option("--out", o_out, "CSV output path for the ascent trace");

  // ---- verify ----
  auto* v_cmd = app.add_subcommand("verify", "run the property suites");
  std::string v_suite = "all";
  v_cmd->add_option("--suite", v_suite, "constants|gridfn|quad|grad|lemmas|series|sweeps|optimize|all")
      ->check(CLI::IsMember({"constants", "gridfn", "quad", "grad", "lemmas", "series",
                             "sweeps", "optimize", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_cmd->parsed()) {
      if (c_N < 2) throw CLI::ValidationError("--N", "N must be >= 2");
      std::vector<bliss::BlissConstantRow> rows;
      for (double k : parse_list(c_klist)) {
        if (k < 1.0) throw CLI::ValidationError("--k", "k must be >= 1");
        rows.push_back(bliss::bliss_row(c_N, k));
      }
      bliss::write_constants_csv(std::cout, rows);
      return kExitOk;
    }

    if (s_cmd->parsed()) {
      if (s_N < 2) throw CLI::ValidationError("--N", "N must be >= 2");
      const auto js = parse_schedule(s_j);
      for (double j : js)
        if (j > 1e8)
          std::cerr << "note: j = " << j << " beyond 1e8, double precision gets thin\n";
      const bliss::SweepTable table =
          bliss::sweep(s_weight.resolve(), s_N, js, s_quad.resolve());
      std::ofstream file;
      bliss::write_sweep_csv(open_sink(s_out, file), table);
      for (const bliss::SweepRow& r : table.rows)
        if (!r.converged) return kExitNumerical;
      return kExitOk;
    }

    if (e_cmd->parsed()) {
      if (e_N < 2) throw CLI::ValidationError("--N", "N must be >= 2");
      bliss::GridFn f = [&] {
        try {
          return bliss::load_grid_fn(e_fn);
        } catch (const std::invalid_argument& err) {
          throw CLI::ValidationError("--fn", err.what());
        }
      }();
      const bliss::QuadResult r =
          bliss::eval_functional(f, e_weight.resolve(), e_N, e_quad.resolve());
      std::printf("value=%s\nerror_estimate=%.3g\nconverged=%s\n",
                  bliss::format_full(r.value).c_str(), r.error_estimate,
                  r.converged ? "true" : "false");
      return r.converged ? kExitOk : kExitNumerical;
    }

    if (r_cmd->parsed()) {
      if (r_N < 2) throw CLI::ValidationError("--N", "N must be >= 2");
      if (r_witness > 0) {
        if (r_beta < 1.0)
          throw CLI::ValidationError("--witness", "requires beta >= 1");
        const auto sums = bliss::divergence_partial_sums(r_N, r_beta, r_witness);
        std::vector<bliss::SeriesCsvRow> rows;
        for (long k = 1; k <= r_witness; ++k) {
          const double term = bliss::divergence_term(r_N, r_beta, k);
          const double ratio = k < r_witness
                                   ? bliss::divergence_term(r_N, r_beta, k + 1) / term
                                   : std::numeric_limits<double>::quiet_NaN();
          rows.push_back({k, term, sums[static_cast<std::size_t>(k) - 1], ratio});
        }
        std::ofstream file;
        bliss::write_series_csv(open_sink(r_out, file), rows);
        std::printf("witness_sum=%s terms=%ld\n",
                    bliss::format_full(sums.back()).c_str(), r_witness);
        return kExitOk;
      }
      if (!(r_beta >= 0.0 && r_beta < 1.0))
        throw CLI::ValidationError(
            "--beta", "series bound needs beta in [0,1); use --witness for beta >= 1");
      const bliss::SeriesBound b =
          bliss::series_bound(r_N, r_beta, {r_max_terms, r_tail_tol});
      if (!r_out.empty()) {
        std::vector<bliss::SeriesCsvRow> rows;
        double partial = 1.0;
        for (long k = 1; k <= b.terms_used; ++k) {
          const double term = bliss::series_term(r_N, r_beta, k);
          partial += term;
          const double ratio = k < b.terms_used ? bliss::series_term_ratio(r_N, r_beta, k)
                                                : std::numeric_limits<double>::quiet_NaN();
          rows.push_back({k, term, partial, ratio});
        }
        std::ofstream file;
        bliss::write_series_csv(open_sink(r_out, file), rows);
      }
      std::printf("bound=%s terms=%ld tail=%.3g certified=%s\n",
                  bliss::format_full(b.value).c_str(), b.terms_used, b.tail_estimate,
                  b.tail_certified ? "true" : "false");
      return b.tail_certified ? kExitOk : kExitNumerical;
    }

    if (o_cmd->parsed()) {
      if (o_N < 2) throw CLI::ValidationError("--N", "N must be >= 2");
      if (o_segments < 2) throw CLI::ValidationError("--segments", "need >= 2");
      bliss::OptimizeConfig cfg;
      cfg.max_iters = o_iters;
      cfg.quad = o_quad.resolve();
      const bliss::OptimizeReport rep = bliss::maximize_gridfn(
          o_weight.resolve(), o_N, o_segments, std::nullopt, o_seed, cfg);
      std::cout << bliss::optimize_report_to_json(rep) << "\n";
      if (!o_out.empty()) {
        std::ofstream file;
        bliss::write_trace_csv(open_sink(o_out, file), rep.trace);
      }
      return kExitOk;
    }

    if (v_cmd->parsed()) return run_verify(v_suite);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bliss::NonFiniteExponent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
