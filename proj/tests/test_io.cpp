#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bliss/io.hpp"
#include "bliss/sequences.hpp"
#include "test_helpers.hpp"

using namespace bliss;

TEST_CASE("GridFn JSON round-trips are value-exact") {
  std::mt19937_64 rng(321);
  for (int t = 0; t < 50; ++t) {
    const GridFn f = random_monotone(rng(), 1 + static_cast<int>(rng() % 12), 2,
                                     GridSpacing::random_jitter);
    const GridFn g = grid_fn_from_json(grid_fn_to_json(f));
    CHECK((f.abscissas() == g.abscissas()).all());
    CHECK((f.values() == g.values()).all());
  }
  // awkward decimals survive
  const GridFn f = make_grid_fn({{0, 0}, {0.1, 1.0 / 3.0}, {1, 0.30000000000000004}});
  const GridFn g = grid_fn_from_json(grid_fn_to_json(f));
  CHECK((f.values() == g.values()).all());
}

TEST_CASE("GridFn JSON parsing accepts the documented shape only") {
  CHECK_NOTHROW(grid_fn_from_json(R"({"nodes":[[0,0],[0.25,0.5],[1,0.5]]})"));
  CHECK_THROWS_AS(grid_fn_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(grid_fn_from_json(R"({"wrong":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(grid_fn_from_json(R"({"nodes":[[0,0],[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(grid_fn_from_json(R"({"nodes":[[0,0.5],[1,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(grid_fn_from_json(R"({"nodes":[[0,0],[0.5,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(load_grid_fn("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("full-precision formatting round-trips doubles") {
  std::mt19937_64 rng(654);
  for (int t = 0; t < 2000; ++t) {
    const double x = std::ldexp(testutil::u01(rng) - 0.5,
                                static_cast<int>(rng() % 600) - 300);
    CHECK(std::strtod(format_full(x).c_str(), nullptr) == x);
  }
  CHECK(std::strtod(format_full(3.141592653589793).c_str(), nullptr) == 3.141592653589793);
}

TEST_CASE("sweep CSV has the documented header and blank models") {
  SweepTable t{2, loglog_weight(0.5), {}, {}};
  t.rows.push_back({100.0, 3.5, true, NAN, false});
  t.rows.push_back({1000.0, 3.0, false, 2.5, true});
  std::ostringstream os;
  write_sweep_csv(os, t);
  const std::string text = os.str();
  CHECK(text.rfind("j,value,converged,model\n", 0) == 0);
  CHECK(text.find("100,3.5,true,\n") != std::string::npos);
  CHECK(text.find("1000,3,false,2.5\n") != std::string::npos);
}

TEST_CASE("constants CSV rows carry all five columns") {
  std::ostringstream os;
  write_constants_csv(os, {bliss_row(2, 2.0)});
  const std::string text = os.str();
  CHECK(text.rfind("N,k,C,kC,C_N_limit\n2,2,", 0) == 0);
  // the C and kC fields parse back to 3/2 and 3
  const char* p = text.c_str() + text.find("\n2,2,") + 5;
  char* end;
  CHECK(std::strtod(p, &end) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(std::strtod(end + 1, nullptr) == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("optimizer report JSON names its fields") {
  OptimizeReport rep{moser_w(4.0, 2), 3.25, 7, OptimizeStatus::divergence_detected,
                     {1.0, 3.25}, 0.25};
  const std::string j = optimize_report_to_json(rep);
  CHECK(j.find("\"status\":\"divergence_detected\"") != std::string::npos);
  CHECK(j.find("\"best_value\":3.25") != std::string::npos);
  CHECK(j.find("\"iterations\":7") != std::string::npos);
  CHECK(j.find("\"nodes\":[[0,0],[0.25,0.5],[1,0.5]]") != std::string::npos);
}
