#pragma once

// Serialization surface: GridFn as a JSON object {"nodes": [[x, v], ...]}
// (x ascending, first pair [0,0], last x = 1; round-trips are value-exact),
// and CSV emission with 17 significant digits for sweep tables, constant
// tables, series tables and optimizer reports.

#include <iosfwd>
#include <string>
#include <vector>

#include "bliss/gridfn.hpp"
#include "bliss/optimize.hpp"
#include "bliss/sequences.hpp"
#include "bliss/special.hpp"

namespace bliss {

// %.17g rendering used for every numeric field below.
std::string format_full(double x);

std::string grid_fn_to_json(const GridFn& f);
GridFn grid_fn_from_json(const std::string& text);
GridFn load_grid_fn(const std::string& path);
void save_grid_fn(const GridFn& f, const std::string& path);

// header: j,value,converged,model ; model empty when not applicable
void write_sweep_csv(std::ostream& os, const SweepTable& table);

// header: N,k,C,kC,C_N_limit
void write_constants_csv(std::ostream& os, const std::vector<BlissConstantRow>& rows);

struct SeriesCsvRow {
  long k;
  double term;
  double partial_sum;
  double ratio;  // term_{k+1}/term_k observed, NaN on the last row
};

// header: k,term,partial_sum,ratio
void write_series_csv(std::ostream& os, const std::vector<SeriesCsvRow>& rows);

// header: iter,value
void write_trace_csv(std::ostream& os, const std::vector<double>& trace);

// JSON object with fields status, best_value, iterations,
// concentration_abscissa and the nodes of the best function.
std::string optimize_report_to_json(const OptimizeReport& report);

}  // namespace bliss
