#include "bliss/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bliss {

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string grid_fn_to_json(const GridFn& f) {
  std::ostringstream os;
  os << "{\"nodes\":[";
  for (Eigen::Index i = 0; i < f.abscissas().size(); ++i) {
    if (i) os << ",";
    os << "[" << format_full(f.abscissas()[i]) << "," << format_full(f.values()[i]) << "]";
  }
  os << "]}";
  return os.str();
}

GridFn grid_fn_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("GridFn parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
    throw std::invalid_argument("GridFn parse: expected an object with a \"nodes\" array");
  std::vector<std::pair<double, double>> nodes;
  for (const auto& entry : j["nodes"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw std::invalid_argument("GridFn parse: each node must be a [x, v] pair");
    nodes.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return make_grid_fn(nodes);
}

GridFn load_grid_fn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return grid_fn_from_json(ss.str());
}

void save_grid_fn(const GridFn& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << grid_fn_to_json(f) << "\n";
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
  os << "j,value,converged,model\n";
  for (const SweepRow& r : table.rows) {
    os << format_full(r.j) << "," << format_full(r.value) << ","
       << (r.converged ? "true" : "false") << ",";
    if (r.has_model) os << format_full(r.model);
    os << "\n";
  }
}

void write_constants_csv(std::ostream& os, const std::vector<BlissConstantRow>& rows) {
  os << "N,k,C,kC,C_N_limit\n";
  for (const BlissConstantRow& r : rows) {
    os << r.N << "," << format_full(r.k) << "," << format_full(r.c_value) << ","
       << format_full(r.k_times_c) << "," << format_full(r.limit) << "\n";
  }
}

void write_series_csv(std::ostream& os, const std::vector<SeriesCsvRow>& rows) {
  os << "k,term,partial_sum,ratio\n";
  for (const SeriesCsvRow& r : rows) {
    os << r.k << "," << format_full(r.term) << "," << format_full(r.partial_sum) << ",";
    if (std::isfinite(r.ratio)) os << format_full(r.ratio);
    os << "\n";
  }
}

void write_trace_csv(std::ostream& os, const std::vector<double>& trace) {
  os << "iter,value\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << i << "," << format_full(trace[i]) << "\n";
}

std::string optimize_report_to_json(const OptimizeReport& report) {
  const char* status = nullptr;
  switch (report.status) {
    case OptimizeStatus::converged: status = "converged"; break;
    case OptimizeStatus::budget_exhausted: status = "budget_exhausted"; break;
    case OptimizeStatus::divergence_detected: status = "divergence_detected"; break;
  }
  std::ostringstream os;
  os << "{\"status\":\"" << status << "\",\"best_value\":" << format_full(report.best_value)
     << ",\"iterations\":" << report.iterations
     << ",\"concentration_abscissa\":" << format_full(report.concentration_abscissa)
     << ",\"nodes\":[";
  const GridFn& f = report.best_fn;
  for (Eigen::Index i = 0; i < f.abscissas().size(); ++i) {
    if (i) os << ",";
    os << "[" << format_full(f.abscissas()[i]) << "," << format_full(f.values()[i]) << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace bliss
