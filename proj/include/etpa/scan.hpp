#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace etpa::scan {

// One scan coordinate: strictly monotone grid plus a display hint.
struct Axis {
  std::string name;
  std::vector<double> values;
  bool log_scale = false;

  void validate() const;
};

// Cartesian product sweep.  `data` holds one row per grid point, laid out as
// the axis coordinates followed by the value columns; the last column is
// always `error` (0 = ok, 1 = the evaluator threw and the values are NaN).
struct ScanResult {
  std::vector<Axis> axes;
  std::vector<std::string> columns;  // value column names, includes "error"
  std::vector<std::vector<double>> data;
  std::vector<std::string> messages;    // per-row failure text, "" when ok
  std::vector<std::string> provenance;  // emitted as leading '# ' lines
};

// Evaluates `eval` at every grid point (row order: last axis fastest) on
// `jobs` threads.  Rows are stored by index, so the result is independent of
// scheduling.  Throws only if every point fails.
ScanResult run_scan(const std::vector<Axis>& axes,
                    const std::vector<std::string>& value_columns,
                    const std::function<std::vector<double>(const std::vector<double>&)>& eval,
                    int jobs = 1);

// '#'-prefixed provenance lines, a header row, then %.17g data rows.
void write_csv(const ScanResult& r, std::ostream& os);
void write_csv_file(const ScanResult& r, const std::string& path);

// Parses what write_csv produced.  Axis metadata is not reconstructed; all
// columns come back in `columns`.
ScanResult read_csv(std::istream& is);

}  // namespace etpa::scan
