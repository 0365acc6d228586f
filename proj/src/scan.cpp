#include "etpa/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace etpa::scan {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok) {
  if (tok.empty()) throw std::runtime_error("csv: empty data field");
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw std::runtime_error("csv: malformed number '" + tok + "'");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void Axis::validate() const {
  if (name.empty()) throw std::invalid_argument("axis: name must not be empty");
  if (values.empty()) throw std::invalid_argument("axis: values must not be empty");
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (!(values[i] < values[i + 1]))
      throw std::invalid_argument("axis '" + name + "': values must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("axis '" + name + "': values must be finite");
}

ScanResult run_scan(const std::vector<Axis>& axes,
                    const std::vector<std::string>& value_columns,
                    const std::function<std::vector<double>(const std::vector<double>&)>& eval,
                    int jobs) {
  if (axes.empty()) throw std::invalid_argument("run_scan: need at least one axis");
  if (jobs < 1) throw std::invalid_argument("run_scan: jobs must be >= 1");
  for (const Axis& a : axes) a.validate();
  for (const std::string& c : value_columns)
    if (c.empty()) throw std::invalid_argument("run_scan: empty column name");

  std::size_t total = 1;
  for (const Axis& a : axes) total *= a.values.size();

  ScanResult r;
  r.axes = axes;
  r.columns = value_columns;
  r.columns.push_back("error");
  r.data.assign(total, {});
  r.messages.assign(total, "");

  const std::size_t width = axes.size() + value_columns.size() + 1;
  auto work_point = [&](std::size_t idx) {
    std::vector<double> coords(axes.size());
    std::size_t rem = idx;
    for (std::size_t a = axes.size(); a-- > 0;) {
      const std::size_t n = axes[a].values.size();
      coords[a] = axes[a].values[rem % n];
      rem /= n;
    }
    std::vector<double>& row = r.data[idx];
    row.assign(width, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t a = 0; a < axes.size(); ++a) row[a] = coords[a];
    try {
      std::vector<double> vals = eval(coords);
      if (vals.size() != value_columns.size())
        throw std::runtime_error("evaluator returned wrong column count");
      for (std::size_t c = 0; c < vals.size(); ++c) row[axes.size() + c] = vals[c];
      row[width - 1] = 0.0;
    } catch (const std::exception& e) {
      r.messages[idx] = e.what();
      row[width - 1] = 1.0;
    }
  };

  const int nthreads = static_cast<int>(std::min<std::size_t>(jobs, total));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < total; ++i) work_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
          work_point(i);
      });
    for (std::thread& t : pool) t.join();
  }

  bool any_ok = false;
  std::string first_error;
  for (std::size_t i = 0; i < total; ++i) {
    if (r.data[i].back() == 0.0)
      any_ok = true;
    else if (first_error.empty())
      first_error = r.messages[i];
  }
  if (!any_ok)
    throw std::runtime_error("run_scan: every point failed; first error: " + first_error);
  return r;
}

void write_csv(const ScanResult& r, std::ostream& os) {
  for (const std::string& p : r.provenance) os << "# " << p << "\n";
  std::string header;
  for (const Axis& a : r.axes) {
    if (a.name.empty()) throw std::runtime_error("write_csv: empty axis name");
    header += a.name;
    header += ',';
  }
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (r.columns[c].empty()) throw std::runtime_error("write_csv: empty column name");
    header += r.columns[c];
    if (c + 1 < r.columns.size()) header += ',';
  }
  os << header << "\n";
  const std::size_t width = r.axes.size() + r.columns.size();
  for (const std::vector<double>& row : r.data) {
    if (row.size() != width) throw std::runtime_error("write_csv: ragged data row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << format_double(row[c]);
      if (c + 1 < row.size()) os << ',';
    }
    os << "\n";
  }
}

void write_csv_file(const ScanResult& r, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  write_csv(r, os);
  os.flush();
  if (!os) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

ScanResult read_csv(std::istream& is) {
  ScanResult r;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string p = line.substr(1);
      if (!p.empty() && p[0] == ' ') p = p.substr(1);
      r.provenance.push_back(p);
      continue;
    }
    std::vector<std::string> toks = split_csv_line(line);
    if (!have_header) {
      for (const std::string& t : toks)
        if (t.empty()) throw std::runtime_error("csv: empty column name in header");
      r.columns = toks;
      have_header = true;
      continue;
    }
    if (toks.size() != r.columns.size())
      throw std::runtime_error("csv: row has " + std::to_string(toks.size()) +
                               " fields, header has " + std::to_string(r.columns.size()));
    std::vector<double> row;
    row.reserve(toks.size());
    for (const std::string& t : toks) row.push_back(parse_double(t));
    r.data.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv: missing header row");
  return r;
}

}  // namespace etpa::scan
