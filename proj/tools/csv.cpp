#include "csv.hpp"

#include <asine/error.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace asine::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("CSV line " + std::to_string(line_no) + ": cannot parse number '" + s + "'");
  }
  return v;
}

Table parse(std::istream& in) {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      t.comments.push_back(trim(s.substr(1)));
      continue;
    }
    if (t.columns.empty()) {
      t.columns = split(s);
      continue;
    }
    const auto cells = split(s);
    if (cells.size() != t.columns.size()) {
      throw DomainError("CSV line " + std::to_string(line_no) + ": expected " + std::to_string(t.columns.size()) +
                        " columns");
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_number(c, line_no));
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw DomainError("CSV input has no header row");
  return t;
}

}  // namespace

std::size_t Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw DomainError("CSV input has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

bool Table::has_column(const std::string& name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> Table::column(const std::string& name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[k]);
  return out;
}

std::optional<std::string> Table::comment_value(const std::string& key) const {
  for (const auto& c : comments) {
    const auto eq = c.find('=');
    if (eq != std::string::npos && trim(c.substr(0, eq)) == key) return trim(c.substr(eq + 1));
  }
  return std::nullopt;
}

Table read_csv(const std::string& path) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  return parse(in);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, const std::string& path) {
  std::ostringstream out;
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_number(r[i]);
    out << '\n';
  }
  if (path == "-") {
    std::cout << out.str();
    std::cout.flush();
    return;
  }
  std::ofstream file(path);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << out.str();
}

SampledFunction<> to_sampled(const Table& table, const std::string& value_column) {
  const std::vector<double> x = table.column("x");
  std::vector<double> v = table.column(value_column);
  if (x.size() < 2) throw DomainError("CSV input needs at least two rows");
  const double step = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(step > 0.0)) throw DomainError("CSV x column must be increasing");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - (x.front() + static_cast<double>(i) * step)) > 1e-9 * std::max(1.0, std::abs(x[i]))) {
      throw DomainError("CSV x column must be equidistant");
    }
  }
  return {UniformGrid(x.front(), step, x.size()), std::move(v)};
}

}  // namespace asine::cli
