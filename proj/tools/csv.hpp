#pragma once

#include <asine/grid.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asine::cli {

/// A numeric CSV table with leading `#` comment lines and a header row.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  [[nodiscard]] std::size_t column_index(const std::string& name) const;
  [[nodiscard]] std::vector<double> column(const std::string& name) const;
  [[nodiscard]] bool has_column(const std::string& name) const;
  /// Value of a `# key = value` comment, if present.
  [[nodiscard]] std::optional<std::string> comment_value(const std::string& key) const;
};

/// Reads from a file, or from standard input when path is "-".
Table read_csv(const std::string& path);

/// Writes to a file, or to standard output when path is "-". Numbers use 17 significant digits.
void write_csv(const Table& table, const std::string& path);

std::string format_number(double v);

/// Samples from columns x and value; x must be equidistant.
SampledFunction<> to_sampled(const Table& table, const std::string& value_column = "value");

}  // namespace asine::cli
