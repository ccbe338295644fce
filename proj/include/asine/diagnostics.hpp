#pragma once

#include <map>
#include <string>
#include <vector>

namespace asine {

/// Side-channel for warnings and named scalar diagnostics from the inverters.
struct Diagnostics {
  std::vector<std::string> warnings;
  std::map<std::string, double> values;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  void set(const std::string& key, double value) { values[key] = value; }
};

}  // namespace asine
