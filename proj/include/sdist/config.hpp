#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdist/experiments.hpp"

namespace sdist {

// Minimal TOML reader covering what the experiment files use: [section]
// and [[section.list]] headers, scalar values (number, bool, "string"),
// and arrays of numbers. Unknown keys are rejected when the configuration
// is interpreted.
namespace toml {

struct Value {
  enum class Kind { Number, Boolean, String, NumberArray } kind;
  double number = 0.0;
  bool boolean = false;
  std::string string;
  std::vector<double> array;
};

using Table = std::map<std::string, Value>;

struct Document {
  std::map<std::string, Table> sections;
  std::map<std::string, std::vector<Table>> table_arrays;
};

Document parse(const std::string& text);
Document parse_file(const std::string& path);

}  // namespace toml

struct MeanScanSettings {
  std::vector<double> eps;
  int boundary_samples = 64;
  int grid_nodes = 1025;
};

struct LoadedConfig {
  CaseSpec spec;
  MeanScanSettings mean;
};

// Builds and validates a case from a config file; throws ConfigError on
// unknown keys, missing fields, or violated invariants.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& text);

}  // namespace sdist
