#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tnet/driver.hpp"

namespace tnet {

// A load program read from a JSON document; see README for the schema.
struct RunConfig {
  std::string unit = "s";  // time unit of durations and rates: "s" or "yr"
  double initial_temperature = 293.15;
  MaterialSpec material;
  std::vector<LoadStep> program;
  DriverOptions options;
};

// `field` is a path such as "program[1].duration"; empty for syntax errors,
// which carry a line and column instead.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message, int line = 0, int column = 0);
  const std::string& field() const { return field_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string field_;
  int line_;
  int column_;
};

RunConfig parse_config(const std::string& text);

}  // namespace tnet
