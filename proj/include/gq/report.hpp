#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gq {

struct MetricRow {
  std::string check;
  std::string group;
  int level = 0;
  std::string metric;
  double value = 0.0;
  std::optional<double> tolerance;  // informational rows have none
  bool pass = true;
};

struct Report {
  std::vector<MetricRow> rows;
  nlohmann::json meta = nlohmann::json::object();

  // pass iff value <= tolerance (NaN fails)
  void add(const std::string& check, const std::string& group, int level, const std::string& metric, double value,
           std::optional<double> tolerance);
  // level-to-level ratios of an existing metric; values at or below floor pass
  void add_decay(const std::string& check, const std::string& group, const std::string& metric, double tolerance,
                 double floor);
  void append(const Report& other);

  bool all_pass() const;
  int failures() const;
  std::string csv() const;
  nlohmann::json to_json() const;
};

std::string format_value(double v);

}  // namespace gq
