#include "gq/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace gq {

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void Report::add(const std::string& check, const std::string& group, int level, const std::string& metric,
                 double value, std::optional<double> tolerance) {
  MetricRow r{check, group, level, metric, value, tolerance, true};
  if (tolerance) r.pass = std::isfinite(value) && value <= *tolerance;
  rows.push_back(r);
}

void Report::add_decay(const std::string& check, const std::string& group, const std::string& metric,
                       double tolerance, double floor) {
  std::map<int, double> by_level;
  for (const auto& r : rows)
    if (r.check == check && r.group == group && r.metric == metric) by_level[r.level] = r.value;
  for (auto it = by_level.begin(); it != by_level.end(); ++it) {
    auto prev = it;
    if (it == by_level.begin()) continue;
    --prev;
    double ratio = prev->second > 0 ? it->second / prev->second : (it->second > 0 ? INFINITY : 0.0);
    MetricRow r{check, group, it->first, metric + "_ratio", ratio, tolerance, true};
    r.pass = it->second <= floor || (std::isfinite(ratio) && ratio <= tolerance);
    rows.push_back(r);
  }
}

void Report::append(const Report& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

bool Report::all_pass() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& r : rows) n += r.pass ? 0 : 1;
  return n;
}

std::string Report::csv() const {
  std::ostringstream os;
  os << "check,group,level,metric,value,tolerance,pass\n";
  for (const auto& r : rows)
    os << r.check << ',' << r.group << ',' << r.level << ',' << r.metric << ',' << format_value(r.value) << ','
       << (r.tolerance ? format_value(*r.tolerance) : std::string()) << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["meta"] = meta;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"check", r.check}, {"group", r.group}, {"level", r.level}, {"metric", r.metric},
                          {"value", format_value(r.value)}, {"pass", r.pass}};
    row["tolerance"] = r.tolerance ? nlohmann::json(format_value(*r.tolerance)) : nlohmann::json(nullptr);
    j["rows"].push_back(row);
  }
  j["pass"] = all_pass();
  return j;
}

}  // namespace gq
