#include "gq/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace gq {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ConfigError(path + ": " + msg); }

double num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(num(j[i], path + "/" + std::to_string(i)));
  return v;
}

void known_keys(const json& j, const std::string& path, const std::set<std::string>& keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key())) fail(path + "/" + it.key(), "unknown field");
}

Scale parse_scale(const json& j, const std::string& path) {
  std::string s = str(j, path);
  if (s == "linear") return Scale::linear;
  if (s == "geometric") return Scale::geometric;
  if (s == "periodic") return Scale::periodic;
  fail(path, "unknown scale '" + s + "'");
}

Axis parse_axis(const json& j, const std::string& path) {
  known_keys(j, path, {"scale", "h", "count", "min", "max"});
  if (!j.contains("scale") || !j.contains("count")) fail(path, "axis needs scale and count");
  Scale sc = parse_scale(j["scale"], path + "/scale");
  int count = integer(j["count"], path + "/count");
  try {
    if (j.contains("h")) {
      if (j.contains("min") || j.contains("max")) fail(path, "give either h or min/max");
      return Axis::centered(sc, num(j["h"], path + "/h"), count);
    }
    if (!j.contains("min") || !j.contains("max")) fail(path, "axis needs h or min/max");
    return Axis::cells(sc, num(j["min"], path + "/min"), num(j["max"], path + "/max"), count);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

TestFunctionSpec parse_test(const json& j, const std::string& path, int dim) {
  known_keys(j, path, {"type", "center", "width", "order", "freq", "scale"});
  TestFunctionSpec t;
  if (j.contains("type")) t.type = str(j["type"], path + "/type");
  if (t.type != "gaussian" && t.type != "bump" && t.type != "hermite") fail(path + "/type", "unknown builtin '" + t.type + "'");
  t.center = j.contains("center") ? numbers(j["center"], path + "/center") : std::vector<double>(dim, 0.0);
  t.width = j.contains("width") ? numbers(j["width"], path + "/width") : std::vector<double>(dim, 1.0);
  if (static_cast<int>(t.center.size()) != dim) fail(path + "/center", "expected " + std::to_string(dim) + " entries");
  if (static_cast<int>(t.width.size()) != dim) fail(path + "/width", "expected " + std::to_string(dim) + " entries");
  for (double w : t.width)
    if (!(w > 0)) fail(path + "/width", "widths must be positive");
  if (j.contains("order")) {
    if (!j["order"].is_array()) fail(path + "/order", "expected an array of integers");
    for (std::size_t i = 0; i < j["order"].size(); ++i) t.order.push_back(integer(j["order"][i], path + "/order/" + std::to_string(i)));
    if (static_cast<int>(t.order.size()) != dim) fail(path + "/order", "expected " + std::to_string(dim) + " entries");
  }
  if (j.contains("freq")) {
    t.freq = numbers(j["freq"], path + "/freq");
    if (static_cast<int>(t.freq.size()) != dim) fail(path + "/freq", "expected " + std::to_string(dim) + " entries");
  }
  if (j.contains("scale")) t.scale = num(j["scale"], path + "/scale");
  return t;
}

}  // namespace

RunConfig parse_config(const json& j) {
  known_keys(j, "", {"description", "check", "group", "axes", "rep", "dual", "tau", "tests", "symbol", "z",
                     "random_z", "z_range", "samples", "oracle_xi_count", "seed", "levels", "shift_exact",
                     "tolerance"});
  RunConfig c;
  c.raw = j;
  if (j.contains("check")) c.check = str(j["check"], "/check");
  if (!j.contains("group")) fail("/group", "missing");
  try {
    c.model.group = GroupSpec::parse(str(j["group"], "/group"));
  } catch (const std::invalid_argument& e) {
    fail("/group", e.what());
  }
  int dim = c.model.group.dim();
  if (!j.contains("axes") || !j["axes"].is_array()) fail("/axes", "missing axis list");
  for (std::size_t i = 0; i < j["axes"].size(); ++i) c.model.axes.push_back(parse_axis(j["axes"][i], "/axes/" + std::to_string(i)));
  if (static_cast<int>(c.model.axes.size()) != dim) fail("/axes", "expected " + std::to_string(dim) + " axes");
  try {
    validate_axes(c.model.group, c.model.axes);
  } catch (const std::invalid_argument& e) {
    fail("/axes", e.what());
  }
  if (j.contains("rep")) {
    const json& r = j["rep"];
    known_keys(r, "/rep", {"t_span", "t_margin", "t_min", "t_max"});
    if (r.contains("t_span")) c.model.t_span = num(r["t_span"], "/rep/t_span");
    if (r.contains("t_margin")) c.model.t_margin = num(r["t_margin"], "/rep/t_margin");
    if (r.contains("t_min") != r.contains("t_max")) fail("/rep", "give both t_min and t_max");
    if (r.contains("t_min")) {
      c.model.t_explicit = true;
      c.model.t_min = num(r["t_min"], "/rep/t_min");
      c.model.t_max = num(r["t_max"], "/rep/t_max");
    }
  }
  if (j.contains("dual")) {
    const json& d = j["dual"];
    known_keys(d, "/dual", {"count", "lambda_max"});
    if (d.contains("count")) c.model.dual_count = integer(d["count"], "/dual/count");
    if (d.contains("lambda_max")) c.model.lambda_max = num(d["lambda_max"], "/dual/lambda_max");
  }
  if (j.contains("tau")) {
    c.taus.clear();
    json t = j["tau"].is_array() ? j["tau"] : json::array({j["tau"]});
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string path = "/tau/" + std::to_string(i);
      TauMap m;
      try {
        m = TauMap::parse(str(t[i], path));
      } catch (const std::invalid_argument& e) {
        fail(path, e.what());
      }
      try {
        m.check(c.model.group);
      } catch (const std::invalid_argument& e) {
        throw UnsupportedError(path + ": " + e.what());
      }
      c.taus.push_back(m);
    }
  }
  if (j.contains("tests")) {
    if (!j["tests"].is_array()) fail("/tests", "expected an array");
    for (std::size_t i = 0; i < j["tests"].size(); ++i) c.tests.push_back(parse_test(j["tests"][i], "/tests/" + std::to_string(i), dim));
  }
  c.symbol.profiles = c.tests;
  if (j.contains("symbol")) {
    const json& s = j["symbol"];
    known_keys(s, "/symbol", {"rows", "kind", "profiles"});
    if (s.contains("kind")) c.symbol.kind = str(s["kind"], "/symbol/kind");
    if (c.symbol.kind != "range" && c.symbol.kind != "random") fail("/symbol/kind", "expected range or random");
    if (s.contains("rows")) {
      const json& r = s["rows"];
      if (r.is_string()) {
        if (r.get<std::string>() != "all") fail("/symbol/rows", "expected \"all\" or an object");
      } else {
        known_keys(r, "/symbol/rows", {"axes", "radius"});
        c.symbol.rows.all_rows = false;
        if (!r.contains("axes") || !r["axes"].is_array()) fail("/symbol/rows/axes", "expected an array of axis indices");
        for (std::size_t i = 0; i < r["axes"].size(); ++i) {
          int a = integer(r["axes"][i], "/symbol/rows/axes/" + std::to_string(i));
          if (a < 0 || a >= dim) fail("/symbol/rows/axes/" + std::to_string(i), "axis out of range");
          c.symbol.rows.axes.push_back(a);
        }
        if (r.contains("radius")) c.symbol.rows.radius = integer(r["radius"], "/symbol/rows/radius");
      }
    }
    if (s.contains("profiles")) {
      c.symbol.profiles.clear();
      for (std::size_t i = 0; i < s["profiles"].size(); ++i)
        c.symbol.profiles.push_back(parse_test(s["profiles"][i], "/symbol/profiles/" + std::to_string(i), dim));
    }
  }
  if (j.contains("z")) {
    if (!j["z"].is_array()) fail("/z", "expected an array of points");
    for (std::size_t i = 0; i < j["z"].size(); ++i) {
      auto p = numbers(j["z"][i], "/z/" + std::to_string(i));
      if (static_cast<int>(p.size()) != dim) fail("/z/" + std::to_string(i), "expected " + std::to_string(dim) + " coordinates");
      Point q{};
      for (int a = 0; a < dim; ++a) q[a] = p[a];
      if (!valid_point(c.model.group, q)) fail("/z/" + std::to_string(i), "not a group element");
      c.z.push_back(p);
    }
  }
  if (j.contains("random_z")) c.random_z = integer(j["random_z"], "/random_z");
  if (j.contains("z_range")) c.z_range = integer(j["z_range"], "/z_range");
  if (j.contains("samples")) c.samples = integer(j["samples"], "/samples");
  if (c.samples < 1) fail("/samples", "must be at least 1");
  if (j.contains("oracle_xi_count")) c.oracle_xi_count = integer(j["oracle_xi_count"], "/oracle_xi_count");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("/seed", "expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("levels")) c.levels = integer(j["levels"], "/levels");
  if (c.levels < 1) fail("/levels", "must be at least 1");
  if (j.contains("shift_exact")) {
    if (!j["shift_exact"].is_boolean()) fail("/shift_exact", "expected true or false");
    c.shift_exact = j["shift_exact"].get<bool>();
  }
  if (j.contains("tolerance")) {
    const json& t = j["tolerance"];
    known_keys(t, "/tolerance", {"exact", "base", "decay", "floor", "oracle"});
    if (t.contains("exact")) c.tol.exact = num(t["exact"], "/tolerance/exact");
    if (t.contains("base")) c.tol.base = num(t["base"], "/tolerance/base");
    if (t.contains("decay")) c.tol.decay = num(t["decay"], "/tolerance/decay");
    if (t.contains("floor")) c.tol.floor = num(t["floor"], "/tolerance/floor");
    if (t.contains("oracle")) c.tol.oracle = num(t["oracle"], "/tolerance/oracle");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  try {
    return parse_config(j);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : c.raw.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gq
