#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gq/quantization.hpp"

namespace gq {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double exact = 1e-10;   // shift-exact identities
  double base = 5e-2;     // refinement-limited metrics at every level
  double decay = 0.7;     // level-to-level ratio
  double floor = 1e-10;   // ratios are not judged below this value
  double oracle = 1e-8;
};

// rows of row-sparse symbols: a box of +-radius nodes around the origin along
// the listed axes ("all" when axes is empty and all_rows is set)
struct RowSpec {
  bool all_rows = true;
  std::vector<int> axes;
  int radius = 1;
};

struct SymbolSpec {
  RowSpec rows;
  std::string kind = "range";  // range: combinations of P(profile); random: iid entries
  std::vector<TestFunctionSpec> profiles;
};

struct RunConfig {
  std::string check;  // check run by refine-study
  ModelParams model;
  std::vector<TauMap> taus{TauMap{}};
  std::vector<TestFunctionSpec> tests;
  SymbolSpec symbol;
  std::vector<std::vector<double>> z;  // chart coordinates, snapped to the lattice per level
  int random_z = 0;
  int z_range = 3;
  int samples = 3;
  int oracle_xi_count = 0;  // 0: the dual grid size
  std::uint64_t seed = 1;
  int levels = 1;
  bool shift_exact = false;
  Tolerances tol;
  nlohmann::json raw;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
std::string config_hash(const RunConfig& c);

}  // namespace gq
