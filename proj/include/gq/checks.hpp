#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gq/config.hpp"
#include "gq/report.hpp"

namespace gq {

// one discretization level of a config
struct Level {
  int index = 0;
  ModelParams params;
  ModelPtr model;
  std::vector<SampledFunction> tests;
  std::optional<Calibration> calibration;
};

// builds the level-th refinement; kappa is set to its theoretical value and
// then calibrated when the config lists at least three test functions
Level make_level(const RunConfig& c, int level);

std::vector<int> symbol_rows(const RowSpec& spec, const GroupGrid& grid);
// nearest lattice point in the internal coordinates of each axis
Point snap_to_lattice(const GroupGrid& grid, const std::vector<double>& chart);
// configured z followed by random_z random lattice points
std::vector<Point> z_points(const RunConfig& c, const GroupGrid& grid, std::mt19937_64& rng);

// random complex combination of the configured test functions
SampledFunction random_function(const Level& l, std::mt19937_64& rng);
SymbolField random_symbol(const RunConfig& c, const Level& l, std::mt19937_64& rng);

const std::vector<std::string>& check_names();
Report run_check(const RunConfig& c, const std::string& name);
// precondition: levels >= 2
Report refine_study(const RunConfig& c);

}  // namespace gq
