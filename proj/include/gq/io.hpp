#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gq/fields.hpp"

namespace gq {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coordinate names used as CSV index headers
std::vector<std::string> axis_names(const GroupSpec& g);

// columns <axis indices...>,re,im, row-major over the grid
void write_function_csv(std::ostream& os, const SampledFunction& f);
SampledFunction read_function_csv(std::istream& is, const GridPtr& grid);
SampledFunction read_function_csv(const std::string& path, const GridPtr& grid);

// columns <axis indices...>,xi,i,j,re,im over the active rows; entries in the
// kernel convention of the rep space
void write_symbol_csv(std::ostream& os, const SymbolField& A);
SymbolField read_symbol_csv(std::istream& is, const ModelPtr& model);
SymbolField read_symbol_csv(const std::string& path, const ModelPtr& model);

}  // namespace gq
