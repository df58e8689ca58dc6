#pragma once

#include <vector>

#include "gq/quantization.hpp"

namespace gq {

// a(x, xi) on the group grid times a uniform frequency grid (xi row-major,
// last axis fastest)
struct ScalarSymbol {
  GridPtr xgrid;
  std::vector<std::vector<double>> xi;
  Eigen::MatrixXcd values;  // x nodes x xi nodes

  ScalarSymbol() = default;
  ScalarSymbol(GridPtr g, std::vector<std::vector<double>> xi_nodes);
  int xi_size() const;
  std::vector<double> xi_point(int j) const;
  double xi_cell() const;
};

// Op(a)u(x) = sum_y sum_xi e^{2 pi i (x-y).xi} a(x + tau(y-x), xi) u(y) dy dxi
SampledFunction kn_oracle(const ScalarSymbol& a, const SampledFunction& u, const TauMap& tau);

// the pipeline symbol with A(x, zeta) = a(x, -zeta)
SymbolField to_symbol_field(const ModelPtr& model, const ScalarSymbol& a);

struct OracleComparison {
  double path1 = 0.0;
  double path2 = 0.0;
  double worst() const { return path1 > path2 ? path1 : path2; }
};

OracleComparison pipeline_vs_oracle(const ModelPtr& model, const ScalarSymbol& a, const SampledFunction& u,
                                    const TauMap& tau);

}  // namespace gq
