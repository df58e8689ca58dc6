#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gq/grid.hpp"

namespace gq {

using cplx = std::complex<double>;

struct SampledFunction {
  GridPtr grid;
  Eigen::VectorXcd values;

  SampledFunction() = default;
  explicit SampledFunction(GridPtr g) : grid(std::move(g)), values(Eigen::VectorXcd::Zero(grid->size())) {}
  SampledFunction(GridPtr g, Eigen::VectorXcd v);

  // multilinear interpolation with zero extension (periodic wrap on periodic axes)
  cplx at(const Point& x) const;
};

cplx integrate(const SampledFunction& f);
// linear in the first argument
cplx inner(const SampledFunction& f, const SampledFunction& g);
double norm(const SampledFunction& f);

// (f * g)(x) = sum_y m_y f(y) g(y^-1 x)
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g);
// f^{*p}(x) = Delta(x)^{-1/p} conj(f(x^-1))
SampledFunction involution_p(const SampledFunction& f, double p);

// Builtin test functions. Coordinates are "log-chart" coordinates: log a on
// geometric axes, the chart value otherwise.
struct TestFunctionSpec {
  std::string type = "gaussian";  // gaussian | bump | hermite
  std::vector<double> center;
  std::vector<double> width;
  std::vector<int> order;       // hermite degree per axis
  std::vector<double> freq;     // modulation e^{i freq . u} for hermite
  double scale = 1.0;
};

cplx eval_test_function(const TestFunctionSpec& spec, const GroupGrid& grid, const Point& x);
SampledFunction sample(const TestFunctionSpec& spec, const GridPtr& grid);

void require_same_grid(const GridPtr& a, const GridPtr& b);

}  // namespace gq
