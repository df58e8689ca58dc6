#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gq/checks.hpp"
#include "gq/covariance.hpp"
#include "gq/io.hpp"
#include "gq/oracle.hpp"

namespace gqt {

using gq::cplx;
constexpr double kPi = std::numbers::pi;

inline gq::ModelPtr euclid_model(int n = 64, double half = 8.0) {
  gq::ModelParams p;
  p.group = gq::GroupSpec::euclidean(1);
  p.axes = {gq::Axis::cells(gq::Scale::periodic, -half, half, n)};
  return gq::build_model(p);
}

inline gq::ModelPtr affine_model() {
  gq::ModelParams p;
  p.group = gq::GroupSpec::affine();
  p.axes = {gq::Axis::centered(gq::Scale::geometric, 0.2, 17), gq::Axis::centered(gq::Scale::linear, 0.2, 61)};
  p.t_span = 10;
  p.t_margin = 0;
  return gq::build_model(p);
}

inline gq::ModelPtr bianchi_model(gq::Family f = gq::Family::V, double param = 0.0) {
  gq::ModelParams p;
  p.group = gq::GroupSpec::bianchi(f, param);
  p.axes = {gq::Axis::centered(gq::Scale::linear, 0.35, 21), gq::Axis::centered(gq::Scale::linear, 0.35, 21),
            gq::Axis::centered(gq::Scale::linear, 0.25, 17)};
  p.t_span = 7;
  p.t_margin = 0.2;
  p.dual_count = 24;
  return gq::build_model(p);
}

inline gq::SampledFunction random_values(const gq::GridPtr& g, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  gq::SampledFunction f(g);
  for (int i = 0; i < g->size(); ++i) f.values[i] = cplx(n(rng), n(rng));
  return f;
}

inline gq::SymbolField random_dense_symbol(const gq::ModelPtr& m, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  gq::SymbolField A = gq::SymbolField::dense(m);
  for (auto& row : A.data)
    for (auto& M : row)
      for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) M(i, j) = cplx(n(rng), n(rng));
  return A;
}

// periodic node index of x on a centered/cells euclidean axis
inline int wrap(int i, int n) { return ((i % n) + n) % n; }

inline double rel(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return (a - b).norm() / b.norm(); }

}  // namespace gqt
