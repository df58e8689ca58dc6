#include "gq/function.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

void require_same_grid(const GridPtr& a, const GridPtr& b) {
  if (a.get() != b.get()) throw std::invalid_argument("grid mismatch");
}

SampledFunction::SampledFunction(GridPtr g, Eigen::VectorXcd v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size()) throw std::invalid_argument("sample count does not match grid");
}

cplx SampledFunction::at(const Point& x) const {
  Stencil s = grid->stencil(x);
  cplx r = 0.0;
  for (int k = 0; k < s.n; ++k) r += s.w[k] * values[s.idx[k]];
  return r;
}

cplx integrate(const SampledFunction& f) {
  return (f.values.array() * f.grid->weights().array().cast<cplx>()).sum();
}

cplx inner(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f.grid, g.grid);
  cplx s = 0.0;
  const auto& m = f.grid->weights();
  for (int i = 0; i < f.grid->size(); ++i) s += m[i] * f.values[i] * std::conj(g.values[i]);
  return s;
}

double norm(const SampledFunction& f) { return std::sqrt(std::max(0.0, inner(f, f).real())); }

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f.grid, g.grid);
  const GroupGrid& G = *f.grid;
  const GroupSpec& gs = G.group();
  SampledFunction out(f.grid);
  std::vector<Point> inv(G.size());
  for (int j = 0; j < G.size(); ++j) inv[j] = inverse(gs, G.node(j));
  for (int i = 0; i < G.size(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < G.size(); ++j) {
      if (f.values[j] == cplx(0.0)) continue;
      s += G.weight(j) * f.values[j] * g.at(multiply(gs, inv[j], G.node(i)));
    }
    out.values[i] = s;
  }
  return out;
}

SampledFunction involution_p(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("involution_p needs p >= 1");
  const GroupGrid& G = *f.grid;
  SampledFunction out(f.grid);
  for (int i = 0; i < G.size(); ++i) {
    const Point& x = G.node(i);
    out.values[i] = std::pow(modular(G.group(), x), -1.0 / p) * std::conj(f.at(inverse(G.group(), x)));
  }
  return out;
}

namespace {

double hermite(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double param(const std::vector<double>& v, int i, double dflt) {
  if (v.empty()) return dflt;
  return i < static_cast<int>(v.size()) ? v[i] : v.back();
}

}  // namespace

cplx eval_test_function(const TestFunctionSpec& spec, const GroupGrid& grid, const Point& x) {
  cplx val = spec.scale;
  for (int a = 0; a < grid.dim(); ++a) {
    double u = grid.axes()[a].internal(x[a]);
    double c = param(spec.center, a, 0.0);
    double w = param(spec.width, a, 1.0);
    double s = (u - c) / w;
    if (spec.type == "gaussian") {
      val *= std::exp(-0.5 * s * s);
    } else if (spec.type == "bump") {
      if (std::abs(s) >= 1.0) return 0.0;
      val *= std::exp(1.0 - 1.0 / (1.0 - s * s));
    } else if (spec.type == "hermite") {
      int n = spec.order.empty() ? 0 : (a < static_cast<int>(spec.order.size()) ? spec.order[a] : spec.order.back());
      double f = param(spec.freq, a, 0.0);
      val *= hermite(n, s) * std::exp(-0.5 * s * s) * std::polar(1.0, f * (u - c));
    } else {
      throw std::invalid_argument("unknown test function '" + spec.type + "'");
    }
  }
  return val;
}

SampledFunction sample(const TestFunctionSpec& spec, const GridPtr& grid) {
  SampledFunction f(grid);
  for (int i = 0; i < grid->size(); ++i) f.values[i] = eval_test_function(spec, *grid, grid->node(i));
  return f;
}

}  // namespace gq
