#include "gq/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gq {

namespace {

void require_euclidean(const GroupGrid& g) {
  if (g.group().kind != Kind::euclidean) throw std::invalid_argument("the abelian oracle supports euclidean groups only");
}

// periodic multilinear interpolation of column j of a in x
cplx interp_x(const ScalarSymbol& a, const std::vector<double>& p, int j) {
  const GroupGrid& g = *a.xgrid;
  int n = g.dim();
  std::array<int, kMaxDim> lo{};
  std::array<double, kMaxDim> f{};
  for (int d = 0; d < n; ++d) {
    const Axis& ax = g.axes()[d];
    double s = (p[d] - ax.x0) / ax.h;
    double fl = std::floor(s);
    f[d] = s - fl;
    if (f[d] > 1.0 - 1e-12) {
      f[d] = 0.0;
      fl += 1.0;
    }
    long k = static_cast<long>(fl) % ax.count;
    if (k < 0) k += ax.count;
    lo[d] = static_cast<int>(k);
  }
  cplx r = 0.0;
  for (int corner = 0; corner < (1 << n); ++corner) {
    double w = 1.0;
    std::array<int, kMaxDim> k{};
    for (int d = 0; d < n; ++d) {
      int bit = (corner >> d) & 1;
      w *= bit ? f[d] : 1.0 - f[d];
      k[d] = (lo[d] + bit) % g.axes()[d].count;
    }
    if (w != 0.0) r += w * a.values(g.flat(k), j);
  }
  return r;
}

}  // namespace

ScalarSymbol::ScalarSymbol(GridPtr g, std::vector<std::vector<double>> xi_nodes)
    : xgrid(std::move(g)), xi(std::move(xi_nodes)) {
  require_euclidean(*xgrid);
  if (static_cast<int>(xi.size()) != xgrid->dim()) throw std::invalid_argument("one frequency axis per space axis");
  values = Eigen::MatrixXcd::Zero(xgrid->size(), xi_size());
}

int ScalarSymbol::xi_size() const {
  int n = 1;
  for (const auto& v : xi) n *= static_cast<int>(v.size());
  return n;
}

std::vector<double> ScalarSymbol::xi_point(int j) const {
  std::vector<double> p(xi.size());
  for (int d = static_cast<int>(xi.size()) - 1; d >= 0; --d) {
    int c = static_cast<int>(xi[d].size());
    p[d] = xi[d][j % c];
    j /= c;
  }
  return p;
}

double ScalarSymbol::xi_cell() const {
  double w = 1.0;
  for (const auto& v : xi) w *= v.size() > 1 ? v[1] - v[0] : 1.0;
  return w;
}

SampledFunction kn_oracle(const ScalarSymbol& a, const SampledFunction& u, const TauMap& tau) {
  require_same_grid(a.xgrid, u.grid);
  const GroupGrid& g = *a.xgrid;
  require_euclidean(g);
  tau.check(g.group());
  int n = g.dim(), nx = g.size(), nxi = a.xi_size();
  double dxi = a.xi_cell();
  std::vector<std::vector<double>> xis(nxi);
  for (int j = 0; j < nxi; ++j) xis[j] = a.xi_point(j);
  SampledFunction out(a.xgrid);
  std::vector<double> p(n), dxy(n);
  for (int i = 0; i < nx; ++i) {
    const Point& x = g.node(i);
    cplx acc = 0.0;
    for (int l = 0; l < nx; ++l) {
      const Point& y = g.node(l);
      for (int d = 0; d < n; ++d) {
        dxy[d] = x[d] - y[d];
        double t = y[d] - x[d];
        if (tau.name == TauMap::Name::kohn_nirenberg) t = 0.0;
        if (tau.name == TauMap::Name::euclidean_weyl) t *= 0.5;
        p[d] = x[d] + t;
      }
      cplx inner_sum = 0.0;
      for (int j = 0; j < nxi; ++j) {
        double ph = 0.0;
        for (int d = 0; d < n; ++d) ph += dxy[d] * xis[j][d];
        inner_sum += std::polar(1.0, 2.0 * std::numbers::pi * ph) * interp_x(a, p, j);
      }
      acc += inner_sum * u.values[l] * g.weight(l);
    }
    out.values[i] = acc * dxi;
  }
  return out;
}

SymbolField to_symbol_field(const ModelPtr& model, const ScalarSymbol& a) {
  require_same_grid(model->grid(), a.xgrid);
  const DualGrid& dg = model->dual();
  int n = a.xgrid->dim();
  std::vector<int> col(dg.size());
  for (int k = 0; k < dg.size(); ++k) {
    int j = 0;
    for (int d = 0; d < n; ++d) {
      const auto& v = a.xi[d];
      int c = static_cast<int>(v.size());
      double step = c > 1 ? v[1] - v[0] : 1.0;
      double s = (-dg.points[k].zeta[d] - v[0]) / step;
      long r = std::lround(s);
      if (std::abs(s - r) > 1e-6) throw std::invalid_argument("frequency grid does not match the dual grid");
      r %= c;
      if (r < 0) r += c;
      j = j * c + static_cast<int>(r);
    }
    col[k] = j;
  }
  SymbolField A = SymbolField::dense(model);
  for (int i = 0; i < a.xgrid->size(); ++i)
    for (int k = 0; k < dg.size(); ++k) A.data[i][k](0, 0) = a.values(i, col[k]);
  return A;
}

OracleComparison pipeline_vs_oracle(const ModelPtr& model, const ScalarSymbol& a, const SampledFunction& u,
                                    const TauMap& tau) {
  SampledFunction ref = kn_oracle(a, u, tau);
  SymbolField A = to_symbol_field(model, a);
  auto rel = [&](const SampledFunction& f) {
    SampledFunction d(f.grid, f.values - ref.values);
    double nr = norm(ref);
    return nr > 0 ? norm(d) / nr : norm(d);
  };
  OracleComparison c;
  c.path1 = rel(op_tau(A, tau).apply(u));
  c.path2 = rel(op_tau_direct(A, tau).apply(u));
  return c;
}

}  // namespace gq
