#include "gq/quantization.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

TauMap TauMap::parse(const std::string& text) {
  if (text == "kohn_nirenberg" || text == "kn" || text == "e") return {Name::kohn_nirenberg};
  if (text == "right" || text == "id") return {Name::right};
  if (text == "euclidean_weyl" || text == "weyl") return {Name::euclidean_weyl};
  throw std::invalid_argument("unknown tau map '" + text + "'");
}

std::string TauMap::str() const {
  switch (name) {
    case Name::kohn_nirenberg: return "kohn_nirenberg";
    case Name::right: return "right";
    case Name::euclidean_weyl: return "euclidean_weyl";
  }
  return "";
}

void TauMap::check(const GroupSpec& g) const {
  if (name == Name::euclidean_weyl && g.kind != Kind::euclidean)
    throw std::invalid_argument("euclidean_weyl needs a euclidean group, got " + g.name());
}

Point TauMap::operator()(const GroupSpec& g, const Point& x) const {
  switch (name) {
    case Name::kohn_nirenberg: return identity(g);
    case Name::right: return x;
    case Name::euclidean_weyl: {
      check(g);
      Point r = x;
      for (double& c : r) c *= 0.5;
      return r;
    }
  }
  return x;
}

GridOperator upsilon(const KernelMatrix& K) {
  return {K.grid, K.rowset, K.data * K.grid->weights().cast<cplx>().asDiagonal()};
}

KernelMatrix upsilon_inv(const GridOperator& T) {
  KernelMatrix K(T.grid, T.rowset);
  K.data = T.mat * T.grid->weights().cwiseInverse().cast<cplx>().asDiagonal();
  return K;
}

namespace {

RowSet output_rows(const RowSet& in, const TauMap& tau, int n) {
  return tau.row_preserving() ? in : RowSet::all(n);
}

}  // namespace

KernelMatrix c_tau(const KernelMatrix& K, const TauMap& tau) {
  const GroupGrid& grid = *K.grid;
  const GroupSpec& g = grid.group();
  tau.check(g);
  int n = grid.size();
  KernelMatrix out(K.grid, output_rows(K.rowset, tau, n));
  std::vector<double> dinv(n);
  std::vector<Point> yinv(n);
  for (int j = 0; j < n; ++j) {
    dinv[j] = 1.0 / std::sqrt(modular(g, grid.node(j)));
    yinv[j] = inverse(g, grid.node(j));
  }
  for (int p = 0; p < out.rowset.size(); ++p) {
    const Point& x = grid.node(out.rowset.rows[p]);
    Point xinv = inverse(g, x);
    for (int j = 0; j < n; ++j) {
      Point q = multiply(g, x, yinv[j]);
      Point first = tau.row_preserving() ? x : multiply(g, tau(g, multiply(g, grid.node(j), xinv)), x);
      out.data(p, j) = dinv[j] * K.at(first, q);
    }
  }
  return out;
}

KernelMatrix c_tau_inv(const KernelMatrix& L, const TauMap& tau) {
  const GroupGrid& grid = *L.grid;
  const GroupSpec& g = grid.group();
  tau.check(g);
  int n = grid.size();
  KernelMatrix out(L.grid, output_rows(L.rowset, tau, n));
  std::vector<Point> yinv(n), tinv(n);
  for (int j = 0; j < n; ++j) {
    yinv[j] = inverse(g, grid.node(j));
    tinv[j] = inverse(g, tau(g, yinv[j]));
  }
  for (int p = 0; p < out.rowset.size(); ++p) {
    const Point& x = grid.node(out.rowset.rows[p]);
    for (int j = 0; j < n; ++j) {
      Point first = multiply(g, tinv[j], x);
      Point w = multiply(g, yinv[j], first);
      out.data(p, j) = std::sqrt(modular(g, w)) * L.at(first, w);
    }
  }
  return out;
}

KernelMatrix partial_inverse(const SymbolField& A) {
  KernelMatrix K(A.model->grid(), A.rowset);
  for (int p = 0; p < A.rowset.size(); ++p) K.data.row(p) = plancherel_inverse_values(*A.model, A.data[p]).transpose();
  return K;
}

SymbolField partial_forward(const ModelPtr& model, const KernelMatrix& L) {
  require_same_grid(model->grid(), L.grid);
  SymbolField A(model, L.rowset);
  for (int p = 0; p < L.rowset.size(); ++p) A.data[p] = plancherel_forward(*model, Eigen::VectorXcd(L.data.row(p).transpose()));
  return A;
}

KernelMatrix kernel_of_symbol(const SymbolField& A, const TauMap& tau) { return c_tau(partial_inverse(A), tau); }

GridOperator op_tau(const SymbolField& A, const TauMap& tau) { return upsilon(kernel_of_symbol(A, tau)); }

KernelMatrix kernel_direct(const SymbolField& A, const TauMap& tau, const std::vector<int>& cols) {
  const Model& m = *A.model;
  const GroupGrid& grid = *m.grid();
  const GroupSpec& g = grid.group();
  tau.check(g);
  int n = grid.size(), nd = m.dual_size();
  // B = A D^{1/2}, so Tr(A D^{1/2} pi(x y^-1)^*) = Tr(B pi(y x^-1))
  std::vector<DualField> B(A.rowset.size());
  for (int p = 0; p < A.rowset.size(); ++p) {
    B[p].resize(nd);
    for (int k = 0; k < nd; ++k) B[p][k] = A.data[p][k] * m.dm_sqrt().cast<cplx>().asDiagonal();
  }
  KernelMatrix K(m.grid(), output_rows(A.rowset, tau, n));
  bool all = cols.empty();
  int nc = all ? n : static_cast<int>(cols.size());
  for (int p = 0; p < K.rowset.size(); ++p) {
    const Point& x = grid.node(K.rowset.rows[p]);
    Point xinv = inverse(g, x);
    for (int c = 0; c < nc; ++c) {
      int j = all ? c : cols[c];
      const Point& y = grid.node(j);
      Point z = multiply(g, y, xinv);
      Point first = multiply(g, tau(g, z), x);
      Stencil s = grid.stencil(first);
      cplx val = 0.0;
      for (int a = 0; a < s.n; ++a) {
        int r = A.rowset.find(s.idx[a]);
        if (r < 0) continue;
        cplx t = 0.0;
        for (int k = 0; k < nd; ++k) t += m.dual().weight(k) * trace_times_rep(m, k, B[r][k], z);
        val += s.w[a] * t;
      }
      K.data(p, j) = val / std::sqrt(modular(g, y));
    }
  }
  return K;
}

GridOperator op_tau_direct(const SymbolField& A, const TauMap& tau) { return upsilon(kernel_direct(A, tau)); }

SymbolField wig_tau(const ModelPtr& model, const GridOperator& T, const TauMap& tau) {
  return partial_forward(model, c_tau_inv(upsilon_inv(T), tau));
}

SymbolField wig_rank_one(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                         const TauMap& tau, const std::vector<int>& rows) {
  require_same_grid(model->grid(), u.grid);
  require_same_grid(model->grid(), v.grid);
  const GroupGrid& grid = *model->grid();
  const GroupSpec& g = grid.group();
  tau.check(g);
  int n = grid.size();
  RowSet rs = rows.empty() ? RowSet::all(n) : RowSet(n, rows);
  SymbolField W(model, rs);
  std::vector<Point> yinv(n), tinv(n);
  for (int j = 0; j < n; ++j) {
    yinv[j] = inverse(g, grid.node(j));
    tinv[j] = inverse(g, tau(g, yinv[j]));
  }
  Eigen::VectorXcd f(n);
  for (int p = 0; p < rs.size(); ++p) {
    const Point& x = grid.node(rs.rows[p]);
    for (int j = 0; j < n; ++j) {
      Point first = multiply(g, tinv[j], x);
      Point w = multiply(g, yinv[j], first);
      f[j] = std::sqrt(modular(g, w)) * v.at(first) * std::conj(u.at(w));
    }
    W.data[p] = plancherel_forward(*model, f);
  }
  return W;
}

DualGroupField symbol_hat(const SymbolField& A) {
  if (!A.rowset.dense()) throw std::invalid_argument("symbol_hat needs a dense symbol");
  const Model& m = *A.model;
  KernelMatrix k = partial_inverse(A);
  int n = m.grid()->size();
  DualGroupField out(n);
  for (int j = 0; j < n; ++j) out[j] = plancherel_forward(m, Eigen::VectorXcd(k.data.col(j)));
  return out;
}

DualGroupField fwig(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v, const TauMap& tau) {
  KernelMatrix L = c_tau_inv(KernelMatrix::tensor(v, SampledFunction(u.grid, u.values.conjugate())), tau);
  int n = model->grid()->size();
  DualGroupField out(n);
  for (int j = 0; j < n; ++j) out[j] = plancherel_forward(*model, Eigen::VectorXcd(L.data.col(j)));
  return out;
}

cplx dual_group_inner(const Model& m, const DualGroupField& a, const DualGroupField& b) {
  const auto& w = m.grid()->weights();
  cplx s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += w[j] * dual_inner(m, a[j], b[j]);
  return s;
}

SampledFunction sch(const KernelMatrix& K, const SampledFunction& v, const TauMap& tau) {
  require_same_grid(K.grid, v.grid);
  const GroupGrid& grid = *K.grid;
  const GroupSpec& g = grid.group();
  tau.check(g);
  int n = grid.size();
  RowSet rs = output_rows(K.rowset, tau, n);
  SampledFunction out(K.grid);
  for (int p = 0; p < rs.size(); ++p) {
    const Point& x = grid.node(rs.rows[p]);
    Point xinv = inverse(g, x);
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) {
      const Point& y = grid.node(j);
      Point first = tau.row_preserving() ? x : multiply(g, tau(g, multiply(g, y, xinv)), x);
      cplx kv = K.at(first, multiply(g, x, inverse(g, y))) / std::sqrt(modular(g, y));
      s += kv * v.values[j] * grid.weight(j);
    }
    out.values[rs.rows[p]] = s;
  }
  return out;
}

double duality_residual(const SymbolField& A, const SampledFunction& u, const SampledFunction& v, const TauMap& tau) {
  double na = A.norm(), nu = norm(u), nv = norm(v);
  if (na == 0.0 || nu == 0.0 || nv == 0.0) throw std::domain_error("duality residual of a zero input is undefined");
  cplx lhs = inner(op_tau(A, tau).apply(u), v);
  SymbolField W = wig_rank_one(A.model, u, v, tau, A.rowset.rows);
  cplx rhs = A.inner(W);
  return std::abs(lhs - rhs) / (na * nu * nv);
}

}  // namespace gq
