#include "gq/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gq {

RowSet::RowSet(int n_nodes, std::vector<int> r) : rows(std::move(r)), pos(n_nodes, -1) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (int i = 0; i < size(); ++i) {
    if (rows[i] < 0 || rows[i] >= n_nodes) throw std::out_of_range("row index outside the grid");
    pos[rows[i]] = i;
  }
}

RowSet RowSet::all(int n_nodes) {
  std::vector<int> r(n_nodes);
  for (int i = 0; i < n_nodes; ++i) r[i] = i;
  return RowSet(n_nodes, std::move(r));
}

KernelMatrix::KernelMatrix(GridPtr g, RowSet rs)
    : grid(std::move(g)), rowset(std::move(rs)), data(Eigen::MatrixXcd::Zero(rowset.size(), grid->size())) {}

KernelMatrix KernelMatrix::dense(GridPtr g) {
  int n = g->size();
  return KernelMatrix(std::move(g), RowSet::all(n));
}

KernelMatrix KernelMatrix::tensor(const SampledFunction& v, const SampledFunction& u) {
  require_same_grid(v.grid, u.grid);
  KernelMatrix K = dense(v.grid);
  K.data = v.values * u.values.transpose();
  return K;
}

cplx KernelMatrix::at(const Point& x, const Point& y) const {
  Stencil sx = grid->stencil(x);
  if (sx.n == 0) return 0.0;
  Stencil sy = grid->stencil(y);
  cplx r = 0.0;
  for (int a = 0; a < sx.n; ++a) {
    int p = rowset.find(sx.idx[a]);
    if (p < 0) continue;
    cplx row = 0.0;
    for (int b = 0; b < sy.n; ++b) row += sy.w[b] * data(p, sy.idx[b]);
    r += sx.w[a] * row;
  }
  return r;
}

double KernelMatrix::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

cplx KernelMatrix::inner(const KernelMatrix& o) const {
  require_same_grid(grid, o.grid);
  const auto& m = grid->weights();
  cplx s = 0.0;
  for (int p = 0; p < rowset.size(); ++p) {
    int q = o.rowset.find(rowset.rows[p]);
    if (q < 0) continue;
    cplx row = 0.0;
    for (int j = 0; j < grid->size(); ++j) row += m[j] * data(p, j) * std::conj(o.data(q, j));
    s += m[rowset.rows[p]] * row;
  }
  return s;
}

KernelMatrix KernelMatrix::to_rows(const RowSet& rs) const {
  KernelMatrix K(grid, rs);
  for (int p = 0; p < rs.size(); ++p) {
    int q = rowset.find(rs.rows[p]);
    if (q >= 0) K.data.row(p) = data.row(q);
  }
  return K;
}

SampledFunction GridOperator::apply(const SampledFunction& u) const {
  require_same_grid(grid, u.grid);
  SampledFunction out(grid);
  Eigen::VectorXcd r = mat * u.values;
  for (int p = 0; p < rowset.size(); ++p) out.values[rowset.rows[p]] = r[p];
  return out;
}

cplx GridOperator::hs_inner(const GridOperator& o) const {
  require_same_grid(grid, o.grid);
  const auto& m = grid->weights();
  cplx s = 0.0;
  for (int p = 0; p < rowset.size(); ++p) {
    int q = o.rowset.find(rowset.rows[p]);
    if (q < 0) continue;
    cplx row = 0.0;
    for (int j = 0; j < grid->size(); ++j) row += mat(p, j) * std::conj(o.mat(q, j)) / m[j];
    s += m[rowset.rows[p]] * row;
  }
  return s;
}

double GridOperator::hs_norm() const { return std::sqrt(std::max(0.0, hs_inner(*this).real())); }

Eigen::MatrixXcd GridOperator::dense_matrix() const {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(grid->size(), grid->size());
  for (int p = 0; p < rowset.size(); ++p) M.row(rowset.rows[p]) = mat.row(p);
  return M;
}

SymbolField::SymbolField(ModelPtr m, RowSet rs)
    : model(std::move(m)), rowset(std::move(rs)), data(rowset.size(), zero_field(*model)) {}

SymbolField SymbolField::dense(ModelPtr m) {
  int n = m->grid()->size();
  return SymbolField(std::move(m), RowSet::all(n));
}

DualField SymbolField::at(const Point& x) const {
  DualField out = zero_field(*model);
  Stencil s = model->grid()->stencil(x);
  for (int a = 0; a < s.n; ++a) {
    int p = rowset.find(s.idx[a]);
    if (p < 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += s.w[a] * data[p][k];
  }
  return out;
}

cplx SymbolField::inner(const SymbolField& o) const {
  const auto& m = model->grid()->weights();
  cplx s = 0.0;
  for (int p = 0; p < rowset.size(); ++p) {
    int q = o.rowset.find(rowset.rows[p]);
    if (q < 0) continue;
    s += m[rowset.rows[p]] * dual_inner(*model, data[p], o.data[q]);
  }
  return s;
}

double SymbolField::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

SymbolField SymbolField::to_rows(const RowSet& rs) const {
  SymbolField A(model, rs);
  for (int p = 0; p < rs.size(); ++p) {
    int q = rowset.find(rs.rows[p]);
    if (q >= 0) A.data[p] = data[q];
  }
  return A;
}

namespace {

RowSet union_rows(const RowSet& a, const RowSet& b) {
  std::vector<int> r = a.rows;
  r.insert(r.end(), b.rows.begin(), b.rows.end());
  return RowSet(static_cast<int>(a.pos.size()), r);
}

}  // namespace

double relative_distance(const KernelMatrix& a, const KernelMatrix& b) {
  RowSet u = union_rows(a.rowset, b.rowset);
  KernelMatrix x = a.to_rows(u), y = b.to_rows(u);
  double n = std::max(a.norm(), b.norm());
  x.data -= y.data;
  return n > 0 ? x.norm() / n : x.norm();
}

double relative_distance(const SymbolField& a, const SymbolField& b) {
  RowSet u = union_rows(a.rowset, b.rowset);
  SymbolField x = a.to_rows(u), y = b.to_rows(u);
  double n = std::max(a.norm(), b.norm());
  for (int p = 0; p < u.size(); ++p)
    for (std::size_t k = 0; k < x.data[p].size(); ++k) x.data[p][k] -= y.data[p][k];
  return n > 0 ? x.norm() / n : x.norm();
}

double relative_distance(const GridOperator& a, const GridOperator& b) {
  RowSet u = union_rows(a.rowset, b.rowset);
  auto lift = [&](const GridOperator& o) {
    GridOperator r{o.grid, u, Eigen::MatrixXcd::Zero(u.size(), o.grid->size())};
    for (int p = 0; p < u.size(); ++p) {
      int q = o.rowset.find(u.rows[p]);
      if (q >= 0) r.mat.row(p) = o.mat.row(q);
    }
    return r;
  };
  GridOperator x = lift(a), y = lift(b);
  double n = std::max(a.hs_norm(), b.hs_norm());
  x.mat -= y.mat;
  return n > 0 ? x.hs_norm() / n : x.hs_norm();
}

}  // namespace gq
