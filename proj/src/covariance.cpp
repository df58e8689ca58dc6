#include "gq/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

namespace {

using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// nodes whose stencil under x -> f(x) touches one of the given rows
template <class F>
RowSet moved_rows(const GroupGrid& grid, const RowSet& rs, F f) {
  if (rs.dense()) return rs;
  std::vector<int> out;
  for (int i = 0; i < grid.size(); ++i) {
    Stencil s = grid.stencil(f(grid.node(i)));
    for (int a = 0; a < s.n; ++a)
      if (rs.find(s.idx[a]) >= 0 && s.w[a] != 0.0) {
        out.push_back(i);
        break;
      }
  }
  return RowSet(grid.size(), out);
}

}  // namespace

SpMat translation_matrix(const GroupGrid& grid, const TranslationOp& t) {
  const GroupSpec& g = grid.group();
  Point zinv = inverse(g, t.z);
  double scale = t.direction == Direction::right ? std::sqrt(modular(g, t.z)) : 1.0;
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < grid.size(); ++i) {
    Point p = t.direction == Direction::left ? multiply(g, zinv, grid.node(i)) : multiply(g, grid.node(i), t.z);
    Stencil s = grid.stencil(p);
    for (int a = 0; a < s.n; ++a) trip.emplace_back(i, s.idx[a], scale * s.w[a]);
  }
  SpMat S(grid.size(), grid.size());
  S.setFromTriplets(trip.begin(), trip.end());
  return S;
}

SampledFunction left_translate(const Point& z, const SampledFunction& u) {
  return SampledFunction(u.grid, translation_matrix(*u.grid, {Direction::left, z}).cast<cplx>() * u.values);
}

SampledFunction right_translate(const Point& z, const SampledFunction& u) {
  return SampledFunction(u.grid, translation_matrix(*u.grid, {Direction::right, z}).cast<cplx>() * u.values);
}

SampledFunction conj_translate(const Point& z, const SampledFunction& u) {
  const GroupSpec& g = u.grid->group();
  Point zinv = inverse(g, z);
  double s = std::sqrt(modular(g, z));
  SampledFunction out(u.grid);
  for (int i = 0; i < u.grid->size(); ++i) out.values[i] = s * u.at(multiply(g, multiply(g, zinv, u.grid->node(i)), z));
  return out;
}

DualField ad_pi(const Model& m, const Point& z, const DualField& F) {
  DualField out(F.size());
  for (int k = 0; k < m.dual_size(); ++k) {
    Eigen::MatrixXcd R = rep_apply(m, k, z);
    out[k] = R * F[k] * R.adjoint();
  }
  return out;
}

SymbolField ad_pi(const Point& z, const SymbolField& A) {
  SymbolField out = A;
  for (auto& f : out.data) f = ad_pi(*A.model, z, f);
  return out;
}

SymbolField left_ad(const Point& z, const SymbolField& A) {
  const GroupGrid& grid = *A.model->grid();
  const GroupSpec& g = grid.group();
  Point zinv = inverse(g, z);
  auto f = [&](const Point& x) { return multiply(g, zinv, x); };
  SymbolField out(A.model, moved_rows(grid, A.rowset, f));
  SymbolField B = ad_pi(z, A);
  for (int p = 0; p < out.rowset.size(); ++p) out.data[p] = B.at(f(grid.node(out.rowset.rows[p])));
  return out;
}

GridOperator conjugate_left(const Point& z, const GridOperator& T) {
  const GroupGrid& grid = *T.grid;
  const GroupSpec& g = grid.group();
  Point zinv = inverse(g, z);
  SpMat Sz = translation_matrix(grid, {Direction::left, z});
  SpMat Szinv = translation_matrix(grid, {Direction::left, zinv});
  RowSet rs = moved_rows(grid, T.rowset, [&](const Point& x) { return multiply(g, zinv, x); });
  Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(rs.size(), grid.size());
  for (int p = 0; p < rs.size(); ++p)
    for (SpMat::InnerIterator it(Sz, rs.rows[p]); it; ++it) {
      int q = T.rowset.find(it.col());
      if (q >= 0) rows.row(p) += it.value() * T.mat.row(q);
    }
  return {T.grid, rs, rows * Szinv.cast<cplx>()};
}

namespace {

template <class F>
KernelMatrix move_kernel(const Point& z, const KernelMatrix& K, F second, double scale) {
  const GroupGrid& grid = *K.grid;
  const GroupSpec& g = grid.group();
  Point zinv = inverse(g, z);
  auto first = [&](const Point& x) { return multiply(g, zinv, x); };
  KernelMatrix out(K.grid, moved_rows(grid, K.rowset, first));
  std::vector<Point> ys(grid.size());
  for (int j = 0; j < grid.size(); ++j) ys[j] = second(grid.node(j));
  for (int p = 0; p < out.rowset.size(); ++p) {
    Point x = first(grid.node(out.rowset.rows[p]));
    for (int j = 0; j < grid.size(); ++j) out.data(p, j) = scale * K.at(x, ys[j]);
  }
  return out;
}

}  // namespace

KernelMatrix left_left(const Point& z, const KernelMatrix& K) {
  const GroupSpec& g = K.grid->group();
  Point zinv = inverse(g, z);
  return move_kernel(z, K, [&](const Point& y) { return multiply(g, zinv, y); }, 1.0);
}

KernelMatrix left_conj(const Point& z, const KernelMatrix& K) {
  const GroupSpec& g = K.grid->group();
  Point zinv = inverse(g, z);
  return move_kernel(z, K, [&](const Point& y) { return multiply(g, multiply(g, zinv, y), z); },
                     std::sqrt(modular(g, z)));
}

double covariance_defect(const SymbolField& A, const Point& z, const TauMap& tau) {
  if (A.norm() == 0.0) throw std::domain_error("covariance defect of a zero symbol is undefined");
  GridOperator lhs = conjugate_left(z, op_tau(A, tau));
  GridOperator rhs = op_tau(left_ad(z, A), tau);
  return relative_distance(lhs, rhs);
}

double wigner_covariance_defect(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                                const Point& z, const TauMap& tau, const std::vector<int>& rows) {
  SymbolField W = wig_rank_one(model, u, v, tau, rows);
  if (W.norm() == 0.0) throw std::domain_error("covariance defect of a zero symbol is undefined");
  return covariance_defect(W, z, tau);
}

double wigner_symbol_defect(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                            const Point& z, const TauMap& tau, const std::vector<int>& rows) {
  SymbolField W = wig_rank_one(model, u, v, tau, rows);
  if (W.norm() == 0.0) throw std::domain_error("covariance defect of a zero symbol is undefined");
  SymbolField rhs = left_ad(z, W);
  SymbolField lhs = wig_rank_one(model, left_translate(z, u), left_translate(z, v), tau, rhs.rowset.rows);
  return relative_distance(lhs, rhs);
}

LemmaResiduals lemma_residuals(const SymbolField& A, const SampledFunction& w, const Point& z, const TauMap& tau) {
  const Model& m = *A.model;
  LemmaResiduals r;
  KernelMatrix K = partial_inverse(A);
  KernelMatrix CK = c_tau(K, tau);
  r.upsilon = relative_distance(conjugate_left(z, upsilon(CK)), upsilon(left_left(z, CK)));
  r.change = relative_distance(left_left(z, CK), c_tau(left_conj(z, K), tau));
  DualField a = plancherel_forward(m, conj_translate(z, w));
  DualField b = ad_pi(m, z, plancherel_forward(m, w));
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  double n = dual_norm(m, b);
  r.plancherel = n > 0 ? dual_norm(m, a) / n : dual_norm(m, a);
  return r;
}

}  // namespace gq
