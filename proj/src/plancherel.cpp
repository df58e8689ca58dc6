#include "gq/plancherel.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

const PlancherelPlan& Model::plan() const {
  if (!plan_) plan_ = std::make_shared<PlancherelPlan>(*this);
  return *plan_;
}

PlancherelPlan::PlancherelPlan(const Model& m) {
  const GroupGrid& G = *m.grid();
  int sa = m.shift_axis();
  ns_ = sa >= 0 ? G.axes()[sa].count : 1;
  for (int a : m.trans_axes()) {
    const Axis& ax = G.axes()[a];
    dims_.push_back(ax.count);
    std::vector<double> c(ax.count);
    for (int i = 0; i < ax.count; ++i) c[i] = ax.coord(i);
    coords_.push_back(std::move(c));
  }
  int T = 1;
  for (int n : dims_) T *= n;
  perm_.resize(static_cast<std::size_t>(ns_) * T);
  for (int s = 0; s < ns_; ++s) {
    for (int t = 0; t < T; ++t) {
      std::array<int, kMaxDim> k{};
      if (sa >= 0) k[sa] = s;
      int r = t;
      for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
        k[m.trans_axes()[a]] = r % dims_[a];
        r /= dims_[a];
      }
      perm_[static_cast<std::size_t>(s) * T + t] = G.flat(k);
    }
  }
  offsets_.resize(ns_);
  for (int s = 0; s < ns_; ++s) offsets_[s] = m.shift_offset(s);
}

void PlancherelPlan::exps(const Model& m, int k, int i, std::vector<Eigen::VectorXcd>& E) const {
  double eta[kMaxDim];
  m.eta(k, i, eta);
  E.resize(dims_.size());
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    E[a].resize(dims_[a]);
    for (int j = 0; j < dims_[a]; ++j) E[a][j] = std::polar(1.0, eta[a] * coords_[a][j]);
  }
}

DualField PlancherelPlan::forward_weighted(const Model& m, const Eigen::VectorXcd& mw) const {
  int d = m.d();
  int N = static_cast<int>(perm_.size());
  Eigen::VectorXcd X(N);
  for (int p = 0; p < N; ++p) X[p] = mw[perm_[p]];
  DualField F(m.dual_size(), Eigen::MatrixXcd::Zero(d, d));
  std::vector<Eigen::VectorXcd> E;
  Eigen::VectorXcd cur, next;
  const auto& ds = m.dm_sqrt();
  for (int k = 0; k < m.dual_size(); ++k) {
    for (int i = 0; i < d; ++i) {
      bool any = false;
      for (int s = 0; s < ns_ && !any; ++s) {
        long j = i + offsets_[s];
        any = j >= 0 && j < d;
      }
      if (!any) continue;
      exps(m, k, i, E);
      const Eigen::VectorXcd* src = &X;
      int len = N;
      for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
        int n = dims_[a];
        Eigen::Map<const RowMat> view(src->data(), len / n, n);
        next.noalias() = view * E[a];
        cur.swap(next);
        src = &cur;
        len /= n;
      }
      for (int s = 0; s < ns_; ++s) {
        long j = i + offsets_[s];
        if (j >= 0 && j < d) F[k](i, j) = (*src)[s] * ds[j];
      }
    }
  }
  return F;
}

Eigen::VectorXcd PlancherelPlan::adjoint(const Model& m, const DualField& F) const {
  int d = m.d();
  int N = static_cast<int>(perm_.size());
  if (static_cast<int>(F.size()) != m.dual_size()) throw std::invalid_argument("dual field size mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(N);
  std::vector<Eigen::VectorXcd> E;
  Eigen::VectorXcd g(ns_), cur, next;
  const auto& ds = m.dm_sqrt();
  for (int k = 0; k < m.dual_size(); ++k) {
    double nu = m.dual().weight(k);
    for (int i = 0; i < d; ++i) {
      bool any = false;
      for (int s = 0; s < ns_; ++s) {
        long j = i + offsets_[s];
        g[s] = (j >= 0 && j < d) ? nu * F[k](i, j) * ds[j] : cplx(0.0);
        any = any || g[s] != cplx(0.0);
      }
      if (!any) continue;
      exps(m, k, i, E);
      cur = g;
      int len = ns_;
      int na = static_cast<int>(dims_.size());
      for (int a = 0; a < na - 1; ++a) {
        int n = dims_[a];
        next.resize(static_cast<Eigen::Index>(len) * n);
        Eigen::Map<RowMat> view(next.data(), len, n);
        view.noalias() = cur * E[a].conjugate().transpose();
        cur.swap(next);
        len *= n;
      }
      if (na == 0) {
        out += cur;
      } else {
        int n = dims_[na - 1];
        Eigen::Map<RowMat> view(out.data(), len, n);
        view.noalias() += cur * E[na - 1].conjugate().transpose();
      }
    }
  }
  Eigen::VectorXcd res(N);
  for (int p = 0; p < N; ++p) res[perm_[p]] = out[p];
  return res;
}

DualField plancherel_forward(const Model& m, const Eigen::VectorXcd& values) {
  if (values.size() != m.grid()->size()) throw std::invalid_argument("sample count does not match grid");
  Eigen::VectorXcd mw = values.cwiseProduct(m.grid()->weights().cast<cplx>());
  return m.plan().forward_weighted(m, mw);
}

DualField plancherel_forward(const Model& m, const SampledFunction& w) {
  require_same_grid(w.grid, m.grid());
  return plancherel_forward(m, w.values);
}

Eigen::MatrixXcd fourier_op(const Model& m, int k, const SampledFunction& w) {
  if (k < 0 || k >= m.dual_size()) throw std::out_of_range("dual index");
  DualField F = plancherel_forward(m, w);
  return F[k] * m.dm_sqrt().cwiseInverse().asDiagonal();
}

Eigen::VectorXcd plancherel_inverse_values(const Model& m, const DualField& F) { return m.plan().adjoint(m, F); }

SampledFunction plancherel_inverse(const Model& m, const DualField& F) {
  return SampledFunction(m.grid(), plancherel_inverse_values(m, F));
}

DualField zero_field(const Model& m) { return DualField(m.dual_size(), Eigen::MatrixXcd::Zero(m.d(), m.d())); }

cplx dual_inner(const Model& m, const DualField& a, const DualField& b) {
  cplx s = 0.0;
  for (int k = 0; k < m.dual_size(); ++k) s += m.dual().weight(k) * (a[k].array() * b[k].array().conjugate()).sum();
  return s;
}

double dual_norm(const Model& m, const DualField& a) {
  double s = 0.0;
  for (int k = 0; k < m.dual_size(); ++k) s += m.dual().weight(k) * a[k].squaredNorm();
  return std::sqrt(s);
}

Calibration calibrate(Model& m, const std::vector<SampledFunction>& tests) {
  int nc = m.dual().kappa_classes();
  if (tests.size() < 3) throw std::invalid_argument("calibration needs at least 3 test functions");
  int nt = static_cast<int>(tests.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nt, nc);
  Eigen::VectorXd n2(nt);
  for (int f = 0; f < nt; ++f) {
    n2[f] = std::pow(norm(tests[f]), 2);
    if (!(n2[f] > 0)) throw std::invalid_argument("degenerate (zero) calibration test function");
    DualField F = plancherel_forward(m, tests[f]);
    for (int k = 0; k < m.dual_size(); ++k) {
      const DualPoint& p = m.dual().points[k];
      A(f, p.kappa_class) += p.base_weight * F[k].squaredNorm() / n2[f];
    }
  }
  Eigen::VectorXd kappa = A.colPivHouseholderQr().solve(Eigen::VectorXd::Ones(nt));
  Calibration c;
  for (int i = 0; i < nc; ++i) {
    if (!(kappa[i] > 0)) throw std::runtime_error("calibration produced a non-positive kappa");
    c.kappa.push_back(kappa[i]);
  }
  m.set_kappa(c.kappa);
  Eigen::VectorXd r = A * kappa - Eigen::VectorXd::Ones(nt);
  for (int f = 0; f < nt; ++f) c.residuals.push_back(std::abs(r[f]));
  return c;
}

double parseval_residual(const Model& m, const SampledFunction& w) {
  double n2 = std::pow(norm(w), 2);
  double s = std::pow(dual_norm(m, plancherel_forward(m, w)), 2);
  return std::abs(n2 - s) / n2;
}

}  // namespace gq
