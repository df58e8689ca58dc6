#include "gq/dual.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double RepSpace::weight(int i) const {
  switch (kind) {
    case Kind::scalar: return 1.0;
    case Kind::log_line: return std::exp(t(i)) * h;
    case Kind::line: return h;
  }
  return 1.0;
}

ModelParams ModelParams::refined() const {
  ModelParams r = *this;
  for (auto& a : r.axes) a = a.refined();
  const double s2 = std::sqrt(2.0);
  if (t_explicit) {
    r.t_min = t_min * s2;
    r.t_max = t_max * s2;
  }
  r.t_span = t_span * s2;
  r.dual_count = 2 * dual_count;
  r.lambda_max = lambda_max * s2;
  return r;
}

Eigen::Vector2d cross_section(const GroupSpec& g, int layer, double lambda) {
  if (g.kind != Kind::bianchi) throw std::invalid_argument("cross_section is defined for bianchi groups");
  switch (g.family) {
    case Family::IV:
      if (lambda == 0.0) throw std::domain_error("bianchi(IV): lambda must be nonzero");
      return {lambda > 0 ? 1.0 : -1.0, lambda};
    case Family::V: return {std::cos(2 * kPi * lambda), std::sin(2 * kPi * lambda)};
    case Family::VI: {
      if (!(lambda > 0)) throw std::domain_error("bianchi(VI): lambda must be positive");
      static const double e1[4] = {1, -1, -1, 1};
      static const double e2[4] = {1, 1, -1, -1};
      if (layer < 0 || layer > 3) throw std::domain_error("bianchi(VI): component index out of range");
      return {e1[layer], e2[layer] * lambda};
    }
    case Family::VII: {
      double lo = std::exp(-g.param * kPi), hi = std::exp(g.param * kPi);
      if (!(lambda > lo && lambda < hi)) throw std::domain_error("bianchi(VII): lambda outside (e^{-p pi}, e^{p pi})");
      if ((layer == 0 && lambda > 1.0) || (layer == 1 && lambda < 1.0))
        throw std::domain_error("bianchi(VII): lambda not in the component");
      return {lambda, 0.0};
    }
  }
  return {0, 0};
}

namespace {

// signed distance-like function whose zero set (restricted by the side test)
// is the transversal of the given layer
bool on_side(const GroupSpec& g, int layer, const Eigen::Vector2d& s) {
  switch (g.family) {
    case Family::IV: return layer == 1 ? s[1] > 0 : s[1] < 0;
    case Family::V: return true;
    case Family::VI: {
      static const double e1[4] = {1, -1, -1, 1};
      static const double e2[4] = {1, 1, -1, -1};
      return s[0] * e1[layer] > 0 && s[1] * e2[layer] > 0;
    }
    case Family::VII: {
      double r = s[0];
      double lo = std::exp(-g.param * kPi), hi = std::exp(g.param * kPi);
      return layer == 0 ? (r > lo && r <= 1.0) : (r >= 1.0 && r < hi);
    }
  }
  return false;
}

double level_fn(const GroupSpec& g, int layer, const Eigen::Vector2d& s) {
  switch (g.family) {
    case Family::IV: return s[0] - (layer == 1 ? 1.0 : -1.0);
    case Family::V: return s.norm() - 1.0;
    case Family::VI: {
      static const double e1[4] = {1, -1, -1, 1};
      return s[0] - e1[layer];
    }
    case Family::VII: return s[1];
  }
  return 0.0;
}

}  // namespace

int count_transversal_crossings(const GroupSpec& g, int layer, const Eigen::Vector2d& sigma0, double t_max,
                                double dt) {
  Eigen::Matrix2d A = -g.m_matrix().transpose();
  auto f = [&](const Eigen::Vector2d& s) -> Eigen::Vector2d { return A * s; };
  auto integrate = [&](double dir) {
    int crossings = 0;
    Eigen::Vector2d s = sigma0;
    double h = dir * dt;
    int steps = static_cast<int>(std::ceil(t_max / dt));
    double prev = level_fn(g, layer, s);
    for (int n = 0; n < steps; ++n) {
      Eigen::Vector2d k1 = f(s), k2 = f(s + 0.5 * h * k1), k3 = f(s + 0.5 * h * k2), k4 = f(s + h * k3);
      Eigen::Vector2d next = s + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
      double cur = level_fn(g, layer, next);
      if ((prev < 0) != (cur < 0) || cur == 0.0) {
        double frac = prev / (prev - cur);
        Eigen::Vector2d hit = s + frac * (next - s);
        if (on_side(g, layer, hit)) ++crossings;
      }
      prev = cur;
      s = next;
      if (!std::isfinite(s[0]) || s.norm() > 1e12 || s.norm() < 1e-12) break;
    }
    return crossings;
  };
  int c = integrate(1.0) + integrate(-1.0);
  if (std::abs(level_fn(g, layer, sigma0)) < 1e-14 && on_side(g, layer, sigma0)) ++c;
  return c;
}

DualGrid euclidean_dual(const std::vector<Axis>& axes) {
  DualGrid dg;
  int n = static_cast<int>(axes.size());
  std::vector<int> cnt(n);
  int total = 1;
  double w = 1.0;
  for (int a = 0; a < n; ++a) {
    cnt[a] = axes[a].count;
    total *= cnt[a];
    w /= axes[a].period();
  }
  for (int t = 0; t < total; ++t) {
    DualPoint p;
    int r = t;
    for (int a = n - 1; a >= 0; --a) {
      int j = r % cnt[a];
      r /= cnt[a];
      int m = j - cnt[a] / 2;
      p.zeta[a] = m / axes[a].period();
    }
    p.nzeta = n;
    p.base_weight = w;
    dg.points.push_back(p);
  }
  dg.layer_names = {"R^" + std::to_string(n)};
  return dg;
}

DualGrid affine_dual() {
  DualGrid dg;
  for (int s = 0; s < 2; ++s) {
    DualPoint p;
    p.layer = s;
    p.sign = s == 0 ? 1.0 : -1.0;
    p.base_weight = 1.0;
    dg.points.push_back(p);
  }
  dg.layer_names = {"+", "-"};
  return dg;
}

DualGrid bianchi_dual(const GroupSpec& g, int count, double lambda_max) {
  if (count < 1) throw std::invalid_argument("dual count must be positive");
  DualGrid dg;
  auto add = [&](int layer, double lam, double cell, double gamma, int cls) {
    DualPoint p;
    p.layer = layer;
    p.lambda = lam;
    p.sigma = cross_section(g, layer, lam);
    p.base_weight = gamma * cell;
    p.kappa_class = cls;
    dg.points.push_back(p);
  };
  switch (g.family) {
    case Family::V: {
      double dl = 1.0 / count;
      for (int j = 0; j < count; ++j) add(0, (j + 0.5) * dl, dl, 1.0, 0);
      dg.layer_names = {"T"};
      break;
    }
    case Family::IV: {
      double dl = lambda_max / count;
      for (int j = 0; j < count; ++j) {
        double lam = -lambda_max + (j + 0.5) * dl;
        add(0, lam, dl, 1.0 + std::abs(lam), 0);
      }
      for (int j = 0; j < count; ++j) {
        double lam = (j + 0.5) * dl;
        add(1, lam, dl, 1.0 + std::abs(lam), 0);
      }
      dg.layer_names = {"lambda<0", "lambda>0"};
      break;
    }
    case Family::VI: {
      double dl = lambda_max / count;
      double q = std::abs(g.param);
      for (int c = 0; c < 4; ++c) {
        int idx = c + 1;
        double gamma = (idx % 2) ? q : 1.0;
        for (int j = 0; j < count; ++j) add(c, (j + 0.5) * dl, dl, gamma, idx % 2);
      }
      dg.kappa = {1.0, 1.0};
      dg.layer_names = {"1", "2", "3", "4"};
      break;
    }
    case Family::VII: {
      double lo = std::exp(-g.param * kPi), hi = std::exp(g.param * kPi);
      double d0 = (1.0 - lo) / count, d1 = (hi - 1.0) / count;
      for (int j = 0; j < count; ++j) {
        double lam = lo + (j + 0.5) * d0;
        add(0, lam, d0, lam, 0);
      }
      for (int j = 0; j < count; ++j) {
        double lam = 1.0 + (j + 0.5) * d1;
        add(1, lam, d1, lam, 0);
      }
      dg.layer_names = {"(e^-p pi,1]", "[1,e^p pi)"};
      break;
    }
  }
  return dg;
}

DualGrid product_dual(const DualGrid& a, const DualGrid& b) {
  DualGrid dg;
  int nb_layers = std::max<int>(1, static_cast<int>(b.layer_names.size()));
  for (const auto& pa : a.points) {
    for (const auto& pb : b.points) {
      DualPoint p = pa;
      p.layer = pa.layer * nb_layers + pb.layer;
      if (pa.nzeta + pb.nzeta > kMaxDim) throw std::invalid_argument("product dual too large");
      for (int i = 0; i < pb.nzeta; ++i) p.zeta[pa.nzeta + i] = pb.zeta[i];
      p.nzeta = pa.nzeta + pb.nzeta;
      p.base_weight = pa.base_weight * pb.base_weight;
      p.kappa_class = pa.kappa_class * b.kappa_classes() + pb.kappa_class;
      dg.points.push_back(p);
    }
  }
  dg.kappa.assign(a.kappa_classes() * b.kappa_classes(), 1.0);
  for (int i = 0; i < a.kappa_classes(); ++i)
    for (int j = 0; j < b.kappa_classes(); ++j) dg.kappa[i * b.kappa_classes() + j] = a.kappa[i] * b.kappa[j];
  for (const auto& la : a.layer_names)
    for (const auto& lb : b.layer_names) dg.layer_names.push_back(la + "x" + lb);
  return dg;
}

double theoretical_kappa(const GroupSpec& g, int kappa_class) {
  switch (g.kind) {
    case Kind::euclidean:
    case Kind::affine:
    case Kind::affine_line: return 1.0;
    case Kind::bianchi: break;
  }
  const double four_pi2 = 4 * kPi * kPi;
  switch (g.family) {
    case Family::V: return 2 * kPi / four_pi2;
    case Family::VI: return kappa_class == 1 ? 1.0 / (four_pi2 * std::abs(g.param)) : 1.0 / four_pi2;
    default: return 1.0 / four_pi2;
  }
}

Model::Model(GroupGrid grid, RepSpace rep, DualGrid dual)
    : grid_(std::make_shared<GroupGrid>(std::move(grid))), rep_(rep), dual_(std::move(dual)) {
  const GroupSpec& g = grid_->group();
  switch (g.kind) {
    case Kind::euclidean:
      for (int a = 0; a < g.n; ++a) trans_axes_.push_back(a);
      break;
    case Kind::affine:
      shift_axis_ = 0;
      trans_axes_ = {1};
      break;
    case Kind::affine_line:
      shift_axis_ = 0;
      trans_axes_ = {1, 2};
      break;
    case Kind::bianchi:
      shift_axis_ = 2;
      trans_axes_ = {0, 1};
      break;
  }
  if (shift_axis_ >= 0) {
    const Axis& ax = grid_->axes()[shift_axis_];
    if (std::abs(ax.h - rep_.h) > 1e-12 * rep_.h)
      throw std::invalid_argument("shift axis spacing must equal the representation t spacing");
    if (!ax.anchored()) throw std::invalid_argument("shift axis must contain the identity coordinate");
  }
  dm_.resize(rep_.d);
  for (int i = 0; i < rep_.d; ++i) {
    switch (rep_.kind) {
      case RepSpace::Kind::scalar: dm_[i] = 1.0; break;
      case RepSpace::Kind::log_line: dm_[i] = std::exp(rep_.t(i)); break;
      case RepSpace::Kind::line: dm_[i] = std::exp(-rep_.t(i) * g.trace_m()); break;
    }
  }
  dm_sqrt_ = dm_.cwiseSqrt();
}

void Model::set_kappa(const std::vector<double>& k) {
  if (static_cast<int>(k.size()) != dual_.kappa_classes()) throw std::invalid_argument("kappa class count mismatch");
  for (double v : k)
    if (!(v > 0)) throw std::invalid_argument("kappa must be positive");
  dual_.kappa = k;
}

void Model::eta(int k, int i, double* out) const {
  const DualPoint& p = dual_.points[k];
  const GroupSpec& g = group();
  switch (g.kind) {
    case Kind::euclidean:
      for (int a = 0; a < g.n; ++a) out[a] = 2 * kPi * p.zeta[a];
      break;
    case Kind::affine: out[0] = 2 * kPi * p.sign * std::exp(rep_.t(i)); break;
    case Kind::affine_line:
      out[0] = 2 * kPi * p.sign * std::exp(rep_.t(i));
      out[1] = 2 * kPi * p.zeta[0];
      break;
    case Kind::bianchi: {
      Eigen::Vector2d e = g.exp_m(-rep_.t(i)).transpose() * p.sigma;
      out[0] = e[0];
      out[1] = e[1];
      break;
    }
  }
}

cplx Model::phase(int k, int i, const Point& x) const {
  double e[kMaxDim];
  eta(k, i, e);
  double s = 0.0;
  for (std::size_t a = 0; a < trans_axes_.size(); ++a) s += e[a] * x[trans_axes_[a]];
  return std::polar(1.0, s);
}

double Model::shift(const Point& x) const {
  switch (group().kind) {
    case Kind::euclidean: return 0.0;
    case Kind::affine:
    case Kind::affine_line: return std::log(x[0]) / rep_.h;
    case Kind::bianchi: return -x[2] / rep_.h;
  }
  return 0.0;
}

long Model::shift_offset(int s) const {
  if (shift_axis_ < 0) return 0;
  long k = grid_->axes()[shift_axis_].kmin() + s;
  return group().kind == Kind::bianchi ? -k : k;
}

namespace {

ModelPtr make_model(const ModelParams& p) {
  const GroupSpec& g = p.group;
  GroupGrid grid(g, p.axes);
  RepSpace rep;
  DualGrid dual;
  auto window = [&](double h, double lo, double hi) {
    rep.h = h;
    long a = static_cast<long>(std::ceil(lo / h - 1e-9));
    long b = static_cast<long>(std::floor(hi / h + 1e-9));
    if (b < a) throw std::invalid_argument("empty representation window");
    rep.i0 = a;
    rep.d = static_cast<int>(b - a + 1);
  };
  switch (g.kind) {
    case Kind::euclidean:
      dual = euclidean_dual(p.axes);
      break;
    case Kind::affine:
    case Kind::affine_line: {
      rep.kind = RepSpace::Kind::log_line;
      double h = p.axes[0].h;
      double tmax = p.t_explicit ? p.t_max : std::log(0.5 / p.axes[1].h) - p.t_margin;
      double tmin = p.t_explicit ? p.t_min : tmax - p.t_span;
      window(h, tmin, tmax);
      dual = affine_dual();
      if (g.kind == Kind::affine_line) dual = product_dual(dual, euclidean_dual({p.axes[2]}));
      break;
    }
    case Kind::bianchi: {
      rep.kind = RepSpace::Kind::line;
      double h = p.axes[2].h;
      double hab = std::max(p.axes[0].h, p.axes[1].h);
      double tmin = p.t_explicit ? p.t_min : -std::log(kPi / hab) + p.t_margin;
      double tmax = p.t_explicit ? p.t_max : tmin + p.t_span;
      window(h, tmin, tmax);
      dual = bianchi_dual(g, p.dual_count, p.lambda_max);
      break;
    }
  }
  return std::make_shared<Model>(std::move(grid), rep, std::move(dual));
}

}  // namespace

ModelPtr build_model(const ModelParams& p) { return make_model(p); }

Eigen::MatrixXcd rep_apply(const Model& m, int k, const Point& x) {
  int d = m.d();
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(d, d);
  double sh = m.shift(x);
  double r = std::round(sh);
  double alpha = m.shift_alpha(), h = m.rep().h;
  for (int i = 0; i < d; ++i) {
    cplx ph = m.phase(k, i, x);
    if (std::abs(sh - r) < 1e-9) {
      long j = i + static_cast<long>(r);
      if (j >= 0 && j < d) R(i, j) = ph;
    } else {
      long k0 = static_cast<long>(std::floor(sh));
      double f = sh - k0;
      long j0 = i + k0, j1 = j0 + 1;
      if (j0 >= 0 && j0 < d) R(i, j0) = ph * (1.0 - f) * std::exp(alpha * f * h);
      if (j1 >= 0 && j1 < d) R(i, j1) = ph * f * std::exp(alpha * (f - 1.0) * h);
    }
  }
  return R;
}

double semi_invariance_residual(const Model& m, const Point& z) {
  int d = m.d();
  double sh = m.shift(z);
  long lo = static_cast<long>(std::floor(sh)), hi = static_cast<long>(std::ceil(sh));
  std::vector<int> keep;
  for (int i = 0; i < d; ++i)
    if (i + lo >= 0 && i + hi < d) keep.push_back(i);
  if (keep.empty()) throw std::invalid_argument("translation moves the whole rep window out of range");
  double dinv = 1.0 / modular(m.group(), z);
  double worst = 0.0;
  for (int k = 0; k < m.dual_size(); ++k) {
    Eigen::MatrixXcd R = rep_apply(m, k, z);
    Eigen::MatrixXcd lhs = R * m.dm().cast<cplx>().asDiagonal() * R.adjoint();
    double num = 0.0, den = 0.0;
    for (int i : keep)
      for (int j : keep) {
        cplx rhs = i == j ? cplx(dinv * m.dm()[i]) : cplx(0.0);
        num += std::norm(lhs(i, j) - rhs);
        den += std::norm(rhs);
      }
    worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

Eigen::VectorXd duflo_moore(const Model& m, int) { return m.dm(); }

Eigen::MatrixXcd to_kernel_convention(const Model& m, const Eigen::MatrixXcd& coeff) {
  Eigen::MatrixXcd T = coeff;
  for (int i = 0; i < m.d(); ++i)
    for (int j = 0; j < m.d(); ++j) T(i, j) /= std::sqrt(m.rep().weight(i) * m.rep().weight(j));
  return T;
}

Eigen::MatrixXcd from_kernel_convention(const Model& m, const Eigen::MatrixXcd& kernel) {
  Eigen::MatrixXcd C = kernel;
  for (int i = 0; i < m.d(); ++i)
    for (int j = 0; j < m.d(); ++j) C(i, j) *= std::sqrt(m.rep().weight(i) * m.rep().weight(j));
  return C;
}

cplx trace_times_rep(const Model& m, int k, const Eigen::MatrixXcd& B, const Point& z) {
  // Tr(B pi(z)) = sum_i B(j, i) pi(i, j)
  int d = m.d();
  double sh = m.shift(z);
  double r = std::round(sh);
  cplx s = 0.0;
  if (std::abs(sh - r) < 1e-9) {
    long kk = static_cast<long>(r);
    long lo = std::max<long>(0, -kk), hi = std::min<long>(d, d - kk);
    for (long i = lo; i < hi; ++i) s += B(i + kk, i) * m.phase(k, static_cast<int>(i), z);
    return s;
  }
  double alpha = m.shift_alpha(), h = m.rep().h;
  long k0 = static_cast<long>(std::floor(sh));
  double f = sh - k0;
  double c0 = (1.0 - f) * std::exp(alpha * f * h), c1 = f * std::exp(alpha * (f - 1.0) * h);
  for (int i = 0; i < d; ++i) {
    long j0 = i + k0, j1 = j0 + 1;
    cplx acc = 0.0;
    if (j0 >= 0 && j0 < d) acc += c0 * B(j0, i);
    if (j1 >= 0 && j1 < d) acc += c1 * B(j1, i);
    if (acc != cplx(0.0)) s += acc * m.phase(k, i, z);
  }
  return s;
}

}  // namespace gq
