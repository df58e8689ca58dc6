#include "gq/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "gq/covariance.hpp"
#include "gq/oracle.hpp"

namespace gq {

namespace {

cplx complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double re = n(rng);
  double im = n(rng);
  return {re, im};
}

double rel(double num, double den) { return den > 0 ? num / den : num; }

double relative_error(const SampledFunction& a, const SampledFunction& b) {
  SampledFunction d(a.grid, a.values - b.values);
  return rel(norm(d), norm(b));
}

// everything a check needs to emit rows
struct Sink {
  Report& report;
  const RunConfig& c;
  std::string check;
  std::string group;
  std::vector<std::string> refine_metrics;

  void exact(int level, const std::string& metric, double v) { report.add(check, group, level, metric, v, c.tol.exact); }
  void info(int level, const std::string& metric, double v) { report.add(check, group, level, metric, v, std::nullopt); }
  // refinement-limited unless the config is shift-exact
  void refine(int level, const std::string& metric, double v) {
    report.add(check, group, level, metric, v, c.shift_exact ? c.tol.exact : c.tol.base);
    if (std::find(refine_metrics.begin(), refine_metrics.end(), metric) == refine_metrics.end())
      refine_metrics.push_back(metric);
  }
  void finish() {
    if (c.levels < 2) return;
    for (const auto& m : refine_metrics) report.add_decay(check, group, m, c.tol.decay, c.tol.floor);
  }
};

std::string tag(const std::string& metric, const TauMap& t) { return metric + "_" + t.str(); }

using LevelFn = std::function<void(Sink&, const Level&, std::mt19937_64&)>;

Report run_levels(const RunConfig& c, const std::string& check, const LevelFn& fn) {
  Report r;
  Sink sink{r, c, check, c.model.group.name(), {}};
  for (int l = 0; l < c.levels; ++l) {
    Level lv = make_level(c, l);
    std::mt19937_64 rng(c.seed);
    fn(sink, lv, rng);
  }
  sink.finish();
  return r;
}

void require_tests(const RunConfig& c, std::size_t n, const std::string& check) {
  if (c.tests.size() < n) throw ConfigError("/tests: " + check + " needs at least " + std::to_string(n) + " test functions");
}

// ---- checks ----

void calibrate_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const Model& m = *l.model;
  double worst = 0.0;
  for (double r : l.calibration->residuals) worst = std::max(worst, r);
  s.refine(l.index, "parseval", worst);
  for (int k = 0; k < m.dual().kappa_classes(); ++k) {
    s.info(l.index, "kappa_c" + std::to_string(k), m.dual().kappa[k]);
    s.info(l.index, "kappa_over_theory_c" + std::to_string(k), m.dual().kappa[k] / theoretical_kappa(m.group(), k));
  }
  if (m.group().kind == Kind::bianchi) {
    // every generic coadjoint orbit meets the union of the transversals once
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi), rad(0.3, 3.0);
    int worst_count = 0;
    int layers = static_cast<int>(m.dual().layer_names.size());
    for (int t = 0; t < 24; ++t) {
      double th = ang(rng), r = rad(rng);
      Eigen::Vector2d s0(r * std::cos(th), r * std::sin(th));
      int hits = 0;
      for (int layer = 0; layer < layers; ++layer) hits += count_transversal_crossings(m.group(), layer, s0, 30.0);
      worst_count = std::max(worst_count, std::abs(hits - 1));
    }
    s.exact(l.index, "transversal_defect", worst_count);
  }
}

void plancherel_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const Model& m = *l.model;
  double worst = 0.0, inv = 0.0;
  for (const auto& w : l.tests) worst = std::max(worst, parseval_residual(m, w));
  for (int i = 0; i < s.c.samples; ++i) {
    SampledFunction w = random_function(l, rng);
    worst = std::max(worst, parseval_residual(m, w));
    inv = std::max(inv, relative_error(plancherel_inverse(m, plancherel_forward(m, w)), w));
  }
  s.refine(l.index, "parseval", worst);
  s.info(l.index, "inversion", inv);
  for (int k = 0; k < m.dual().kappa_classes(); ++k) s.info(l.index, "kappa_c" + std::to_string(k), m.dual().kappa[k]);
}

void semiinvariance_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const Model& m = *l.model;
  const GroupSpec& g = m.group();
  auto zs = z_points(s.c, *m.grid(), rng);
  if (zs.empty()) throw ConfigError("/random_z: check-semiinvariance needs z points");
  double worst = 0.0, hom = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    worst = std::max(worst, semi_invariance_residual(m, zs[i]));
    const Point& w = zs[(i + 1) % zs.size()];
    double lhs = modular(g, multiply(g, zs[i], w)), rhs = modular(g, zs[i]) * modular(g, w);
    hom = std::max(hom, std::abs(lhs - rhs) / rhs);
  }
  s.info(l.index, "z_count", static_cast<double>(zs.size()));
  s.exact(l.index, "semi_invariance", worst);
  s.exact(l.index, "modular_homomorphism", hom);
}

void duality_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const ModelPtr& m = l.model;
  bool euclid = m->group().kind == Kind::euclidean;
  for (const auto& tau : s.c.taus) {
    double worst = 0.0, fw = 0.0, sesq = 0.0;
    for (int i = 0; i < s.c.samples; ++i) {
      SymbolField A = random_symbol(s.c, l, rng);
      SampledFunction u = random_function(l, rng), v = random_function(l, rng);
      worst = std::max(worst, duality_residual(A, u, v, tau));
      if (euclid && A.rowset.dense()) {
        cplx lhs = inner(op_tau(A, tau).apply(u), v);
        cplx rhs = dual_group_inner(*m, symbol_hat(A), fwig(m, u, v, tau));
        fw = std::max(fw, std::abs(lhs - rhs) / (A.norm() * norm(u) * norm(v)));
        // Wig is linear in v and antilinear in u
        cplx c1 = complex_normal(rng);
        SampledFunction u2(u.grid, c1 * u.values), w = random_function(l, rng);
        SampledFunction vw(v.grid, v.values + w.values);
        SymbolField a = wig_rank_one(m, u2, vw, tau), b = wig_rank_one(m, u, v, tau), c = wig_rank_one(m, u, w, tau);
        for (int p = 0; p < b.rowset.size(); ++p)
          for (std::size_t k = 0; k < b.data[p].size(); ++k) b.data[p][k] = std::conj(c1) * (b.data[p][k] + c.data[p][k]);
        sesq = std::max(sesq, relative_distance(a, b));
      }
    }
    s.refine(l.index, tag("duality", tau), worst);
    if (euclid) {
      s.refine(l.index, tag("fwig_duality", tau), fw);
      s.exact(l.index, tag("sesquilinearity", tau), sesq);
    }
  }
}

// columns carrying most of the kernel mass, for the sampled path comparison
std::vector<int> heavy_columns(const KernelMatrix& K, int limit) {
  int n = K.grid->size();
  if (n <= limit) return {};
  std::vector<std::pair<double, int>> mass(n);
  for (int j = 0; j < n; ++j) mass[j] = {K.data.col(j).squaredNorm() * K.grid->weight(j), j};
  std::partial_sort(mass.begin(), mass.begin() + limit, mass.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
  std::vector<int> cols;
  for (int i = 0; i < limit; ++i) cols.push_back(mass[i].second);
  std::sort(cols.begin(), cols.end());
  return cols;
}

double column_distance(const KernelMatrix& a, const KernelMatrix& b, const std::vector<int>& cols) {
  if (cols.empty()) return relative_distance(a, b);
  const auto& m = a.grid->weights();
  double num = 0.0, den = 0.0;
  for (int p = 0; p < a.rowset.size(); ++p) {
    int q = b.rowset.find(a.rowset.rows[p]);
    for (int j : cols) {
      cplx bv = q >= 0 ? b.data(q, j) : cplx(0.0);
      double w = m[a.rowset.rows[p]] * m[j];
      num += w * std::norm(a.data(p, j) - bv);
      den += w * std::norm(a.data(p, j));
    }
  }
  return std::sqrt(rel(num, den));
}

void roundtrip_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const ModelPtr& m = l.model;
  for (const auto& tau : s.c.taus) {
    double rt = 0.0, unit = 0.0, iso = 0.0, crt = 0.0, path = 0.0, ups = 0.0, sch_d = 0.0;
    for (int i = 0; i < s.c.samples; ++i) {
      SymbolField A = random_symbol(s.c, l, rng), B = random_symbol(s.c, l, rng);
      KernelMatrix K = partial_inverse(A);
      KernelMatrix CK = c_tau(K, tau);
      GridOperator T = upsilon(CK);
      rt = std::max(rt, relative_distance(wig_tau(m, T, tau), A));
      GridOperator TB = op_tau(B, tau);
      unit = std::max(unit, std::abs(T.hs_inner(TB) - A.inner(B)) / (A.norm() * B.norm()));
      iso = std::max(iso, std::abs(CK.norm() - K.norm()) / K.norm());
      crt = std::max(crt, relative_distance(c_tau_inv(CK, tau), K));
      KernelMatrix back = upsilon_inv(T);
      back.data -= CK.data;
      ups = std::max(ups, rel(back.norm(), CK.norm()));
      auto cols = heavy_columns(CK, 1500);
      path = std::max(path, column_distance(CK, kernel_direct(A, tau, cols), cols));
      SampledFunction v = random_function(l, rng);
      sch_d = std::max(sch_d, relative_error(sch(K, v, tau), T.apply(v)));
    }
    s.refine(l.index, tag("roundtrip", tau), rt);
    s.refine(l.index, tag("unitarity", tau), unit);
    s.refine(l.index, tag("c_isometry", tau), iso);
    s.refine(l.index, tag("c_roundtrip", tau), crt);
    s.refine(l.index, tag("path_agreement", tau), path);
    s.exact(l.index, tag("upsilon_roundtrip", tau), ups);
    s.exact(l.index, tag("sch_consistency", tau), sch_d);
  }
}

void covariance_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const ModelPtr& m = l.model;
  auto zs = z_points(s.c, *m->grid(), rng);
  if (zs.empty()) throw ConfigError("/z: check-covariance needs z points");
  auto rows = symbol_rows(s.c.symbol.rows, *m->grid());
  for (const auto& tau : s.c.taus) {
    double cov = 0.0, wig = 0.0, wsym = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    for (const auto& z : zs) {
      SymbolField A = random_symbol(s.c, l, rng);
      SampledFunction u = random_function(l, rng), v = random_function(l, rng), w = random_function(l, rng);
      cov = std::max(cov, covariance_defect(A, z, tau));
      std::vector<int> wr = s.c.symbol.rows.all_rows ? std::vector<int>{} : rows;
      wig = std::max(wig, wigner_covariance_defect(m, u, v, z, tau, wr));
      wsym = std::max(wsym, wigner_symbol_defect(m, u, v, z, tau, wr));
      LemmaResiduals r = lemma_residuals(A, w, z, tau);
      l1 = std::max(l1, r.upsilon);
      l2 = std::max(l2, r.change);
      l3 = std::max(l3, r.plancherel);
    }
    s.refine(l.index, tag("covariance", tau), cov);
    s.refine(l.index, tag("wigner_covariance", tau), wig);
    s.info(l.index, tag("wigner_symbol_side", tau), wsym);
    s.refine(l.index, tag("lemma_upsilon", tau), l1);
    s.refine(l.index, tag("lemma_change", tau), l2);
    s.refine(l.index, tag("lemma_plancherel", tau), l3);
  }
}

// random trig polynomial with frequencies k/L, |k| <= band
std::vector<std::pair<cplx, double>> random_modes(std::mt19937_64& rng, int count, int band, double L) {
  std::uniform_int_distribution<int> f(-band, band);
  std::vector<std::pair<cplx, double>> modes;
  for (int i = 0; i < count; ++i) {
    cplx c = complex_normal(rng);
    modes.emplace_back(c, f(rng) / L);
  }
  return modes;
}

cplx eval_modes(const std::vector<std::pair<cplx, double>>& modes, double x) {
  cplx s = 0.0;
  for (const auto& [c, f] : modes) s += c * std::polar(1.0, 2 * std::numbers::pi * f * x);
  return s;
}

void oracle_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const ModelPtr& m = l.model;
  const GroupGrid& g = *m->grid();
  if (g.group().kind != Kind::euclidean || g.dim() != 1)
    throw UnsupportedError("check-abelian-oracle supports euclidean(1) only");
  const Axis& ax = g.axes()[0];
  if (ax.scale != Scale::periodic) throw ConfigError("/axes/0: the abelian oracle needs a periodic axis");
  int n = ax.count;
  double L = ax.period();
  std::vector<double> xi(n);
  for (int j = 0; j < n; ++j) xi[j] = (j - n / 2) / L;
  int band = std::max(1, n / 8);
  for (const auto& tau : s.c.taus) {
    double p1 = 0.0, p2 = 0.0;
    for (int i = 0; i < s.c.samples; ++i) {
      ScalarSymbol a(m->grid(), {xi});
      auto mx = random_modes(rng, 4, band, L), mxi = random_modes(rng, 4, band, xi.back() - xi.front() + 1.0 / L);
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) a.values(r, j) = eval_modes(mx, g.node(r)[0]) * eval_modes(mxi, xi[j]);
      SampledFunction u(m->grid());
      auto mu = random_modes(rng, 6, band, L);
      for (int r = 0; r < n; ++r) u.values[r] = eval_modes(mu, g.node(r)[0]);
      OracleComparison cmp = pipeline_vs_oracle(m, a, u, tau);
      p1 = std::max(p1, cmp.path1);
      p2 = std::max(p2, cmp.path2);
    }
    s.report.add(s.check, s.group, l.index, tag("oracle_path1", tau), p1, s.c.tol.oracle);
    s.report.add(s.check, s.group, l.index, tag("oracle_path2", tau), p2, s.c.tol.oracle);
  }
  // modulation identity for the oracle itself: a = e^{2 pi i x xi0} g(xi)
  {
    ScalarSymbol a(m->grid(), {xi});
    double xi0 = 3.0 / L;
    auto gm = random_modes(rng, 3, band, xi.back() - xi.front() + 1.0 / L);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) a.values(r, j) = std::polar(1.0, 2 * std::numbers::pi * xi0 * g.node(r)[0]) * eval_modes(gm, xi[j]);
    SampledFunction u(m->grid());
    auto mu = random_modes(rng, 6, band, L);
    for (int r = 0; r < n; ++r) u.values[r] = eval_modes(mu, g.node(r)[0]);
    SampledFunction lhs = kn_oracle(a, u, TauMap{});
    SampledFunction rhs(m->grid());
    double dxi = 1.0 / L;
    for (int r = 0; r < n; ++r) {
      double x = g.node(r)[0];
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) {
        cplx uh = 0.0;
        for (int q = 0; q < n; ++q) uh += std::polar(1.0, -2 * std::numbers::pi * g.node(q)[0] * xi[j]) * u.values[q] * g.weight(q);
        acc += std::polar(1.0, 2 * std::numbers::pi * x * xi[j]) * eval_modes(gm, xi[j]) * uh * dxi;
      }
      rhs.values[r] = std::polar(1.0, 2 * std::numbers::pi * xi0 * x) * acc;
    }
    s.report.add(s.check, s.group, l.index, "oracle_modulation", relative_error(lhs, rhs), 1e-6);
  }
}

GridOperator kron(const GridOperator& a, const GridOperator& b, const GridPtr& grid) {
  Eigen::MatrixXcd A = a.dense_matrix(), B = b.dense_matrix();
  Eigen::MatrixXcd M(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) M.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return {grid, RowSet::all(grid->size()), M};
}

void product_level(Sink& s, const Level& l, std::mt19937_64& rng) {
  const GroupSpec& g = l.model->group();
  if (g.kind == Kind::euclidean && g.n == 1) {
    ModelParams p2 = l.params;
    p2.group = GroupSpec::euclidean(2);
    p2.axes = {l.params.axes[0], l.params.axes[0]};
    ModelPtr m2 = build_model(p2);
    const Model& m1 = *l.model;
    int n = m1.grid()->size(), nd = m1.dual_size();
    // dual index of (k1, k2) in the product model
    std::map<std::pair<long, long>, int> index;
    double L = l.params.axes[0].period();
    for (int k = 0; k < m2->dual_size(); ++k) {
      const auto& z = m2->dual().points[k].zeta;
      index[{std::lround(z[0] * L), std::lround(z[1] * L)}] = k;
    }
    double worst = 0.0;
    for (const auto& tau : s.c.taus) {
      double defect = 0.0;
      for (int i = 0; i < s.c.samples; ++i) {
        SymbolField A1 = SymbolField::dense(l.model), A2 = SymbolField::dense(l.model);
        for (auto* A : {&A1, &A2})
          for (auto& row : A->data)
            for (auto& e : row) e(0, 0) = complex_normal(rng);
        SymbolField A = SymbolField::dense(m2);
        for (int x1 = 0; x1 < n; ++x1)
          for (int x2 = 0; x2 < n; ++x2)
            for (int k1 = 0; k1 < nd; ++k1)
              for (int k2 = 0; k2 < nd; ++k2) {
                long z1 = std::lround(m1.dual().points[k1].zeta[0] * L), z2 = std::lround(m1.dual().points[k2].zeta[0] * L);
                A.data[x1 * n + x2][index.at({z1, z2})](0, 0) = A1.data[x1][k1](0, 0) * A2.data[x2][k2](0, 0);
              }
        GridOperator lhs = op_tau(A, tau);
        GridOperator rhs = kron(op_tau(A1, tau), op_tau(A2, tau), m2->grid());
        defect = std::max(defect, relative_distance(lhs, rhs));
      }
      s.exact(l.index, tag("tensor_defect", tau), defect);
      worst = std::max(worst, defect);
    }
    return;
  }
  if (g.kind == Kind::affine_line) {
    const Model& m = *l.model;
    DualGrid expect = product_dual(affine_dual(), euclidean_dual({l.params.axes[2]}));
    double dual_defect = expect.size() == m.dual_size() ? 0.0 : 1.0;
    for (int k = 0; dual_defect == 0.0 && k < m.dual_size(); ++k) {
      const DualPoint &a = m.dual().points[k], &b = expect.points[k];
      dual_defect = std::max({dual_defect, std::abs(a.sign - b.sign), std::abs(a.zeta[0] - b.zeta[0]),
                              std::abs(a.base_weight - b.base_weight) / b.base_weight});
    }
    s.exact(l.index, "dual_tensor_defect", dual_defect);
    // P of a separable function factorizes over the two dual factors
    ModelParams pa = l.params;
    pa.group = GroupSpec::affine();
    pa.axes = {l.params.axes[0], l.params.axes[1]};
    ModelPtr ma = build_model(pa);
    ModelParams pe = l.params;
    pe.group = GroupSpec::euclidean(1);
    pe.axes = {l.params.axes[2]};
    ModelPtr me = build_model(pe);
    std::vector<double> kap;
    for (int i = 0; i < ma->dual().kappa_classes(); ++i)
      for (int j = 0; j < me->dual().kappa_classes(); ++j) kap.push_back(1.0);
    double worst = 0.0;
    for (int i = 0; i < s.c.samples; ++i) {
      TestFunctionSpec t1, t2;
      std::uniform_real_distribution<double> u(-0.3, 0.3);
      t1.center = {u(rng), u(rng)};
      t1.width = {0.5, 1.0};
      t2.center = {u(rng)};
      t2.width = {0.8};
      SampledFunction w1 = sample(t1, ma->grid()), w2 = sample(t2, me->grid());
      SampledFunction w(m.grid());
      for (int q = 0; q < m.grid()->size(); ++q) {
        auto k = m.grid()->multi_index(q);
        w.values[q] = w1.values[k[0] * m.grid()->axes()[1].count + k[1]] * w2.values[k[2]];
      }
      DualField F = plancherel_forward(m, w), Fa = plancherel_forward(*ma, w1), Fe = plancherel_forward(*me, w2);
      double num = 0.0, den = 0.0;
      int ne = me->dual_size();
      for (int k = 0; k < m.dual_size(); ++k) {
        Eigen::MatrixXcd ref = Fa[k / ne] * Fe[k % ne](0, 0);
        num += (F[k] - ref).squaredNorm();
        den += ref.squaredNorm();
      }
      worst = std::max(worst, std::sqrt(rel(num, den)));
    }
    s.exact(l.index, "plancherel_tensor_defect", worst);
    return;
  }
  throw UnsupportedError("check-product supports euclidean(1) and affine_line");
}

}  // namespace

Level make_level(const RunConfig& c, int level) {
  Level l;
  l.index = level;
  l.params = c.model;
  for (int i = 0; i < level; ++i) l.params = l.params.refined();
  l.model = build_model(l.params);
  std::vector<double> k;
  for (int i = 0; i < l.model->dual().kappa_classes(); ++i) k.push_back(theoretical_kappa(l.model->group(), i));
  l.model->set_kappa(k);
  for (const auto& t : c.tests) l.tests.push_back(sample(t, l.model->grid()));
  if (l.tests.size() >= 3) l.calibration = calibrate(*l.model, l.tests);
  return l;
}

std::vector<int> symbol_rows(const RowSpec& spec, const GroupGrid& grid) {
  std::vector<int> rows;
  if (spec.all_rows) {
    for (int i = 0; i < grid.size(); ++i) rows.push_back(i);
    return rows;
  }
  int o = grid.locate(identity(grid.group()));
  if (o < 0) throw ConfigError("/symbol/rows: the identity is not a grid node");
  auto c = grid.multi_index(o);
  int na = static_cast<int>(spec.axes.size()), side = 2 * spec.radius + 1, total = 1;
  for (int i = 0; i < na; ++i) total *= side;
  for (int t = 0; t < total; ++t) {
    auto k = c;
    int q = t;
    bool inside = true;
    for (int i = 0; i < na; ++i) {
      int a = spec.axes[i];
      k[a] += q % side - spec.radius;
      q /= side;
      inside = inside && k[a] >= 0 && k[a] < grid.axes()[a].count;
    }
    if (inside) rows.push_back(grid.flat(k));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

Point snap_to_lattice(const GroupGrid& grid, const std::vector<double>& chart) {
  Point p{};
  for (int a = 0; a < grid.dim(); ++a) {
    const Axis& ax = grid.axes()[a];
    double u = std::round(ax.internal(chart[a]) / ax.h) * ax.h;
    p[a] = ax.scale == Scale::geometric ? std::exp(u) : u;
  }
  return p;
}

std::vector<Point> z_points(const RunConfig& c, const GroupGrid& grid, std::mt19937_64& rng) {
  std::vector<Point> zs;
  for (const auto& z : c.z) zs.push_back(snap_to_lattice(grid, z));
  std::uniform_int_distribution<int> k(-c.z_range, c.z_range);
  for (int i = 0; i < c.random_z; ++i) {
    Point p{};
    for (int a = 0; a < grid.dim(); ++a) {
      const Axis& ax = grid.axes()[a];
      double u = k(rng) * ax.h;
      p[a] = ax.scale == Scale::geometric ? std::exp(u) : u;
    }
    zs.push_back(p);
  }
  return zs;
}

SampledFunction random_function(const Level& l, std::mt19937_64& rng) {
  if (l.tests.empty()) throw ConfigError("/tests: random functions need at least one test function");
  SampledFunction f(l.model->grid());
  for (const auto& t : l.tests) f.values += complex_normal(rng) * t.values;
  return f;
}

SymbolField random_symbol(const RunConfig& c, const Level& l, std::mt19937_64& rng) {
  const ModelPtr& m = l.model;
  RowSet rs(m->grid()->size(), symbol_rows(c.symbol.rows, *m->grid()));
  SymbolField A(m, rs);
  if (c.symbol.kind == "random") {
    for (auto& row : A.data)
      for (auto& e : row)
        for (int i = 0; i < e.rows(); ++i)
          for (int j = 0; j < e.cols(); ++j) e(i, j) = complex_normal(rng);
    return A;
  }
  if (c.symbol.profiles.empty()) throw ConfigError("/symbol/profiles: range symbols need profiles");
  std::vector<DualField> P;
  for (const auto& t : c.symbol.profiles) P.push_back(plancherel_forward(*m, sample(t, m->grid())));
  for (auto& row : A.data)
    for (const auto& F : P) {
      cplx w = complex_normal(rng);
      for (std::size_t k = 0; k < row.size(); ++k) row[k] += w * F[k];
    }
  return A;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"calibrate",         "check-plancherel", "check-semiinvariance",
                                                 "check-duality",     "check-covariance", "check-abelian-oracle",
                                                 "check-product",     "check-roundtrip"};
  return names;
}

Report run_check(const RunConfig& c, const std::string& name) {
  Report r;
  if (name == "calibrate") {
    require_tests(c, 3, name);
    r = run_levels(c, name, calibrate_level);
  } else if (name == "check-plancherel") {
    require_tests(c, 3, name);
    r = run_levels(c, name, plancherel_level);
  } else if (name == "check-semiinvariance") {
    r = run_levels(c, name, semiinvariance_level);
  } else if (name == "check-duality") {
    require_tests(c, 1, name);
    r = run_levels(c, name, duality_level);
  } else if (name == "check-covariance") {
    require_tests(c, 1, name);
    r = run_levels(c, name, covariance_level);
  } else if (name == "check-abelian-oracle") {
    if (c.model.group.kind != Kind::euclidean) throw UnsupportedError("check-abelian-oracle needs a euclidean group");
    r = run_levels(c, name, oracle_level);
  } else if (name == "check-product") {
    r = run_levels(c, name, product_level);
  } else if (name == "check-roundtrip") {
    r = run_levels(c, name, roundtrip_level);
  } else {
    throw UnsupportedError("unknown check '" + name + "'");
  }
  r.meta["config_hash"] = config_hash(c);
  r.meta["check"] = name;
  r.meta["group"] = c.model.group.name();
  r.meta["levels"] = c.levels;
  r.meta["seed"] = c.seed;
  return r;
}

Report refine_study(const RunConfig& c) {
  if (c.levels < 2) throw ConfigError("/levels: refine-study needs levels >= 2");
  if (c.check.empty() || c.check == "refine-study") throw ConfigError("/check: refine-study needs the check to refine");
  Report r = run_check(c, c.check);
  r.meta["study"] = true;
  return r;
}

}  // namespace gq
