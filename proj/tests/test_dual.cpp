#include "doctest.h"

#include "support.hpp"

using namespace gq;
using namespace gqt;

namespace {

int dual_index(const Model& m, double zeta) {
  for (int k = 0; k < m.dual_size(); ++k)
    if (std::abs(m.dual().points[k].zeta[0] - zeta) < 1e-12) return k;
  return -1;
}

// max entry difference over rows and columns in [lo, hi)
double window_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int lo, int hi) {
  double d = 0;
  for (int i = lo; i < hi; ++i)
    for (int j = lo; j < hi; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

std::vector<SampledFunction> gaussians(const GridPtr& g, const std::vector<std::vector<double>>& centers, double w) {
  std::vector<SampledFunction> out;
  for (const auto& c : centers) {
    TestFunctionSpec s;
    s.center = c;
    s.width.assign(c.size(), w);
    out.push_back(sample(s, g));
  }
  return out;
}

}  // namespace

TEST_SUITE("concrete-dual") {
  TEST_CASE("bianchi cross-sections") {
    GroupSpec v = GroupSpec::bianchi(Family::V);
    Eigen::Vector2d s = cross_section(v, 0, 0.0);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(std::abs(s[1]) < 1e-15);
    s = cross_section(v, 0, 0.25);
    CHECK(std::abs(s[0]) < 1e-15);
    CHECK(s[1] == doctest::Approx(1.0));
    GroupSpec vii = GroupSpec::bianchi(Family::VII, 1.0);
    s = cross_section(vii, 1, 2.0);
    CHECK(s[0] == 2.0);
    CHECK(s[1] == 0.0);
    CHECK_THROWS(cross_section(vii, 0, 100.0));
  }

  TEST_CASE("every generic orbit crosses the transversal once") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> n;
    for (auto g : {GroupSpec::bianchi(Family::IV), GroupSpec::bianchi(Family::V), GroupSpec::bianchi(Family::VI, 0.5),
                   GroupSpec::bianchi(Family::VII, 1.0)}) {
      DualGrid dg = bianchi_dual(g, 4, 4.0);
      int layers = static_cast<int>(dg.layer_names.size());
      for (int t = 0; t < 6; ++t) {
        Eigen::Vector2d s0(n(rng), n(rng));
        int hits = 0;
        for (int l = 0; l < layers; ++l) hits += count_transversal_crossings(g, l, s0, 12.0);
        CHECK_MESSAGE(hits == 1, g.name());
      }
    }
  }

  TEST_CASE("rep_apply examples") {
    auto m = euclid_model(128);
    int k = dual_index(*m, 2.0);
    REQUIRE(k >= 0);
    Eigen::MatrixXcd R = rep_apply(*m, k, make_point({0.25}));
    REQUIRE(R.size() == 1);
    CHECK(std::abs(R(0, 0) + 1.0) < 1e-14);

    for (const auto& mm : {euclid_model(), affine_model(), bianchi_model()}) {
      for (int kk = 0; kk < mm->dual_size(); ++kk) {
        Eigen::MatrixXcd I = rep_apply(*mm, kk, identity(mm->group()));
        CHECK((I - Eigen::MatrixXcd::Identity(mm->d(), mm->d())).norm() < 1e-14);
      }
    }
  }

  TEST_CASE("affine dilation is an index shift with factor a^(1/2)") {
    auto m = affine_model();
    int kp = m->dual().points[0].sign > 0 ? 0 : 1;
    const RepSpace& rs = m->rep();
    double a = std::exp(3 * rs.h);
    auto phi = [](double s) { return std::exp(-0.5 * std::log(s) * std::log(s)) * std::sqrt(s); };
    Eigen::VectorXcd c(m->d());
    for (int i = 0; i < m->d(); ++i) c[i] = std::sqrt(rs.weight(i)) * phi(std::exp(rs.t(i)));
    Eigen::VectorXcd out = rep_apply(*m, kp, make_point({a, 0})) * c;
    for (int i = 0; i + 3 < m->d(); ++i) {
      double s = std::exp(rs.t(i));
      CHECK(std::abs(out[i] / std::sqrt(rs.weight(i)) - std::sqrt(a) * phi(a * s)) < 1e-12);
    }
  }

  TEST_CASE("duflo-moore operators") {
    auto e = euclid_model();
    CHECK(duflo_moore(*e, 0).size() == 1);
    CHECK(duflo_moore(*e, 0)[0] == 1.0);
    auto a = affine_model();
    for (int i = 0; i < a->d(); ++i) CHECK(duflo_moore(*a, 0)[i] == doctest::Approx(std::exp(a->rep().t(i))));
    auto b = bianchi_model();
    for (int i = 0; i < b->d(); ++i) CHECK(duflo_moore(*b, 0)[i] == doctest::Approx(std::exp(-2 * b->rep().t(i))));
  }

  TEST_CASE("semi-invariance on shift-exact points") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& m : {affine_model(), bianchi_model(), bianchi_model(Family::VII, 1.0)}) {
      const GroupGrid& g = *m->grid();
      for (int t = 0; t < 20; ++t) {
        std::vector<double> chart;
        for (int k = 0; k < g.dim(); ++k) chart.push_back(u(rng));
        if (g.axes()[0].scale == Scale::geometric) chart[0] = std::exp(chart[0]);
        Point z = snap_to_lattice(g, chart);
        CHECK(semi_invariance_residual(*m, z) <= 1e-10);
      }
    }
  }

  TEST_CASE("rep homomorphism on shift-exact pairs") {
    for (const auto& m : {affine_model(), bianchi_model()}) {
      const GroupGrid& g = *m->grid();
      const GroupSpec& gs = m->group();
      Point x = g.node(g.size() / 2 + 2 * g.stride(0) + g.stride(g.dim() - 1));
      Point y = g.node(g.size() / 2 - g.stride(0) + 3);
      int margin = 8;
      for (int k = 0; k < m->dual_size(); k += 5) {
        Eigen::MatrixXcd lhs = rep_apply(*m, k, x) * rep_apply(*m, k, y);
        Eigen::MatrixXcd rhs = rep_apply(*m, k, multiply(gs, x, y));
        CHECK(window_diff(lhs, rhs, margin, m->d() - margin) < 1e-10);
        Eigen::MatrixXcd R = rep_apply(*m, k, x);
        Eigen::MatrixXcd U = R.adjoint() * R;
        CHECK(window_diff(U, Eigen::MatrixXcd::Identity(m->d(), m->d()), margin, m->d() - margin) < 1e-10);
      }
    }
  }

  TEST_CASE("dual weights") {
    auto e = euclid_model(128);
    for (int k = 0; k < e->dual_size(); ++k) CHECK(e->dual().weight(k) == doctest::Approx(1.0 / 16));
    DualGrid v = bianchi_dual(GroupSpec::bianchi(Family::V), 24, 4.0);
    for (int k = 0; k < v.size(); ++k) CHECK(v.weight(k) == doctest::Approx(1.0 / 24));
    DualGrid iv = bianchi_dual(GroupSpec::bianchi(Family::IV), 5, 4.0);
    int hits = 0;
    for (int k = 0; k < iv.size(); ++k)
      if (std::abs(iv.points[k].lambda - 2.0) < 1e-12) {
        CHECK(iv.weight(k) == doctest::Approx(3 * 0.8));
        ++hits;
      }
    CHECK(hits == 1);
  }

  TEST_CASE("product dual of two lines is the plane dual") {
    Axis ax = Axis::cells(Scale::periodic, -2, 2, 8);
    DualGrid p = product_dual(euclidean_dual({ax}), euclidean_dual({ax}));
    DualGrid q = euclidean_dual({ax, ax});
    REQUIRE(p.size() == q.size());
    for (int k = 0; k < p.size(); ++k) {
      CHECK(p.points[k].zeta == q.points[k].zeta);
      CHECK(p.weight(k) == doctest::Approx(q.weight(k)));
    }
  }

  TEST_CASE("fourier transform of a gaussian") {
    auto m = euclid_model(128);
    const GroupGrid& g = *m->grid();
    SampledFunction w(m->grid());
    for (int i = 0; i < g.size(); ++i) w.values[i] = std::exp(-kPi * g.node(i)[0] * g.node(i)[0]);
    for (int k = 0; k < m->dual_size(); k += 7) {
      double xi = m->dual().points[k].zeta[0];
      CHECK(std::abs(fourier_op(*m, k, w)(0, 0) - std::exp(-kPi * xi * xi)) < 1e-12);
    }
  }

  TEST_CASE("plancherel transform is linear and kills zero") {
    std::mt19937_64 rng(8);
    for (const auto& m : {euclid_model(), affine_model()}) {
      SampledFunction a = random_values(m->grid(), rng), b = random_values(m->grid(), rng), zero(m->grid());
      CHECK(dual_norm(*m, plancherel_forward(*m, zero)) == 0.0);
      cplx al(0.3, -1.2);
      DualField lhs = plancherel_forward(*m, SampledFunction(m->grid(), al * a.values + b.values));
      DualField fa = plancherel_forward(*m, a), fb = plancherel_forward(*m, b);
      for (std::size_t k = 0; k < lhs.size(); ++k) CHECK((lhs[k] - al * fa[k] - fb[k]).norm() <= 1e-10 * (lhs[k].norm() + 1));
      CHECK(norm(plancherel_inverse(*m, zero_field(*m))) == 0.0);
    }
  }

  TEST_CASE("euclidean calibration gives kappa = 1 and is scale invariant") {
    auto m = euclid_model(128);
    auto tests = gaussians(m->grid(), {{0}, {1}, {-0.5}}, 0.8);
    Calibration c = calibrate(*m, tests);
    CHECK(std::abs(c.kappa[0] - 1.0) < 1e-6);
    for (auto& t : tests) t.values *= 2.0;
    Calibration c2 = calibrate(*m, tests);
    CHECK(c2.kappa[0] == c.kappa[0]);
  }

  TEST_CASE("affine parseval after calibration at base resolution") {
    auto m = affine_model();
    auto tests = gaussians(m->grid(), {{0, 0}, {0.3, -0.5}, {-0.2, 0.4}}, 0.6);
    Calibration c = calibrate(*m, tests);
    CHECK(c.kappa[0] == doctest::Approx(theoretical_kappa(m->group(), 0)).epsilon(5e-2));
    for (const auto& t : tests) CHECK(parseval_residual(*m, t) <= 5e-2);
    SampledFunction back = plancherel_inverse(*m, plancherel_forward(*m, tests[0]));
    CHECK(rel(back.values, tests[0].values) <= 5e-2);
  }
}
