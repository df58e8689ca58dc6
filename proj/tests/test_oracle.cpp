#include "doctest.h"

#include "support.hpp"

using namespace gq;
using namespace gqt;

namespace {

constexpr int kN = 64;
constexpr double kL = 16.0;

std::vector<double> xi_nodes() {
  std::vector<double> xi(kN);
  for (int k = 0; k < kN; ++k) xi[k] = (k - kN / 2) / kL;
  return xi;
}

// g(D)u by an explicit DFT pair
Eigen::VectorXcd multiplier(const GroupGrid& g, const std::vector<double>& xi, const std::function<cplx(double)>& m,
                            const Eigen::VectorXcd& u) {
  double h = kL / kN, dxi = 1.0 / kL;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(kN);
  for (double z : xi) {
    cplx hat = 0;
    for (int j = 0; j < kN; ++j) hat += u[j] * std::polar(h, -2 * kPi * g.node(j)[0] * z);
    for (int i = 0; i < kN; ++i) out[i] += m(z) * hat * std::polar(dxi, 2 * kPi * g.node(i)[0] * z);
  }
  return out;
}

SampledFunction gaussian_packet(const GridPtr& g) {
  SampledFunction u(g);
  for (int i = 0; i < g->size(); ++i) {
    double x = g->node(i)[0];
    u.values[i] = std::exp(-x * x / 2) * std::polar(1.0, 0.8 * x);
  }
  return u;
}

const std::vector<TauMap> kTaus = {TauMap::parse("kn"), TauMap::parse("right"), TauMap::parse("weyl")};

}  // namespace

TEST_SUITE("abelian-oracle") {
  TEST_CASE("closed-form symbols") {
    auto m = euclid_model(kN, kL / 2);
    const GridPtr& g = m->grid();
    auto xi = xi_nodes();
    SampledFunction u = gaussian_packet(g);
    for (const auto& t : kTaus) {
      ScalarSymbol zero(g, {xi});
      CHECK(norm(kn_oracle(zero, u, t)) == 0.0);

      ScalarSymbol one(g, {xi});
      one.values.setOnes();
      CHECK(rel(kn_oracle(one, u, t).values, u.values) < 1e-6);

      ScalarSymbol f(g, {xi});
      Eigen::VectorXcd fu(kN);
      for (int i = 0; i < kN; ++i) {
        cplx fx = 1.0 + 0.5 * std::cos(2 * kPi * g->node(i)[0] / kL);
        f.values.row(i).setConstant(fx);
        fu[i] = fx * u.values[i];
      }
      CHECK(rel(kn_oracle(f, u, t).values, fu) < 1e-6);

      auto gm = [](double z) { return cplx(std::exp(-z * z), z); };
      ScalarSymbol gs(g, {xi});
      for (int i = 0; i < kN; ++i)
        for (int k = 0; k < kN; ++k) gs.values(i, k) = gm(xi[k]);
      CHECK(rel(kn_oracle(gs, u, t).values, multiplier(*g, xi, gm, u.values)) < 1e-6);
    }
  }

  TEST_CASE("modulation identity") {
    auto m = euclid_model(kN, kL / 2);
    const GridPtr& g = m->grid();
    auto xi = xi_nodes();
    SampledFunction u = gaussian_packet(g);
    double xi0 = 3 / kL;
    auto gm = [](double z) { return cplx(1.0 / (1 + z * z)); };
    ScalarSymbol a(g, {xi});
    for (int i = 0; i < kN; ++i)
      for (int k = 0; k < kN; ++k) a.values(i, k) = std::polar(1.0, 2 * kPi * g->node(i)[0] * xi0) * gm(xi[k]);
    Eigen::VectorXcd ref = multiplier(*g, xi, gm, u.values);
    for (int i = 0; i < kN; ++i) ref[i] *= std::polar(1.0, 2 * kPi * g->node(i)[0] * xi0);
    CHECK(rel(kn_oracle(a, u, kTaus[0]).values, ref) < 1e-6);
  }

  TEST_CASE("pipeline matches the oracle") {
    auto m = euclid_model(kN, kL / 2);
    const GridPtr& g = m->grid();
    auto xi = xi_nodes();
    std::mt19937_64 rng(12);
    std::normal_distribution<double> n;
    std::uniform_int_distribution<int> band(-6, 6);
    for (int s = 0; s < 2; ++s) {
      ScalarSymbol a(g, {xi});
      cplx c[3];
      int fx[3], fz[3];
      for (int q = 0; q < 3; ++q) {
        c[q] = cplx(n(rng), n(rng));
        fx[q] = band(rng);
        fz[q] = band(rng);
      }
      for (int i = 0; i < kN; ++i)
        for (int k = 0; k < kN; ++k) {
          cplx v = 0;
          for (int q = 0; q < 3; ++q)
            v += c[q] * std::polar(1.0, 2 * kPi * (fx[q] * g->node(i)[0] / kL + fz[q] * xi[k] * kL / kN));
          a.values(i, k) = v;
        }
      SampledFunction u = random_values(g, rng);
      for (const auto& t : kTaus) {
        ScalarSymbol zero(g, {xi});
        CHECK(pipeline_vs_oracle(m, zero, u, t).worst() == 0.0);
        OracleComparison r = pipeline_vs_oracle(m, a, u, t);
        CHECK(r.path1 <= 1e-8);
        CHECK(r.path2 <= 1e-8);
      }
    }
  }

  TEST_CASE("reflected frequencies and grid checks") {
    auto m = euclid_model(kN, kL / 2);
    auto xi = xi_nodes();
    ScalarSymbol a(m->grid(), {xi});
    for (int k = 0; k < kN; ++k) a.values.col(k).setConstant(cplx(xi[k], 0));
    SymbolField A = to_symbol_field(m, a);
    for (int k = 0; k < m->dual_size(); ++k) {
      double z = m->dual().points[k].zeta[0];
      if (std::abs(z - xi.front()) < 1e-12) continue;  // -min wraps onto min
      CHECK(A.data[0][k](0, 0).real() == doctest::Approx(-z));
    }
    ScalarSymbol bad(m->grid(), {std::vector<double>(kN, 0.0)});
    CHECK_THROWS(to_symbol_field(m, bad));
    auto am = affine_model();
    CHECK_THROWS(kn_oracle(ScalarSymbol(am->grid(), {xi, xi}), SampledFunction(am->grid()), kTaus[0]));
  }
}
