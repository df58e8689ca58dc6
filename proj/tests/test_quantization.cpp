#include "doctest.h"

#include "support.hpp"

using namespace gq;
using namespace gqt;

namespace {

constexpr int kN = 64;
constexpr double kHalf = 8.0;
constexpr double kH = 2 * kHalf / kN;

// node index of the periodic coordinate v
int idx(double v) { return wrap(static_cast<int>(std::lround((v + kHalf) / kH)), kN); }

KernelMatrix random_kernel(const GridPtr& g, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  KernelMatrix K = KernelMatrix::dense(g);
  for (int i = 0; i < K.data.rows(); ++i)
    for (int j = 0; j < K.data.cols(); ++j) K.data(i, j) = cplx(n(rng), n(rng));
  return K;
}

SymbolField constant_symbol(const ModelPtr& m, const std::function<cplx(double)>& f) {
  SymbolField A = SymbolField::dense(m);
  for (int p = 0; p < A.rowset.size(); ++p)
    for (auto& M : A.data[p]) M(0, 0) = f(m->grid()->node(A.rowset.rows[p])[0]);
  return A;
}

const TauMap kKN = TauMap::parse("kohn_nirenberg");
const TauMap kRight = TauMap::parse("right");
const TauMap kWeyl = TauMap::parse("euclidean_weyl");

}  // namespace

TEST_SUITE("quantization") {
  TEST_CASE("tau names") {
    CHECK(TauMap::parse("kn").name == TauMap::Name::kohn_nirenberg);
    CHECK(TauMap::parse("weyl").name == TauMap::Name::euclidean_weyl);
    CHECK(TauMap::parse(kRight.str()).name == TauMap::Name::right);
    CHECK_THROWS(TauMap::parse("anti-wick"));
    CHECK_THROWS(kWeyl.check(GroupSpec::affine()));
    CHECK_NOTHROW(kWeyl.check(GroupSpec::euclidean(2)));
  }

  TEST_CASE("upsilon") {
    auto m = euclid_model(kN, kHalf);
    const GridPtr& g = m->grid();
    KernelMatrix spike = KernelMatrix::dense(g);
    for (int i = 0; i < g->size(); ++i) spike.data(i, i) = 1.0 / g->weight(i);
    CHECK((upsilon(spike).dense_matrix() - Eigen::MatrixXcd::Identity(kN, kN)).norm() < 1e-12);

    std::mt19937_64 rng(1);
    SampledFunction u = random_values(g, rng), v = random_values(g, rng), w = random_values(g, rng);
    SampledFunction out = upsilon(KernelMatrix::tensor(u, v)).apply(w);
    SampledFunction cv(g, v.values.conjugate());
    CHECK(rel(out.values, inner(w, cv) * u.values) < 1e-12);

    KernelMatrix K = random_kernel(g, rng);
    GridOperator T = upsilon(K);
    CHECK((upsilon_inv(T).data - K.data).norm() == 0.0);
    CHECK(T.hs_norm() == doctest::Approx(K.norm()).epsilon(1e-12));
  }

  TEST_CASE("change of variables on the euclidean torus") {
    auto m = euclid_model(kN, kHalf);
    const GridPtr& g = m->grid();
    std::mt19937_64 rng(2);
    KernelMatrix K = random_kernel(g, rng);
    KernelMatrix kn = c_tau(K, kKN), rt = c_tau(K, kRight);
    KernelMatrix inv_kn = c_tau_inv(K, kKN), inv_w = c_tau_inv(K, kWeyl);
    double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
    for (int i = 0; i < kN; ++i)
      for (int j = 0; j < kN; ++j) {
        double x = g->node(i)[0], y = g->node(j)[0];
        e1 = std::max(e1, std::abs(kn.data(i, j) - K.data(i, idx(x - y))));
        e2 = std::max(e2, std::abs(rt.data(i, j) - K.data(j, idx(x - y))));
        e3 = std::max(e3, std::abs(inv_kn.data(i, j) - K.data(i, idx(x - y))));
        if (wrap(j - kN / 2, 2) == 0) e4 = std::max(e4, std::abs(inv_w.data(i, j) - K.data(idx(x + y / 2), idx(x - y / 2))));
      }
    CHECK(e1 < 1e-14);
    CHECK(e2 < 1e-14);
    CHECK(e3 < 1e-14);
    CHECK(e4 < 1e-14);
    for (const auto& t : {kKN, kRight}) CHECK(relative_distance(c_tau_inv(c_tau(K, t), t), K) < 1e-10);
    CHECK(c_tau(K, kKN).norm() == doctest::Approx(K.norm()).epsilon(1e-12));
  }

  TEST_CASE("op of simple symbols") {
    auto m = euclid_model(kN, kHalf);
    const GridPtr& g = m->grid();
    std::mt19937_64 rng(3);
    SampledFunction u = random_values(g, rng);
    double xi0 = 5.0 / (2 * kHalf);
    for (const auto& t : {kKN, kRight, kWeyl}) {
      SymbolField zero = SymbolField::dense(m);
      CHECK(op_tau(zero, t).hs_norm() == 0.0);
      SymbolField one = constant_symbol(m, [](double) { return cplx(1.0); });
      CHECK(rel(op_tau(one, t).apply(u).values, u.values) < 1e-6);
    }
    for (const auto& t : {kKN, kRight}) {
      SymbolField mod = constant_symbol(m, [&](double x) { return std::polar(1.0, 2 * kPi * xi0 * x); });
      Eigen::VectorXcd ref(kN);
      for (int i = 0; i < kN; ++i) ref[i] = std::polar(1.0, 2 * kPi * xi0 * g->node(i)[0]) * u.values[i];
      CHECK(rel(op_tau(mod, t).apply(u).values, ref) < 1e-10);
    }
  }

  TEST_CASE("kernel, both paths and sch agree") {
    auto m = euclid_model(32, 4.0);
    std::mt19937_64 rng(4);
    SymbolField A = random_dense_symbol(m, rng);
    SampledFunction v = random_values(m->grid(), rng);
    for (const auto& t : {kKN, kRight, kWeyl}) {
      GridOperator T = op_tau(A, t);
      KernelMatrix K = kernel_of_symbol(A, t);
      CHECK(relative_distance(upsilon(K), T) < 1e-14);
      CHECK(relative_distance(op_tau_direct(A, t), T) < 1e-10);
      KernelMatrix L = random_kernel(m->grid(), rng);
      CHECK(rel(sch(L, v, t).values, upsilon(c_tau(L, t)).apply(v).values) < 1e-12);
    }
  }

  TEST_CASE("wig inverts op on shift-exact grids") {
    auto m = euclid_model(32, 4.0);
    std::mt19937_64 rng(5);
    SymbolField A = random_dense_symbol(m, rng);
    for (const auto& t : {kKN, kRight}) CHECK(relative_distance(wig_tau(m, op_tau(A, t), t), A) < 1e-10);
    GridOperator Z = op_tau(SymbolField::dense(m), kKN);
    CHECK(wig_tau(m, Z, kKN).norm() == 0.0);
  }

  TEST_CASE("rank-one wigner") {
    auto m = euclid_model(32, 4.0);
    std::mt19937_64 rng(6);
    SampledFunction u = random_values(m->grid(), rng), v = random_values(m->grid(), rng), w = random_values(m->grid(), rng);
    SampledFunction zero(m->grid());
    for (const auto& t : {kKN, kRight, kWeyl}) {
      CHECK(wig_rank_one(m, zero, v, t).norm() == 0.0);
      cplx al(0.7, -0.4);
      SymbolField lhs = wig_rank_one(m, u, SampledFunction(m->grid(), al * v.values + w.values), t);
      SymbolField a = wig_rank_one(m, u, v, t), b = wig_rank_one(m, u, w, t);
      SymbolField rhs = a;
      for (int p = 0; p < rhs.rowset.size(); ++p)
        for (std::size_t k = 0; k < rhs.data[p].size(); ++k) rhs.data[p][k] = al * a.data[p][k] + b.data[p][k];
      CHECK(relative_distance(lhs, rhs) < 1e-12);
      SymbolField c = wig_rank_one(m, SampledFunction(m->grid(), al * u.values), v, t);
      for (int p = 0; p < a.rowset.size(); ++p)
        for (std::size_t k = 0; k < a.data[p].size(); ++k) a.data[p][k] *= std::conj(al);
      CHECK(relative_distance(c, a) < 1e-12);
    }
  }

  TEST_CASE("duality on the euclidean torus") {
    auto m = euclid_model(32, 4.0);
    std::mt19937_64 rng(7);
    for (const auto& t : {kKN, kRight}) {
      for (int s = 0; s < 3; ++s) {
        SymbolField A = random_dense_symbol(m, rng);
        SampledFunction u = random_values(m->grid(), rng), v = random_values(m->grid(), rng);
        CHECK(duality_residual(A, u, v, t) <= 1e-8);
        CHECK(duality_residual(wig_rank_one(m, u, v, t), u, v, t) <= 1e-8);
      }
    }
    SymbolField Z = SymbolField::dense(m);
    SampledFunction u = random_values(m->grid(), rng);
    CHECK_THROWS_AS(duality_residual(Z, u, u, kKN), std::domain_error);
  }

  TEST_CASE("fourier-wigner duality") {
    auto m = euclid_model(16, 2.0);
    std::mt19937_64 rng(8);
    SymbolField A = random_dense_symbol(m, rng);
    SampledFunction u = random_values(m->grid(), rng), v = random_values(m->grid(), rng);
    cplx lhs = inner(op_tau(A, kKN).apply(u), v);
    cplx rhs = dual_group_inner(*m, symbol_hat(A), fwig(m, u, v, kKN));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * A.norm() * norm(u) * norm(v));
  }
}
