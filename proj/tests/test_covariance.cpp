#include "doctest.h"

#include "support.hpp"

using namespace gq;
using namespace gqt;

namespace {

SampledFunction bump(const GridPtr& g, std::vector<double> center, std::vector<double> width) {
  TestFunctionSpec s;
  s.center = std::move(center);
  s.width = std::move(width);
  return sample(s, g);
}

const TauMap kKN = TauMap::parse("kn");
const TauMap kRight = TauMap::parse("right");

}  // namespace

TEST_SUITE("covariance") {
  TEST_CASE("translations by the identity") {
    std::mt19937_64 rng(1);
    for (const auto& m : {euclid_model(), affine_model(), bianchi_model()}) {
      SampledFunction u = random_values(m->grid(), rng);
      Point e = identity(m->group());
      CHECK(rel(left_translate(e, u).values, u.values) == 0.0);
      CHECK(rel(right_translate(e, u).values, u.values) == 0.0);
    }
  }

  TEST_CASE("euclidean translation is a shift") {
    auto m = euclid_model(64, 8.0);
    const GridPtr& g = m->grid();
    std::mt19937_64 rng(2);
    SampledFunction u = random_values(g, rng);
    SampledFunction l = left_translate(make_point({0.75}), u);
    for (int i = 0; i < 64; ++i) CHECK(l.values[i] == u.values[wrap(i - 3, 64)]);
  }

  TEST_CASE("affine right dilation by 2 on a log2 lattice") {
    double h = std::log(2.0) / 4;
    auto g = std::make_shared<GroupGrid>(GroupSpec::affine(),
                                         std::vector<Axis>{Axis::centered(Scale::geometric, h, 21), Axis::centered(Scale::linear, 0.2, 11)});
    std::mt19937_64 rng(3);
    SampledFunction u = random_values(g, rng);
    SampledFunction r = right_translate(make_point({2, 0}), u);
    for (int i = 0; i < g->size(); ++i) {
      auto k = g->multi_index(i);
      if (k[0] + 4 >= 21) {
        CHECK(r.values[i] == cplx(0.0));
        continue;
      }
      int j = i + 4 * g->stride(0);
      CHECK(std::abs(r.values[i] - u.values[j] / std::sqrt(2.0)) < 1e-14);
    }
  }

  TEST_CASE("left translations compose and right translations are isometric") {
    auto a = affine_model();
    SampledFunction u = bump(a->grid(), {0, 0}, {0.4, 0.5});
    Point z1 = make_point({1, 0.6}), z2 = make_point({1, -1.0});
    const GroupSpec& ga = a->group();
    CHECK(rel(left_translate(z1, left_translate(z2, u)).values, left_translate(multiply(ga, z1, z2), u).values) < 1e-10);

    auto b = bianchi_model();
    SampledFunction w = bump(b->grid(), {0, 0, 0}, {0.35, 0.35, 0.2});
    const GroupSpec& gb = b->group();
    Point y1 = make_point({0.35, 0, 0}), y2 = make_point({-0.35, 0.35, 0});
    CHECK(rel(left_translate(y1, left_translate(y2, w)).values, left_translate(multiply(gb, y1, y2), w).values) < 1e-10);
    Point c = make_point({0, 0, 0.5});
    CHECK(norm(right_translate(c, w)) == doctest::Approx(norm(w)).epsilon(1e-10));
    CHECK(norm(left_translate(y1, w)) == doctest::Approx(norm(w)).epsilon(1e-10));
  }

  TEST_CASE("conjugation of dual fields") {
    std::mt19937_64 rng(4);
    auto e = euclid_model(32, 4.0);
    DualField F = plancherel_forward(*e, random_values(e->grid(), rng));
    DualField G = ad_pi(*e, make_point({1.25}), F);
    for (std::size_t k = 0; k < F.size(); ++k) CHECK((G[k] - F[k]).norm() < 1e-14);

    for (const auto& m : {affine_model(), bianchi_model()}) {
      DualField H = plancherel_forward(*m, random_values(m->grid(), rng));
      DualField He = ad_pi(*m, identity(m->group()), H);
      for (std::size_t k = 0; k < H.size(); ++k) CHECK((He[k] - H[k]).norm() == 0.0);
    }

    auto a = affine_model();
    int d = a->d();
    double h = a->rep().h;
    Point z = make_point({std::exp(2 * h), 0.4});
    DualField D(a->dual_size(), Eigen::MatrixXcd(a->dm().cast<cplx>().asDiagonal()));
    DualField out = ad_pi(*a, z, D);
    double dinv = 1.0 / modular(a->group(), z);
    for (int k = 0; k < a->dual_size(); ++k)
      for (int i = 2; i < d - 2; ++i) {
        CHECK(std::abs(out[k](i, i) - dinv * a->dm()[i]) <= 1e-10 * a->dm()[i]);
      }

    // HS norm on interior blocks
    DualField P = plancherel_forward(*a, random_values(a->grid(), rng));
    Point zb = make_point({1, 0.8});
    DualField Q = ad_pi(*a, zb, P);
    for (int k = 0; k < a->dual_size(); ++k) CHECK(Q[k].norm() == doctest::Approx(P[k].norm()).epsilon(1e-10));
  }

  TEST_CASE("covariance defects") {
    auto m = euclid_model(32, 4.0);
    std::mt19937_64 rng(5);
    SymbolField A = random_dense_symbol(m, rng);
    SampledFunction u = random_values(m->grid(), rng), v = random_values(m->grid(), rng), w = random_values(m->grid(), rng);
    for (const auto& t : {kKN, kRight}) {
      CHECK(covariance_defect(A, identity(m->group()), t) == 0.0);
      CHECK(wigner_covariance_defect(m, u, v, identity(m->group()), t) == 0.0);
      Point z = make_point({1.25});
      CHECK(covariance_defect(A, z, t) <= 1e-10);
      double wc = wigner_covariance_defect(m, u, v, z, t);
      CHECK(wc <= 1e-10);
      CHECK(std::abs(wc - covariance_defect(wig_rank_one(m, u, v, t), z, t)) <= 1e-10);
      CHECK(wigner_symbol_defect(m, u, v, z, t) <= 1e-10);
      LemmaResiduals r = lemma_residuals(A, w, z, t);
      CHECK(r.upsilon <= 1e-10);
      CHECK(r.change <= 1e-10);
      CHECK(r.plancherel <= 1e-10);
    }
    CHECK_THROWS_AS(covariance_defect(SymbolField::dense(m), make_point({1.25}), kKN), std::domain_error);
  }

  TEST_CASE("conjugating an operator by the identity changes nothing") {
    auto m = euclid_model(16, 2.0);
    std::mt19937_64 rng(6);
    GridOperator T = op_tau(random_dense_symbol(m, rng), kKN);
    CHECK(relative_distance(conjugate_left(identity(m->group()), T), T) == 0.0);
  }
}
