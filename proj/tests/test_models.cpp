#include <gtest/gtest.h>

#include "support.hpp"

using namespace weilgroid;
using support::kind_of;
using support::mat;
using support::pt;

namespace {

const Model F1 = Model::formal_space(1);
const Model F2 = Model::formal_space(2);
const Model P1 = Model::pair_groupoid(1);
const Model M2 = Model::matrix_group(2);

std::vector<Model> all_models() {
  return {F1, F2, P1, Model::pair_groupoid(2), M2, Model::matrix_group(3)};
}

}  // namespace

TEST(Element, Validation) {
  EXPECT_EQ(kind_of([] { pt(F2, "D", {"1"}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { pt(M2, "D", {"2", "0", "0", "1"}); }), ErrorKind::BaseIncompatible);
  EXPECT_EQ(kind_of([] { Model::matrix_group(0); }), ErrorKind::ConfigInvalid);
  EXPECT_EQ(pt(F2, "D", {"3 + d1", "-1"}).base(), (std::vector<Rational>{3, -1}));
  EXPECT_TRUE(mat(2, "D", {"d1", "0", "0", "0"}).base().empty());
}

TEST(Apply, DiagonalExample) {
  auto x = pt(F1, "D^2", {"7 + 2*d1 + 3*d2 + 5*d1*d2"});
  EXPECT_EQ(apply(std_map("diag"), x), pt(F1, "D", {"7 + 5*d1"}));
  EXPECT_EQ(apply(identity(x.space()), x), x);
  EXPECT_EQ(kind_of([&] { apply(std_map("diag"), pt(F1, "D", {"1"})); }), ErrorKind::SpaceMismatch);
}

TEST(Apply, FunctorLaw) {
  Sampler rng(17);
  auto f = std_map("diff-leg1");   // D^2 -> D^3{13,23}
  auto g = std_map("diff-twist");  // D^3{13,23} -> itself
  for (const auto& model : all_models())
    for (int t = 0; t < 10; ++t) {
      auto x = rng.element(model, g.codomain(), rng.base_point(model));
      EXPECT_EQ(apply(f, apply(g, x)), apply(compose(g, f), x));
    }
}

TEST(Zero, Examples) {
  EXPECT_EQ(zero(F2, {1, 2}, parse_space("D^2")), pt(F2, "D^2", {"1", "2"}));
  EXPECT_EQ(zero(M2, {}, SimplicialSpace::D()), mat(2, "D", {"0", "0", "0", "0"}));
  for (const auto& model : all_models()) {
    Sampler rng(3);
    auto m = rng.base_point(model);
    auto D = SimplicialSpace::D();
    EXPECT_EQ(apply(to_point(D), zero(model, m, SimplicialSpace::point())), zero(model, m, D));
    const auto& pm = product_maps(D, parse_space("D(2)"));
    EXPECT_EQ(apply(pm.p1, zero(model, m, D)), zero(model, m, pm.space));
  }
}

TEST(Anchor, Examples) {
  auto x = pt(F1, "D", {"2 + 3*d1"});
  EXPECT_EQ(anchor(x), x);
  auto g = pt(P1, "D", {"2 + 3*d1"});
  EXPECT_EQ(anchor(g), pt(F1, "D", {"2 + 3*d1"}));
  auto a = anchor(mat(2, "D", {"d1", "2*d1", "0", "-d1"}));
  EXPECT_EQ(a.model(), Model::formal_space(0));
  EXPECT_TRUE(a.coords().empty());
}

TEST(Anchor, Naturality) {
  Sampler rng(5);
  auto f = std_map("shear");
  for (const auto& model : all_models()) {
    auto x = rng.element(model, f.codomain(), rng.base_point(model));
    EXPECT_EQ(anchor(apply(f, x)), apply(f, anchor(x)));
  }
}

TEST(Star, MatrixExample) {
  // ζ(d1)(d2) = I + d2 B, x(d1) = I + d1 A with A = [[1,2],[3,4]], B = [[0,1],[1,0]].
  auto x = mat(2, "D", {"d1", "2*d1", "3*d1", "4*d1"});
  auto zeta = Family<Rational>{SimplicialSpace::D(), SimplicialSpace::D(),
                               mat(2, "D^2", {"0", "d2", "d2", "0"})};
  // BA = [[3,4],[1,2]]
  auto expect = mat(2, "D^2", {"d1 + 3*d1*d2", "2*d1 + d2 + 4*d1*d2", "3*d1 + d2 + d1*d2", "4*d1 + 2*d1*d2"});
  EXPECT_EQ(star(zeta, x), expect);
}

TEST(Star, DegenerateFamilies) {
  Sampler rng(9);
  const auto D = SimplicialSpace::D();
  const auto D2 = SimplicialSpace::cube(2);
  for (const auto& model : all_models()) {
    auto m = rng.base_point(model);
    auto y = rng.element(model, D, m);
    auto z = rng.element(model, D2, m);
    const auto& pm = product_maps(D, D2);
    EXPECT_EQ(star(zero_family_along(y, D2), y), apply(pm.p1, y)) << model.name();
    EXPECT_EQ(star(constant_family(D, z), zero(model, m, D)), apply(pm.p2, z)) << model.name();
  }
}

TEST(Star, BaseIncompatible) {
  auto x = pt(F1, "D", {"1 + d1"});
  auto zeta = constant_family(SimplicialSpace::D(), pt(F1, "D", {"1 + 2*d1"}));
  EXPECT_EQ(kind_of([&] { star(zeta, x); }), ErrorKind::BaseIncompatible);
}

TEST(Star, UnstarInverts) {
  Sampler rng(21);
  const auto D = SimplicialSpace::D();
  for (const auto& model : {F2, P1, M2}) {
    auto m = rng.base_point(model);
    auto x = rng.element(model, D, m);
    auto zeta = rng.family(model, D, D, anchor(x));
    auto y = star(zeta, x);
    auto [z2, x2] = unstar(y, D, D);
    EXPECT_EQ(x2, x);
    EXPECT_EQ(z2.body, zeta.body);
  }
}

TEST(Conjugation, Example) {
  // x(d) = I + dA, y(e) = I + eB; A = [[0,1],[0,0]], B = [[0,0],[1,0]]; AB − BA = diag(1,−1).
  auto x = mat(2, "D", {"0", "d1", "0", "0"});
  auto y = mat(2, "D", {"0", "0", "d1", "0"});
  auto expect = mat(2, "D^2", {"d1*d2", "0", "d2", "-d1*d2"});
  EXPECT_EQ(ad_conjugation(x, y), expect);
  auto id = zero(M2, {}, SimplicialSpace::D());
  EXPECT_EQ(ad_conjugation(id, y), apply(product_maps(y.space(), y.space()).p2, y));
  EXPECT_EQ(kind_of([] { ad_conjugation(pt(F1, "D", {"1"}), pt(F1, "D", {"1"})); }), ErrorKind::WrongModel);
}

TEST(Inverse, NeumannSeries) {
  Sampler rng(2);
  auto x = rng.element(Model::matrix_group(3), parse_space("D^3"), {});
  EXPECT_EQ(matmul(x, matrix_inverse(x)), zero(x.model(), {}, x.space()));
  EXPECT_EQ(matmul(matrix_inverse(x), x), zero(x.model(), {}, x.space()));
}

TEST(PairGroupoid, MatchesStandardModel) {
  Sampler a(31), b(31);
  const auto D = SimplicialSpace::D();
  for (int t = 0; t < 10; ++t) {
    auto xp = a.element(P1, D, a.base_point(P1));
    auto xf = b.element(F1, D, b.base_point(F1));
    auto zp = a.family(P1, D, D, anchor(xp));
    auto zf = b.family(F1, D, D, anchor(xf));
    EXPECT_EQ(anchor(star(zp, xp)), star(zf, xf));
  }
}

TEST(InnerFiber, Dimensions) {
  EXPECT_EQ(inner_fiber_dimension(P1, SimplicialSpace::D()), 0u);
  EXPECT_EQ(inner_fiber_dimension(M2, SimplicialSpace::D()), 4u);
  EXPECT_TRUE(in_anchor_kernel(mat(2, "D", {"d1", "0", "0", "0"})));
  EXPECT_FALSE(in_anchor_kernel(pt(F1, "D", {"1 + d1"})));
}
