#include <gtest/gtest.h>

#include <random>

#include "weilgroid/simp.hpp"

using namespace weilgroid;

namespace {

SimplicialSpace S(const char* t) { return parse_space(t); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ConfigInvalid;
}

}  // namespace

TEST(Morphism, Validation) {
  EXPECT_NO_THROW(parse_morphism(S("D(2)"), S("D"), "(d1,d2) -> d1 + d2"));
  EXPECT_NO_THROW(parse_morphism(S("D^2"), S("D"), "(d1,d2) -> d1*d2"));
  EXPECT_EQ(kind_of([] { parse_morphism(S("D^2"), S("D"), "(d1,d2) -> d1 + d2"); }),
            ErrorKind::NonNilpotentComponent);
  EXPECT_EQ(kind_of([] { parse_morphism(S("D"), S("D"), "d -> 1 + d"); }), ErrorKind::NonzeroConstant);
  EXPECT_EQ(kind_of([] { parse_morphism(S("D^2"), S("D(2)"), "(a,b) -> (a, b)"); }), ErrorKind::PatternViolation);
  EXPECT_EQ(kind_of([] { SimpMorphism(S("D"), S("D"), {Weil::generator(S("D^2"), 1)}); }),
            ErrorKind::DomainMismatch);
  EXPECT_EQ(kind_of([] { parse_morphism(S("D"), S("D^2"), "d -> (d)"); }), ErrorKind::Parse);
}

TEST(Morphism, ComposeExamples) {
  auto f = parse_morphism(S("D^2"), S("D^2"), "(d1,d2) -> (d2, d1)");
  EXPECT_EQ(compose(f, f), identity(S("D^2")));
  auto first = parse_morphism(S("D"), S("D^2"), "d -> (d, 0)");
  auto mult = parse_morphism(S("D^2"), S("D"), "(d1,d2) -> d1*d2");
  EXPECT_EQ(compose(mult, first), zero_map(S("D"), S("D")));
  EXPECT_EQ(compose(identity(S("D^2")), first), first);
  try {
    compose(first, first);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}

TEST(Pullback, Examples) {
  auto diag = parse_morphism(S("D"), S("D^2"), "d -> (d, d)");
  Matrix m = diag.matrix();
  // rows {1, d}, columns {1, d1, d2, d1d2}
  Matrix expect(2, 4);
  expect(0, 0) = 1;
  expect(1, 1) = 1;
  expect(1, 2) = 1;
  EXPECT_EQ(m, expect);
  auto mult = parse_morphism(S("D^2"), S("D"), "(d1,d2) -> d1*d2");
  Matrix mm(4, 2);
  mm(0, 0) = 1;
  mm(3, 1) = 1;
  EXPECT_EQ(mult.matrix(), mm);
  EXPECT_EQ(identity(S("D^3{12}")).matrix(), Matrix::identity(S("D^3{12}").dimension()));
}

TEST(Pullback, CompositeIsContravariantProduct) {
  std::mt19937_64 rng(5);
  std::vector<SimplicialSpace> spaces = {S("D"), S("D^2"), S("D(2)"), S("D^3{12}"), S("D^3")};
  auto random_map = [&](const SimplicialSpace& a, const SimplicialSpace& b) -> std::optional<SimpMorphism> {
    for (int tries = 0; tries < 50; ++tries) {
      std::vector<Weil> comps;
      for (int j = 0; j < b.generators(); ++j) {
        Weil c(a);
        for (std::size_t k = 1; k < a.dimension(); ++k)
          if (rng() % 3 == 0) c[k] = Rational(static_cast<long>(rng() % 7) - 3);
        comps.push_back(c);
      }
      try {
        return SimpMorphism(a, b, comps);
      } catch (const Error&) {
      }
    }
    return std::nullopt;
  };
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const auto& a = spaces[rng() % spaces.size()];
    const auto& b = spaces[rng() % spaces.size()];
    const auto& c = spaces[rng() % spaces.size()];
    auto f = random_map(a, b);
    auto g = random_map(b, c);
    if (!f || !g) continue;
    EXPECT_EQ(compose(*g, *f).matrix(), f->matrix() * g->matrix());
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Permutation, Action) {
  EXPECT_EQ(permutation(2, {1, 2}), identity(S("D^2")));
  EXPECT_EQ(permutation(2, {2, 1}), parse_morphism(S("D^2"), S("D^2"), "(a,b) -> (b,a)"));
  auto c = permutation(3, {2, 3, 1});
  EXPECT_EQ(compose(c, c), permutation(3, {3, 1, 2}));
  EXPECT_THROW(permutation(3, {1, 1, 2}), Error);
}

TEST(Structure, ProductAndOplusMaps) {
  for (auto [a, b] : {std::pair{S("D"), S("D")}, {S("D(2)"), S("D")}, {S("1"), S("D^2")}}) {
    auto pm = product_with_maps(a, b);
    EXPECT_EQ(compose(pm.p1, pm.i1), identity(a));
    EXPECT_EQ(compose(pm.p2, pm.i2), identity(b));
    auto om = oplus_with_maps(a, b);
    EXPECT_EQ(compose(om.to_product, om.i1), pm.i1);
    EXPECT_EQ(compose(om.to_product, om.i2), pm.i2);
  }
}

TEST(Parse, Forms) {
  auto f = parse_morphism(S("D^2"), S("D^2"), "(x, y) -> (y, 2*x*y)");
  EXPECT_EQ(f.components()[1], Weil::monomial(S("D^2"), 0b11, Rational(2)));
  EXPECT_NO_THROW(parse_morphism(S("1"), S("D"), "() -> (0)"));
  EXPECT_NO_THROW(parse_morphism(S("D"), S("1"), "d -> ()"));
  try {
    parse_morphism(S("D^2"), S("D"), "(d1,d2) -> d1 +* d2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 12u);
  }
}
