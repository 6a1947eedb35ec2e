#include <gtest/gtest.h>

#include "support.hpp"

using namespace weilgroid;
using support::kind_of;
using support::mat;
using support::pt;

namespace {

const Model F1 = Model::formal_space(1);
const Model M2 = Model::matrix_group(2);

}  // namespace

TEST(Module, Examples) {
  auto x = pt(F1, "D", {"4 + 2*d1"});
  EXPECT_EQ(add(x, pt(F1, "D", {"4 + 3*d1"})), pt(F1, "D", {"4 + 5*d1"}));
  EXPECT_EQ(add(x, zero(F1, {4}, SimplicialSpace::D())), x);
  EXPECT_EQ(scalar(Rational(2), pt(F1, "D", {"4 + 3*d1"})), pt(F1, "D", {"4 + 6*d1"}));
  EXPECT_EQ(negate(x), pt(F1, "D", {"4 - 2*d1"}));
  EXPECT_EQ(kind_of([&] { add(x, pt(F1, "D", {"5 + 2*d1"})); }), ErrorKind::Incompatible);
  EXPECT_EQ(kind_of([&] { add(x, pt(F1, "D^2", {"4"})); }), ErrorKind::SpaceMismatch);
}

TEST(Module, MatrixAdditionIsEntrywise) {
  auto x = mat(2, "D", {"d1", "2*d1", "0", "-d1"});
  auto y = mat(2, "D", {"3*d1", "0", "d1", "d1"});
  EXPECT_EQ(add(x, y), mat(2, "D", {"4*d1", "2*d1", "d1", "0"}));
}

TEST(SlotScale, Examples) {
  auto x = pt(F1, "D^2", {"7 + 2*d1 + 3*d2 + 5*d1*d2"});
  EXPECT_EQ(slot_scale(Rational(1), 1, x), x);
  EXPECT_EQ(slot_scale(Rational(0), 1, x), pt(F1, "D^2", {"7 + 3*d2"}));
  EXPECT_EQ(slot_scale(Rational(2), 1, slot_scale(Rational(3), 1, x)), slot_scale(Rational(6), 1, x));
  EXPECT_EQ(slot_scale_by(Rational(6), 1, x), slot_scale(Rational(6), 1, x));
  EXPECT_EQ(kind_of([&] { slot_scale(Rational(2), 3, x); }), ErrorKind::BadSlot);
}

TEST(StrongDiff, HandSolved) {
  auto x = pt(F1, "D^2", {"1 + 2*d1 + 3*d2 + 5*d1*d2"});
  auto y = pt(F1, "D^2", {"1 + 2*d1 + 3*d2 + 9*d1*d2"});
  EXPECT_EQ(strong_diff(y, x), pt(F1, "D", {"1 + 4*d1"}));
  EXPECT_EQ(strong_diff(x, x), zero(F1, {1}, SimplicialSpace::D()));
  auto tw = std_map("twist");
  EXPECT_EQ(strong_diff(apply(tw, y), apply(tw, x)), strong_diff(y, x));
  EXPECT_EQ(kind_of([&] { strong_diff(y, pt(F1, "D^2", {"1 + 2*d1 + 4*d2"})); }), ErrorKind::Incompatible);
}

TEST(StrongDiff, SlotsHandSolved) {
  const char* base = "2 + d1 + 3*d2 - d3 + 7*d1*d2 - 4*d1*d3 + 6*d2*d3 + 8*d1*d2*d3";
  auto x = pt(F1, "D^3", {base});
  auto plus = [&](const std::string& extra) { return pt(F1, "D^3", {std::string(base) + " + " + extra}); };
  EXPECT_EQ(strong_diff_slot(1, plus("5*d2*d3 - 2*d1*d2*d3"), x), pt(F1, "D^2", {"2 + d1 + 5*d2 - 2*d1*d2"}));
  EXPECT_EQ(strong_diff_slot(2, plus("5*d1*d3 - 2*d1*d2*d3"), x), pt(F1, "D^2", {"2 + 3*d1 + 5*d2 - 2*d1*d2"}));
  EXPECT_EQ(strong_diff_slot(3, plus("5*d1*d2 - 2*d1*d2*d3"), x), pt(F1, "D^2", {"2 - d1 + 5*d2 - 2*d1*d2"}));
  // y = x leaves only the first-slot trace x(d1,0,0).
  EXPECT_EQ(strong_diff_slot(1, x, x), pt(F1, "D^2", {"2 + d1"}));
  EXPECT_EQ(kind_of([&] { strong_diff_slot(1, plus("d1*d2"), x); }), ErrorKind::Incompatible);
  EXPECT_EQ(kind_of([&] { strong_diff_slot(4, x, x); }), ErrorKind::BadSlot);
}

TEST(Circledast, MatrixExample) {
  auto x = mat(2, "D", {"d1", "2*d1", "3*d1", "4*d1"});
  auto y = mat(2, "D", {"0", "d1", "d1", "0"});
  auto expect = mat(2, "D^2", {"d1 + 3*d1*d2", "2*d1 + d2 + 4*d1*d2", "3*d1 + d2 + d1*d2", "4*d1 + 2*d1*d2"});
  EXPECT_EQ(circledast(y, x), expect);
  EXPECT_EQ(apply(std_map("first"), circledast(y, x)), x);
  EXPECT_EQ(apply(std_map("second"), circledast(y, x)), y);
  EXPECT_EQ(apply(std_map("diag"), circledast(y, x)), add(x, y));
}

TEST(Bracket, MatrixExample) {
  auto x = mat(2, "D", {"0", "d1", "0", "0"});
  auto y = mat(2, "D", {"0", "0", "d1", "0"});
  // BA − AB with A = E12, B = E21.
  EXPECT_EQ(bracket(x, y), mat(2, "D", {"-d1", "0", "0", "d1"}));
  EXPECT_EQ(bracket(y, x), mat(2, "D", {"d1", "0", "0", "-d1"}));
  EXPECT_EQ(bracket(x, x), zero(M2, {}, SimplicialSpace::D()));
  EXPECT_EQ(bracket_by_strong_diff(x, y), bracket(x, y));
}

TEST(Bracket, RequiresAnchorKernel) {
  auto x = pt(F1, "D", {"1 + d1"});
  EXPECT_EQ(kind_of([&] { bracket(x, x); }), ErrorKind::NotInKernel);
}

TEST(Euclid, Examples) {
  const auto D = SimplicialSpace::D();
  // φ(d)(e) = m + (3 + 7d)e with index d = d1, value e = d2.
  Family<Rational> phi{D, D, pt(F1, "D^2", {"5 + 3*d2 + 7*d1*d2"})};
  EXPECT_EQ(euclid_derivative(phi), pt(F1, "D", {"5 + 7*d1"}));
  EXPECT_EQ(euclid_family(family_at_zero(phi), euclid_derivative(phi)).body, phi.body);
  Family<Rational> constant{D, D, pt(F1, "D^2", {"5 + 3*d2"})};
  EXPECT_EQ(euclid_derivative(constant), zero(F1, {5}, D));
  auto mphi = Family<Rational>{D, D, mat(2, "D^2", {"d2 + d1*d2", "-2*d1*d2", "3*d2", "0"})};
  EXPECT_EQ(euclid_derivative(mphi), mat(2, "D", {"d1", "-2*d1", "0", "0"}));
}

TEST(Ad, DifferenceIsCommutatorInConjugationOrder) {
  auto x = mat(2, "D", {"d1", "2*d1", "3*d1", "4*d1"});
  auto y = mat(2, "D", {"0", "d1", "d1", "0"});
  // A = [[1,2],[3,4]], B = [[0,1],[1,0]]: AB − BA = [[-1,-3],[3,1]].
  auto diff = ad_difference(x, y);
  EXPECT_EQ(diff.body, mat(2, "D^2", {"-d1*d2", "-3*d1*d2", "3*d1*d2", "d1*d2"}));
  EXPECT_EQ(diff.body, scaled_family(bracket(y, x)).body);
  EXPECT_FALSE(diff.body == scaled_family(bracket(x, y)).body);
}

TEST(Families, AddAndStrongDiff) {
  Sampler rng(4);
  const auto D = SimplicialSpace::D();
  const auto D2 = SimplicialSpace::cube(2);
  auto m = rng.base_point(F1);
  auto a = rng.family_at(F1, D, D, m);
  auto b = rng.family_at(F1, D, D, m);
  auto sum = family_add(a, b);
  // Pointwise oracle at d = 0.
  EXPECT_EQ(family_at_zero(sum), add(family_at_zero(a), family_at_zero(b)));
  auto z1 = rng.family_at(F1, D, D2, m);
  Family<Rational> z2{D, D2, rng.agreeing(z1.body, lifted_map(D, "incl12"))};
  EXPECT_EQ(family_at_zero(family_strong_diff(z2, z1)), strong_diff(family_at_zero(z2), family_at_zero(z1)));
}
