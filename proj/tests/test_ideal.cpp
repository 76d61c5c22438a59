#include <gtest/gtest.h>

#include <algorithm>

#include "illab/error.hpp"
#include "illab/green.hpp"
#include "support.hpp"

using namespace illab;
using illab::test::I0;
using illab::test::I1;
using illab::test::J0;
using illab::test::P;

namespace {

bool same_monomials(std::vector<Monomial> a, std::vector<Monomial> b) {
  std::sort(a.begin(), a.end(), GrlexLess{});
  std::sort(b.begin(), b.end(), GrlexLess{});
  return a == b;
}

bool order_ideal(const std::vector<Monomial>& s) {
  for (const auto& m : s) {
    if (m.a > 0 && std::find(s.begin(), s.end(), Monomial{m.a - 1, m.b}) == s.end()) return false;
    if (m.b > 0 && std::find(s.begin(), s.end(), Monomial{m.a, m.b - 1}) == s.end()) return false;
  }
  return true;
}

}  // namespace

TEST(Ideal, PowersOfMaximalIdeal) {
  for (int k = 1; k <= 5; ++k) {
    const Ideal M = Ideal::power_of_maximal(k);
    ASSERT_TRUE(M.length());
    EXPECT_EQ(*M.length(), static_cast<std::size_t>(k * (k + 1) / 2));
    EXPECT_EQ(M.minimal_generators().size(), static_cast<std::size_t>(k + 1));
  }
  EXPECT_TRUE(ideal_equal(Ideal::power_of_maximal(1), test::local({"z1", "z2"})));
  EXPECT_TRUE(ideal_equal(Ideal::power_of_maximal(2), test::local({"z1^2", "z1*z2", "z2^2"})));
}

TEST(Ideal, NamedLimitIdeals) {
  EXPECT_EQ(*I0().length(), 4u);
  EXPECT_EQ(*J0().length(), 4u);
  EXPECT_EQ(*I1().length(), 4u);
  EXPECT_TRUE(same_monomials(I0().staircase(), test::monomials({"1", "z1", "z2", "z1^2"})));
  EXPECT_TRUE(same_monomials(J0().staircase(), test::monomials({"1", "z1", "z2", "z2^2"})));
  EXPECT_TRUE(same_monomials(J0(-3.5).staircase(), test::monomials({"1", "z1", "z2", "z2^2"})));
  EXPECT_TRUE(same_monomials(I1().staircase(), test::monomials({"1", "z1", "z2", "z2^2"})));
}

TEST(Ideal, MinimalGenerators) {
  EXPECT_EQ(I0().minimal_generators().size(), 3u);
  EXPECT_EQ(I1().minimal_generators().size(), 3u);
  // z1^3 = z1 (z1^2 + k z2^2) - k z2 (z1 z2)
  EXPECT_EQ(J0(1.0).minimal_generators().size(), 2u);
  EXPECT_EQ(J0(2.5).minimal_generators().size(), 2u);
  EXPECT_EQ(test::local({"z1^2", "z2^2"}).minimal_generators().size(), 2u);
  EXPECT_TRUE(no_equality(I0()));
  EXPECT_FALSE(no_equality(J0()));
}

TEST(Ideal, NormalForms) {
  EXPECT_TRUE(Ideal::power_of_maximal(2).normal_form(P("z1^2")).is_zero());
  const double k = 2.5;
  const Polynomial nf = J0(k).normal_form(P("z1^2"));
  EXPECT_LE((nf - P("z2^2") * Complex(-k)).max_abs(), 1e-12);
  EXPECT_LE((I0().normal_form(P("1 + z1*z2")) - P("1")).max_abs(), 1e-12);
}

TEST(Ideal, Membership) {
  EXPECT_TRUE(I0().contains(P("z1^3")));
  EXPECT_FALSE(J0().contains(P("z2^2")));
  EXPECT_TRUE(Ideal::power_of_maximal(3).contains(P("z1*z2^2")));
  EXPECT_FALSE(I0().contains(P("z1^2")));
}

TEST(Ideal, ContainmentAndEquality) {
  EXPECT_TRUE(ideal_contains(Ideal::power_of_maximal(2), Ideal::power_of_maximal(3)));
  EXPECT_FALSE(ideal_contains(Ideal::power_of_maximal(3), Ideal::power_of_maximal(2)));
  EXPECT_TRUE(ideal_contains(I0(), Ideal::power_of_maximal(3)));
  EXPECT_TRUE(ideal_contains(Ideal::power_of_maximal(2), I0()));
  EXPECT_FALSE(ideal_equal(I0(), I1()));
  EXPECT_TRUE(ideal_equal(I0(), test::local({"z1*z2 + z2^2", "z2^2", "z1^3 + z1*z2"})));
}

TEST(Ideal, GridIdeal) {
  EXPECT_EQ(*Ideal::monomial_grid(3, 2).length(), 6u);
  EXPECT_TRUE(ideal_equal(Ideal::monomial_grid(2, 2), test::local({"z1^2", "z2^2"})));
}

TEST(VanishingIdeal, Examples) {
  const Ideal m = vanishing_ideal({Point{0.0, 0.0}}, 2);
  EXPECT_EQ(*m.length(), 1u);
  EXPECT_TRUE(m.contains(P("z1")));
  EXPECT_TRUE(m.contains(P("z2")));

  const Ideal a = vanishing_ideal({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}, Point{2.0, 0.0}}, 4);
  EXPECT_EQ(*a.length(), 4u);
  EXPECT_TRUE(a.contains(P("z1*z2")));
  EXPECT_TRUE(a.contains(P("z2^2 - z2")));

  const double e = 0.1;
  const Ideal b = vanishing_ideal({Point{0.0, 0.0}, Point{e, 0.0}, Point{0.0, e}, Point{e, e}});
  EXPECT_EQ(*b.length(), 4u);
  EXPECT_TRUE(b.contains(P("z1^2 - 0.1*z1")));
  EXPECT_TRUE(b.contains(P("z2^2 - 0.1*z2")));
}

TEST(VanishingIdeal, Errors) {
  try {
    vanishing_ideal({Point{0.0, 0.0}, Point{1.0, 1.0}, Point{0.0, 0.0}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoints);
  }
  try {
    vanishing_ideal({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{2.0, 0.0}, Point{3.0, 0.0}}, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapTooSmall);
  }
}

TEST(VanishingIdeal, RandomPointSets) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
    std::vector<Point> pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back(test::random_point(rng, 0.5));
    const Ideal I = vanishing_ideal(pts, static_cast<int>(n));
    ASSERT_TRUE(I.length());
    EXPECT_EQ(*I.length(), n);
    EXPECT_TRUE(order_ideal(I.staircase()));
    for (const auto& g : I.reduced_basis())
      for (const auto& p : pts) EXPECT_LE(std::abs(g(p)), 1e-8 * std::max(1.0, g.term_scale(p)));

    const Polynomial f = test::random_polynomial(rng, 4);
    const Polynomial r = I.normal_form(f);
    for (const auto& [m, c] : r.terms())
      EXPECT_NE(std::find(I.staircase().begin(), I.staircase().end(), m), I.staircase().end());
    EXPECT_LE((I.normal_form(r) - r).max_abs(), 1e-9 * std::max(1.0, r.max_abs()));
    for (const auto& p : pts) EXPECT_LE(std::abs(f(p) - r(p)), 1e-8 * std::max(1.0, f.term_scale(p)));
  }
}

TEST(VanishingIdeal, CollinearPointsGiveLinearGenerator) {
  const Ideal I = vanishing_ideal({Point{0.0, 0.0}, Point{1.0, 2.0}, Point{2.0, 4.0}});
  EXPECT_TRUE(I.contains(P("z2 - 2*z1")));
  EXPECT_EQ(*I.length(), 3u);
}
