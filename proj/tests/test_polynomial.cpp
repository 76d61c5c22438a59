#include <gtest/gtest.h>

#include "illab/error.hpp"
#include "support.hpp"

using namespace illab;
using illab::test::P;

TEST(Monomial, GrlexOrderPutsZ1First) {
  EXPECT_TRUE(grlex_less({0, 1}, {1, 0}));
  EXPECT_TRUE(grlex_less({1, 0}, {0, 2}));
  EXPECT_TRUE(grlex_less({1, 1}, {2, 0}));
  EXPECT_FALSE(grlex_less({2, 0}, {2, 0}));
}

TEST(Monomial, GrlexIndexMatchesEnumeration) {
  const auto ms = monomials_upto(6);
  ASSERT_EQ(ms.size(), 28u);
  for (std::size_t k = 0; k < ms.size(); ++k) EXPECT_EQ(grlex_index(ms[k]), k);
  for (std::size_t k = 1; k < ms.size(); ++k) EXPECT_TRUE(grlex_less(ms[k - 1], ms[k]));
}

TEST(Polynomial, ParseAndPrint) {
  const Polynomial f = P("z1^2 - 3*z1*z2 + (0,2)*z2 + 1");
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.coeff({2, 0}), Complex(1));
  EXPECT_EQ(f.coeff({1, 1}), Complex(-3));
  EXPECT_EQ(f.coeff({0, 1}), Complex(0, 2));
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.order(), 0);
  EXPECT_EQ(f.leading(), (Monomial{2, 0}));
  EXPECT_EQ(Polynomial::parse(f.to_string()), f);
  EXPECT_EQ(P("z1*z1*z2"), P("z1^2*z2"));
  EXPECT_EQ(P("i*z2"), Polynomial(Monomial{0, 1}, Complex(0, 1)));
}

TEST(Polynomial, ParseRejectsGarbage) {
  EXPECT_THROW(P("z3"), Error);
  EXPECT_THROW(P("z1 +"), Error);
  EXPECT_THROW(P("z1^-1"), Error);
  try {
    P("z1 ? z2");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(Polynomial, ArithmeticDropsZeros) {
  const Polynomial f = P("z1 + z2");
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f * f, P("z1^2 + 2*z1*z2 + z2^2"));
  EXPECT_EQ((P("z1 - z2") * P("z1 + z2")), P("z1^2 - z2^2"));
  EXPECT_EQ(pow(f, 3).size(), 4u);
  EXPECT_TRUE((f * Complex(0)).is_zero());
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = test::random_polynomial(rng, 3);
    const auto b = test::random_polynomial(rng, 2);
    const auto c = test::random_polynomial(rng, 2);
    const double scale = a.max_abs() * b.max_abs() * c.max_abs() * 100;
    EXPECT_LE(((a * b) * c - a * (b * c)).max_abs(), 1e-12 * scale);
    EXPECT_LE((a * b - b * a).max_abs(), 1e-12 * scale);
    EXPECT_LE((a * (b + c) - (a * b + a * c)).max_abs(), 1e-12 * scale);
  }
}

TEST(Polynomial, EvaluationAndParts) {
  const Polynomial f = P("z1^2*z2 + 2*z1 - 5");
  EXPECT_EQ(f(Point{Complex(2), Complex(3)}), Complex(12 + 4 - 5));
  EXPECT_EQ(f.homogeneous_part(3), P("z1^2*z2"));
  EXPECT_EQ(f.truncated(1), P("2*z1 - 5"));
  EXPECT_TRUE(P("z1^2 + z1*z2").is_homogeneous(2));
  EXPECT_FALSE(f.is_homogeneous(3));
  EXPECT_EQ(P("z1*z2").scaled_variables(2.0, 3.0), P("6*z1*z2"));
  EXPECT_EQ(P("z1^2").compose(P("z1 + z2"), P("z2")), P("z1^2 + 2*z1*z2 + z2^2"));
  const Polynomial n = P("3*z1 + 4*z2").normalized();
  EXPECT_EQ(n.leading_coeff(), Complex(1));
  EXPECT_NEAR(std::abs(n(Point{Complex(0), Complex(1)}) - 4.0 / 3), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(P("3*z1 - 4").term_scale(Point{Complex(2), Complex(0)}), 10.0);
}

TEST(Polynomial, Pruning) {
  const Polynomial f = P("1 + 1e-12*z1 + 1e-3*z2");
  EXPECT_EQ(f.pruned(1e-9), P("1 + 0.001*z2"));
  EXPECT_EQ(f.pruned_abs(1e-2), P("1"));
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(-2), "-2");
  EXPECT_EQ(format_complex(Complex(1, -1)), "(1,-1)");
  EXPECT_EQ(std::stod(format_real(1.0 / 3.0)), 1.0 / 3.0);
}
