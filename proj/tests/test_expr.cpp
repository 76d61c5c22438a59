#include <gtest/gtest.h>

#include <cmath>

#include "illab/error.hpp"
#include "illab/expr.hpp"
#include "illab/geometry.hpp"

using namespace illab;

namespace {
XComplex ev(const char* s, Env env = {}) { return Expr::parse(s).eval(env); }
}  // namespace

TEST(Expr, Arithmetic) {
  EXPECT_EQ(ev("1 + 2*3"), XComplex(7));
  EXPECT_EQ(ev("(1 + 2)*3"), XComplex(9));
  EXPECT_EQ(ev("-2^2"), XComplex(-4));
  EXPECT_EQ(ev("2^3^2"), XComplex(512));
  EXPECT_EQ(ev("7/2"), XComplex(3.5L));
  EXPECT_EQ(ev("(1,2)*i"), XComplex(-2, 1));
}

TEST(Expr, FunctionsAndConstants) {
  EXPECT_NEAR(std::abs(ev("sqrt(-4)") - XComplex(0, 2)), 0.0L, 1e-18L);
  EXPECT_NEAR(std::abs(ev("cbrt(27)") - XComplex(3)), 0.0L, 1e-17L);
  EXPECT_NEAR(std::abs(ev("exp(i*pi)") + XComplex(1)), 0.0L, 1e-17L);
  EXPECT_NEAR(std::abs(ev("log(exp(2))") - XComplex(2)), 0.0L, 1e-17L);
  EXPECT_NEAR(std::abs(ev("sin(pi/2) + cos(0)") - XComplex(2)), 0.0L, 1e-17L);
}

TEST(Expr, IntegerPowersAreExactProducts) {
  const Env env{{"e", XComplex(0.1L)}};
  const XComplex x = ev("e^3", env);
  EXPECT_EQ(x, XComplex(0.1L) * XComplex(0.1L) * XComplex(0.1L));
  EXPECT_NEAR(std::abs(ev("e^(1/2)", env) - std::sqrt(XComplex(0.1L))), 0.0L, 1e-18L);
}

TEST(Expr, Variables) {
  const Env env = bind_parameters({{"rho", Expr::parse("e/2")}, {"delta", Expr::parse("rho*2")}}, 0.2L);
  EXPECT_NEAR(std::abs(Expr::parse("delta").eval(env) - XComplex(0.2L)), 0.0L, 1e-18L);
  EXPECT_EQ(Expr::parse("eps").eval(env), XComplex(0.2L));
  EXPECT_EQ(Expr::parse("ε").eval(env), XComplex(0.2L));
}

TEST(Expr, Errors) {
  EXPECT_THROW(Expr::parse("1 +"), Error);
  EXPECT_THROW(Expr::parse("foo(1)"), Error);
  EXPECT_THROW(Expr::parse("(1"), Error);
  EXPECT_THROW(ev("x + 1"), Error);
  try {
    Expr::parse("2 **");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}
