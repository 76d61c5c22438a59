#include <gtest/gtest.h>

#include <cmath>

#include "illab/error.hpp"
#include "illab/limit.hpp"
#include "illab/scenario.hpp"
#include "support.hpp"

using namespace illab;
using illab::test::family;
using illab::test::I0;

namespace {

int sample_index(long double eps) { return static_cast<int>(std::lround(std::log2(0.1L / eps))); }

// Fourth point alternates between two configurations sharing the 3x2 grid.
PointFamily alternating() {
  return PointFamily("alternating", [](long double e) {
    const XComplex y = sample_index(e) % 2 ? XComplex(e) : XComplex(0);
    return std::vector<XPoint>{{0, 0}, {e, 0}, {0, e}, {2 * e, y}};
  });
}

}  // namespace

TEST(LimitIdeal, Examples) {
  const Schedule sch = Schedule::geometric();
  const auto sq = limit_ideal(family({{{"0", "0"}}, {{"e", "0"}}, {{"0", "e"}}, {{"e", "e"}}}), sch);
  ASSERT_EQ(sq.verdict.status, LimitStatus::Converged) << sq.verdict.reason;
  EXPECT_TRUE(sq.certified);
  EXPECT_TRUE(ideal_equal(*sq.ideal, test::local({"z1^2", "z2^2"}), 1e-6));

  const auto g2 = limit_ideal(family({{{"0", "0"}}, {{"e", "0"}}, {{"0", "e"}}, {{"2*e", "0"}}}), sch);
  ASSERT_EQ(g2.verdict.status, LimitStatus::Converged) << g2.verdict.reason;
  EXPECT_EQ(g2.shape, (GridShape{3, 2}));
  EXPECT_TRUE(g2.certified);
  EXPECT_TRUE(ideal_equal(*g2.ideal, I0(), 1e-6));

  const auto tri = limit_ideal(family({{{"0", "0"}}, {{"e", "0"}}, {{"0", "e"}}}), sch);
  ASSERT_EQ(tri.verdict.status, LimitStatus::Converged);
  EXPECT_TRUE(tri.certified);
  EXPECT_EQ(*tri.length, 3u);
  EXPECT_TRUE(ideal_equal(*tri.ideal, Ideal::power_of_maximal(2), 1e-6));
}

TEST(LimitIdeal, ExtendedPrecisionAgrees) {
  LimitOptions o;
  o.precision = Precision::Extended;
  const auto r = limit_ideal(family({{{"0", "0"}}, {{"e", "0"}}, {{"0", "e"}}, {{"2*e", "0"}}}),
                             Schedule::geometric(), o);
  ASSERT_TRUE(r.certified);
  EXPECT_TRUE(ideal_equal(*r.ideal, I0(), 1e-6));
}

TEST(LimitIdeal, AlternatingFamilyIsNotConverged) {
  const auto r = limit_ideal(alternating(), Schedule::geometric());
  EXPECT_EQ(r.verdict.status, LimitStatus::NotConverged);
  EXPECT_FALSE(r.ideal.has_value());
  EXPECT_FALSE(r.certified);
  EXPECT_GT(r.verdict.limsup_frame.cols(), r.verdict.liminf_frame.cols());
}

TEST(LimitIdeal, UnstableShape) {
  const PointFamily fam("jump", [](long double e) {
    const XComplex x = e > 0.01L ? XComplex(e) : XComplex(2 * e);
    return std::vector<XPoint>{{0, 0}, {e, 0}, {0, e}, {x, e}};
  });
  try {
    limit_ideal(fam, Schedule::geometric());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnstableShape);
  }
  EXPECT_THROW(family_shape(fam, Schedule::geometric()), Error);
}

TEST(LimitIdeal, LengthCriterion) {
  EXPECT_TRUE(length_criterion(4, 4, Side::Upper));
  EXPECT_FALSE(length_criterion(3, 4, Side::Upper));
  EXPECT_FALSE(length_criterion(6, 4, Side::Lower));
  EXPECT_TRUE(length_criterion(4, 4, Side::Lower));
  EXPECT_THROW(length_criterion(5, 4, Side::Upper), Error);
  EXPECT_THROW(length_criterion(3, 4, Side::Lower), Error);
}

TEST(IdealSubspace, Examples) {
  const double e = 0.05;
  EXPECT_EQ(ideal_subspace({{0.0, 0.0}, {e, 0.0}, {0.0, e}, {e, e}}).cols(), 0);
  EXPECT_EQ(ideal_subspace({{0.0, 0.0}, {e, 0.0}, {0.0, e}, {2 * e, 0.0}}).cols(), 2);
  EXPECT_EQ(ideal_subspace({{0.0, 0.0}, {e, 0.0}, {e * e, e}, {e, e * e}}).cols(), 5);
}

TEST(IdealSubspace, MatchesSampleFrame) {
  for (const auto& s : builtin_scenarios()) {
    const long double eps = 0.1L / 16;
    const auto pts = s.family.at_double(eps);
    const auto grid = grid_points(pts);
    const Frame direct = ideal_subspace(pts);
    EXPECT_EQ(direct.cols(), grid.shape().d() - static_cast<Eigen::Index>(pts.size())) << s.name;
    EXPECT_LE(subspace_gap<double>(direct, sample_frame<double>(pts, grid)), 1e-6) << s.name;
  }
}

TEST(LiftFrame, RoundTripsThroughQuotientFrame) {
  for (const Ideal& I : {I0(), test::I1(), test::J0(2.0), test::local({"z1^2", "z2^2"})}) {
    const GridShape shape{3, 3};
    const Frame K = quotient_frame(I, shape);
    EXPECT_EQ(K.cols(), 9 - 4);
    auto gens = lift_frame(K, shape);
    gens.push_back(Polynomial::parse("z1^3"));
    gens.push_back(Polynomial::parse("z2^3"));
    EXPECT_TRUE(ideal_equal(Ideal::local(gens, 6), I, 1e-8));
  }
}

TEST(LimitIdeal, DiagonalCovariance) {
  std::mt19937_64 rng(31);
  for (const char* name : {"generic_diagonal", "thm24_gamma2"}) {
    const Scenario& s = builtin_scenario(name);
    const auto base = limit_ideal(s.family, s.schedule);
    ASSERT_TRUE(base.certified);
    for (int t = 0; t < 5; ++t) {
      const Complex a = std::polar(std::exp(std::uniform_real_distribution<double>(-1, 1)(rng)), 1.0 * t);
      const Complex b = std::polar(std::exp(std::uniform_real_distribution<double>(-1, 1)(rng)), -0.7 * t);
      Eigen::Matrix2cd A = Eigen::Matrix2cd::Zero();
      A(0, 0) = a;
      A(1, 1) = b;
      const auto moved = limit_ideal(s.family.transformed(A), s.schedule);
      ASSERT_TRUE(moved.certified) << name;
      std::vector<Polynomial> pushed;
      for (const auto& g : base.ideal->reduced_basis()) pushed.push_back(g.scaled_variables(1.0 / a, 1.0 / b));
      EXPECT_TRUE(ideal_equal(*moved.ideal, Ideal::local(pushed, base.ideal->cap()), 1e-6)) << name;
    }
  }
}
