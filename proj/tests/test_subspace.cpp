#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "illab/error.hpp"
#include "support.hpp"

using namespace illab;

namespace {

Frame line(double theta) {
  Frame F(2, 1);
  F << std::cos(theta), std::sin(theta);
  return F;
}

Frame axis(Eigen::Index d, Eigen::Index k) {
  Frame F = Frame::Zero(d, 1);
  F(k, 0) = 1.0;
  return F;
}

}  // namespace

TEST(Gap, Examples) {
  const Frame e1 = axis(2, 0), e2 = axis(2, 1);
  EXPECT_EQ(subspace_gap<double>(e1, e1), 0.0);
  EXPECT_NEAR(subspace_gap<double>(e1, e2), 1.0, 1e-15);
  EXPECT_NEAR(subspace_gap<double>(e1, line(std::numbers::pi / 4)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(subspace_gap<double>(e1, Frame::Identity(2, 2)), 1.0);
  EXPECT_EQ(subspace_gap<double>(Frame(3, 0), Frame(3, 0)), 0.0);
  try {
    subspace_gap<double>(e1, axis(3, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
}

TEST(Gap, MetricAxiomsOnRandomFrames) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 3 + t % 6, k = 1 + t % (d - 1);
    const Frame A = test::random_frame(rng, d, k), B = test::random_frame(rng, d, k);
    EXPECT_LE(std::abs(subspace_gap<double>(A, B) - subspace_gap<double>(B, A)), 1e-12);
    EXPECT_GT(subspace_gap<double>(A, B), 1e-6);
    const Frame AU = A * test::random_unitary(rng, k);
    EXPECT_LE(subspace_gap<double>(A, AU), 1e-12);
    EXPECT_GE(subspace_gap<double>(A, B), 0.0);
    EXPECT_LE(subspace_gap<double>(A, B), 1.0);
  }
}

TEST(Orthonormalize, DropsDependentColumns) {
  Frame M(3, 3);
  M << 1, 2, 0, 0, 0, 1, 1, 2, 0;
  const Frame Q = orthonormalize<double>(M);
  EXPECT_EQ(Q.cols(), 2);
  EXPECT_LE((Q.adjoint() * Q - Frame::Identity(2, 2)).norm(), 1e-14);
}

TEST(SubspaceLimit, ConstantFamily) {
  std::mt19937_64 rng(22);
  const Frame L = test::random_frame(rng, 5, 2);
  const auto r = subspace_limit(std::vector<Frame>(12, L));
  ASSERT_EQ(r.status, LimitStatus::Converged) << r.reason;
  EXPECT_LE(subspace_gap<double>(r.limit, L), 1e-12);
}

TEST(SubspaceLimit, RotatingLine) {
  std::vector<Frame> frames;
  for (int k = 0; k < 12; ++k) frames.push_back(line(0.3 * std::pow(0.5, k)));
  const auto r = subspace_limit(frames);
  ASSERT_EQ(r.status, LimitStatus::Converged) << r.reason;
  EXPECT_LE(subspace_gap<double>(r.limit, axis(2, 0)), 1e-8);
  for (std::size_t k = 0; k < r.gaps.size(); ++k)
    EXPECT_NEAR(r.gaps[k], std::abs(std::sin(0.3 * std::pow(0.5, k) - 0.3 * std::pow(0.5, k + 1))), 1e-12);
}

TEST(SubspaceLimit, AlternatingFamily) {
  std::vector<Frame> frames;
  for (int k = 0; k < 12; ++k) frames.push_back(axis(2, k % 2));
  const auto r = subspace_limit(frames);
  EXPECT_EQ(r.status, LimitStatus::NotConverged);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_EQ(r.limsup.cols(), 2);
  EXPECT_EQ(r.liminf.cols(), 0);
  EXPECT_EQ(r.clusters, 2u);
}

TEST(SubspaceLimit, DimensionJump) {
  std::vector<Frame> frames(11, axis(3, 0));
  frames.push_back(Frame::Identity(3, 2));
  const auto r = subspace_limit(frames);
  EXPECT_EQ(r.status, LimitStatus::NotConverged);
}

TEST(SubspaceLimit, NeedsFourFrames) {
  EXPECT_THROW(subspace_limit(std::vector<Frame>(3, axis(2, 0))), Error);
}

TEST(Aitken, AcceleratesGeometricTails) {
  std::vector<double> x;
  for (int k = 0; k < 10; ++k) x.push_back(2 + 3 * std::pow(0.5, k) + std::pow(0.25, k));
  EXPECT_NEAR(aitken_limit(x, 3), 2.0, 1e-8);
  EXPECT_LT(std::abs(aitken_limit(x, 3) - 2.0), 1e-3 * std::abs(aitken_limit(x, 1) - 2.0));
  EXPECT_EQ(aitken_limit(std::vector<double>(5, 1.5), 2), 1.5);
}
