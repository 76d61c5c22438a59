#pragma once

#include <optional>
#include <string>
#include <vector>

#include "illab/geometry.hpp"
#include "illab/grid.hpp"
#include "illab/ideal.hpp"
#include "illab/subspace.hpp"

namespace illab {

enum class Precision { Double, Extended };

struct LimitOptions {
  double cluster_tol = 1e-9;
  double coincidence_tol = 1e-12;
  double pivot_tol = 1e-12;
  double rank_tol = 1e-9;
  double cleanup_tol = 1e-8;
  double lift_tol = 1e-6;
  SubspaceOptions subspace;
  Precision precision = Precision::Double;
};

struct LimitVerdict {
  LimitStatus status = LimitStatus::NotConverged;
  std::vector<int> dims;
  std::vector<double> gaps;
  double stability = 0;
  Frame limit_frame;
  Frame limsup_frame;
  Frame liminf_frame;
  std::size_t clusters = 0;
  std::string reason;
};

struct LimitIdeal {
  LimitVerdict verdict;
  GridShape shape;
  std::size_t points = 0;
  std::optional<Ideal> ideal;
  std::optional<std::size_t> length;
  bool certified = false;
  std::vector<Polynomial> lifted;
  double coefficient_threshold = 0;
};

// Orthonormal frame of I(S)/J in Newton coordinates (row-major exponents) from
// the column-scaled evaluation kernel.
template <class T>
CMat<T> sample_frame(const std::vector<std::array<std::complex<T>, 2>>& pts, const BasicGrid<std::complex<T>>& grid,
                     double pivot_tol = 1e-12);
extern template CMat<double> sample_frame<double>(const std::vector<std::array<std::complex<double>, 2>>&,
                                                  const BasicGrid<std::complex<double>>&, double);
extern template CMat<long double> sample_frame<long double>(
    const std::vector<std::array<std::complex<long double>, 2>>&, const BasicGrid<std::complex<long double>>&, double);

// Same subspace spanned by Newton coordinates of multiples of the vanishing
// ideal's basis up to degree cap (cap < 0 picks the smallest sufficient one).
Frame ideal_subspace(const std::vector<Point>& pts, int cap = -1, double cluster_tol = 1e-9);

GridShape family_shape(const PointFamily& fam, const Schedule& sch, double cluster_tol = 1e-9);

LimitIdeal limit_ideal(const PointFamily& fam, const Schedule& sch, const LimitOptions& opts = {});

// Reduced echelon basis of the frame with pivots at the largest monomials.
std::vector<Polynomial> lift_frame(const Frame& K, const GridShape& shape, double lift_tol = 1e-6,
                                   double cleanup = 1e-8);

// Frame of I/J inside span{z^alpha : alpha < shape}, row-major.
Frame quotient_frame(const Ideal& I, const GridShape& shape);

enum class Side { Upper, Lower };
bool length_criterion(std::size_t length, std::size_t N, Side side);

}  // namespace illab
