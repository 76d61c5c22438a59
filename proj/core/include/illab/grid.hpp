#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "illab/ideal.hpp"
#include "illab/polynomial.hpp"

namespace illab {

struct GridShape {
  int n1 = 1;
  int n2 = 1;
  int d() const { return n1 * n2; }
  bool operator==(const GridShape& o) const { return n1 == o.n1 && n2 == o.n2; }
  bool operator!=(const GridShape& o) const { return !(*this == o); }
};

// Multi-indices alpha < shape in row-major order (alpha_1 outer).
std::vector<Monomial> grid_exponents(const GridShape& shape);
inline int grid_position(const GridShape& shape, const Monomial& alpha) { return alpha.a * shape.n2 + alpha.b; }

template <class C>
struct BasicGrid {
  std::array<std::vector<C>, 2> nodes;
  GridShape shape() const { return {static_cast<int>(nodes[0].size()), static_cast<int>(nodes[1].size())}; }
};

using GridPoints = BasicGrid<Complex>;

// Per-axis coordinate values merged within rel_tol * diameter, kept in order
// of first occurrence.
template <class C>
BasicGrid<C> cluster_grid(const std::vector<std::array<C, 2>>& pts, double rel_tol) {
  using R = decltype(std::abs(C{}));
  R diam = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      diam = std::max(diam, std::hypot(std::abs(pts[i][0] - pts[j][0]), std::abs(pts[i][1] - pts[j][1])));
  const R tol = static_cast<R>(rel_tol) * diam;
  BasicGrid<C> g;
  for (const auto& p : pts)
    for (int j = 0; j < 2; ++j) {
      auto& nodes = g.nodes[static_cast<std::size_t>(j)];
      const C x = p[static_cast<std::size_t>(j)];
      bool found = false;
      for (const auto& b : nodes)
        if (std::abs(x - b) <= tol) {
          found = true;
          break;
        }
      if (!found) nodes.push_back(x);
    }
  return g;
}

GridPoints grid_points(const std::vector<Point>& pts, double rel_tol = 1e-9);
GridShape grid_shape(const std::vector<Point>& pts, double rel_tol = 1e-9);
std::vector<Point> grid_point_list(const GridPoints& grid);

Ideal limit_grid_ideal(const GridShape& shape);

Polynomial newton_basis(const GridPoints& grid, const Monomial& alpha);

// T(beta, alpha) = Psi_alpha(b^beta), row-major on both sides; lower triangular.
Eigen::MatrixXcd newton_evaluation_matrix(const GridPoints& grid);

// Newton coordinates of [f] in O/J_eps by forward substitution; throws
// IllConditionedGrid when 1/|T(alpha, alpha)| exceeds max_growth.
Eigen::VectorXcd quotient_coordinates(const Polynomial& f, const GridPoints& grid, double max_growth = 1e12);

// Same coordinates from the trapezoidal rule for the Cauchy integral of
// f / (phi_{alpha_1 + 1} phi_{alpha_2 + 1}) on the torus of given radius.
Eigen::VectorXcd quadrature_coordinates(const Polynomial& f, const GridPoints& grid, double radius = 1.0,
                                        int nodes = 64);

}  // namespace illab
