#include "illab/grid.hpp"

#include <Eigen/Dense>
#include <numbers>

#include "illab/error.hpp"

namespace illab {

std::vector<Monomial> grid_exponents(const GridShape& shape) {
  std::vector<Monomial> out;
  for (int a = 0; a < shape.n1; ++a)
    for (int b = 0; b < shape.n2; ++b) out.push_back({a, b});
  return out;
}

GridPoints grid_points(const std::vector<Point>& pts, double rel_tol) { return cluster_grid(pts, rel_tol); }

GridShape grid_shape(const std::vector<Point>& pts, double rel_tol) { return grid_points(pts, rel_tol).shape(); }

std::vector<Point> grid_point_list(const GridPoints& grid) {
  std::vector<Point> out;
  for (const auto& x : grid.nodes[0])
    for (const auto& y : grid.nodes[1]) out.push_back({x, y});
  return out;
}

Ideal limit_grid_ideal(const GridShape& shape) { return Ideal::monomial_grid(shape.n1, shape.n2); }

namespace {

Complex phi(const std::vector<Complex>& nodes, int k, Complex x) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= x - nodes[static_cast<std::size_t>(i)];
  return r;
}

}  // namespace

Polynomial newton_basis(const GridPoints& grid, const Monomial& alpha) {
  Polynomial p(1.0);
  for (int i = 0; i < alpha.a; ++i)
    p = p * (Polynomial::variable(0) - Polynomial(grid.nodes[0].at(static_cast<std::size_t>(i))));
  for (int i = 0; i < alpha.b; ++i)
    p = p * (Polynomial::variable(1) - Polynomial(grid.nodes[1].at(static_cast<std::size_t>(i))));
  return p;
}

Eigen::MatrixXcd newton_evaluation_matrix(const GridPoints& grid) {
  const GridShape s = grid.shape();
  const auto ex = grid_exponents(s);
  const Eigen::Index d = s.d();
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const Monomial beta = ex[static_cast<std::size_t>(r)];
    const Complex x = grid.nodes[0][static_cast<std::size_t>(beta.a)];
    const Complex y = grid.nodes[1][static_cast<std::size_t>(beta.b)];
    for (Eigen::Index c = 0; c < d; ++c) {
      const Monomial alpha = ex[static_cast<std::size_t>(c)];
      if (!alpha.divides(beta)) continue;
      T(r, c) = phi(grid.nodes[0], alpha.a, x) * phi(grid.nodes[1], alpha.b, y);
    }
  }
  return T;
}

Eigen::VectorXcd quotient_coordinates(const Polynomial& f, const GridPoints& grid, double max_growth) {
  const Eigen::MatrixXcd T = newton_evaluation_matrix(grid);
  const Eigen::Index d = T.rows();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double a = std::abs(T(k, k));
    if (a == 0 || 1 / a > max_growth)
      throw Error(ErrorKind::IllConditionedGrid, "Newton diagonal growth " + format_real(a == 0 ? INFINITY : 1 / a));
  }
  const auto pts = grid_point_list(grid);
  Eigen::VectorXcd v(d);
  for (Eigen::Index k = 0; k < d; ++k) v(k) = f(pts[static_cast<std::size_t>(k)]);
  return T.triangularView<Eigen::Lower>().solve(v);
}

Eigen::VectorXcd quadrature_coordinates(const Polynomial& f, const GridPoints& grid, double radius, int nodes) {
  const GridShape s = grid.shape();
  const auto ex = grid_exponents(s);
  std::vector<Complex> z(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * std::numbers::pi * k / nodes);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(s.d());
  for (int p = 0; p < nodes; ++p)
    for (int q = 0; q < nodes; ++q) {
      const Complex z1 = z[static_cast<std::size_t>(p)], z2 = z[static_cast<std::size_t>(q)];
      const Complex w = f.eval<double>(z1, z2) * z1 * z2;
      for (std::size_t k = 0; k < ex.size(); ++k)
        c(static_cast<Eigen::Index>(k)) +=
            w / (phi(grid.nodes[0], ex[k].a + 1, z1) * phi(grid.nodes[1], ex[k].b + 1, z2));
    }
  return c / double(nodes * nodes);
}

}  // namespace illab
