#pragma once

#include <vector>

#include "illab/polynomial.hpp"

namespace illab {

// 4x4 Sylvester determinant of two binary quadratic forms.
Complex resultant_binary_quadratics(const Polynomial& f, const Polynomial& g);

// Roots of sum_k c[k] x^k via the companion matrix; trailing zero leading
// coefficients (relative 1e-14) are dropped first.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs);

struct QuadraticSystem {
  std::vector<Point> zeros;
  std::vector<Complex> eliminant;  // ascending coefficients in the sheared variable
  bool common_factor = false;
};

// Common zeros of two polynomials of degree <= 2. center/scale put the
// expected zeros at unit size before elimination.
QuadraticSystem solve_quadratic_system(const Polynomial& f, const Polynomial& g, const Point& center, double scale);

}  // namespace illab
