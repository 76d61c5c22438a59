#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "illab/geometry.hpp"
#include "illab/ideal.hpp"
#include "illab/polynomial.hpp"
#include "illab/subspace.hpp"

namespace illab::test {

inline Polynomial P(const std::string& s) { return Polynomial::parse(s); }

inline Ideal local(const std::vector<std::string>& gens, int cap = -1) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(P(s));
  return Ideal::local(std::move(g), cap);
}

inline Ideal I0() { return local({"z1*z2", "z2^2", "z1^3"}); }
inline Ideal J0(double k = 1.0) {
  return Ideal::local({P("z1*z2"), P("z1^2") + P("z2^2") * Complex(k), P("z1^3")});
}
inline Ideal I1() { return local({"z1*z2", "z1^2", "z2^3"}); }

inline std::vector<Monomial> monomials(const std::vector<std::string>& s) {
  std::vector<Monomial> out;
  for (const auto& t : s) out.push_back(P(t).leading());
  return out;
}

// Family from coordinate expressions in e.
inline PointFamily family(const std::vector<std::array<std::string, 2>>& pts, Definitions defs = {}) {
  std::vector<std::array<Expr, 2>> e;
  for (const auto& p : pts) e.push_back({Expr::parse(p[0]), Expr::parse(p[1])});
  return PointFamily::from_expressions("test", std::move(defs), std::move(e));
}

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng)};
}

inline Point random_point(std::mt19937_64& rng, double scale = 1.0) {
  return {random_complex(rng, scale), random_complex(rng, scale)};
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
  Polynomial f;
  for (const auto& m : monomials_upto(degree)) f.add_term(m, random_complex(rng));
  return f;
}

inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::MatrixXcd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = random_complex(rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

// U diag(1, s) V with s log-uniform in [1/max_cond, 1].
inline Eigen::Matrix2cd random_map(std::mt19937_64& rng, double max_cond) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double s = std::pow(max_cond, -u(rng));
  Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
  D(0, 0) = 1.0;
  D(1, 1) = s;
  return random_unitary(rng, 2) * D * random_unitary(rng, 2);
}

inline Frame random_frame(std::mt19937_64& rng, Eigen::Index d, Eigen::Index k) {
  return random_unitary(rng, d).leftCols(k);
}

}  // namespace illab::test
