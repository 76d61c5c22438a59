#include "illab/resultant.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "illab/error.hpp"

namespace illab {

namespace {

using UPoly = std::vector<Complex>;

UPoly umul(const UPoly& p, const UPoly& q) {
  if (p.empty() || q.empty()) return {};
  UPoly r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

UPoly usub(const UPoly& p, const UPoly& q) {
  UPoly r(std::max(p.size(), q.size()), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
  return r;
}

Complex ueval(const UPoly& p, Complex x) {
  Complex s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

// f = A(x) y^2 + B(x) y + C(x)
struct InY {
  UPoly A, B, C;
};

InY split(const Polynomial& f) {
  InY s{UPoly(3, 0.0), UPoly(3, 0.0), UPoly(3, 0.0)};
  for (const auto& [m, c] : f.terms()) {
    if (m.a > 2) continue;
    UPoly* t = m.b == 2 ? &s.A : m.b == 1 ? &s.B : &s.C;
    (*t)[static_cast<std::size_t>(m.a)] += c;
  }
  return s;
}

}  // namespace

Complex resultant_binary_quadratics(const Polynomial& f, const Polynomial& g) {
  if (!f.is_homogeneous(2) || !g.is_homogeneous(2))
    throw Error(ErrorKind::NotHomogeneous, "resultant needs binary quadratic forms");
  const Complex a0 = f.coeff({2, 0}), a1 = f.coeff({1, 1}), a2 = f.coeff({0, 2});
  const Complex b0 = g.coeff({2, 0}), b1 = g.coeff({1, 1}), b2 = g.coeff({0, 2});
  Eigen::Matrix4cd S;
  S << a0, a1, a2, 0, 0, a0, a1, a2, b0, b1, b2, 0, 0, b0, b1, b2;
  return S.determinant();
}

std::vector<Complex> polynomial_roots(std::vector<Complex> c) {
  double mx = 0;
  for (auto x : c) mx = std::max(mx, std::abs(x));
  if (mx == 0) return {};
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * mx) c.pop_back();
  const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
  if (n <= 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) C(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

QuadraticSystem solve_quadratic_system(const Polynomial& f, const Polynomial& g, const Point& center,
                                       double scale) {
  if (f.degree() > 2 || g.degree() > 2) throw Error(ErrorKind::Numeric, "system solver expects degree <= 2");
  const Complex shear(0.3719, 0.2113);
  // z1 = c1 + s (u1 - shear u2), z2 = c2 + s u2
  const Polynomial p1 =
      Polynomial(center[0]) + Polynomial(Monomial{1, 0}, scale) + Polynomial(Monomial{0, 1}, -scale * shear);
  const Polynomial p2 = Polynomial(center[1]) + Polynomial(Monomial{0, 1}, scale);
  Polynomial F = f.compose(p1, p2), G = g.compose(p1, p2);
  if (F.max_abs() > 0) F *= 1.0 / F.max_abs();
  if (G.max_abs() > 0) G *= 1.0 / G.max_abs();

  const InY a = split(F), b = split(G);
  const UPoly ACp = usub(umul(a.A, b.C), umul(b.A, a.C));
  const UPoly ABp = usub(umul(a.A, b.B), umul(b.A, a.B));
  const UPoly BCp = usub(umul(a.B, b.C), umul(b.B, a.C));
  UPoly res = usub(umul(ACp, ACp), umul(ABp, BCp));

  QuadraticSystem out;
  out.eliminant = res;
  double mx = 0;
  for (auto x : res) mx = std::max(mx, std::abs(x));
  if (mx <= 1e-12) {
    out.common_factor = true;
    return out;
  }

  auto deriv = [](const Polynomial& P, int j) {
    Polynomial d;
    for (const auto& [m, c] : P.terms()) {
      if (j == 0 && m.a > 0) d.add_term({m.a - 1, m.b}, c * double(m.a));
      if (j == 1 && m.b > 0) d.add_term({m.a, m.b - 1}, c * double(m.b));
    }
    return d;
  };
  const Polynomial F1 = deriv(F, 0), F2 = deriv(F, 1), G1 = deriv(G, 0), G2 = deriv(G, 1);

  for (Complex u1 : polynomial_roots(res)) {
    Complex u2;
    const Complex den = -ueval(ABp, u1);
    const Complex num = ueval(ACp, u1);
    if (std::abs(den) > 1e-8) {
      u2 = num / den;
    } else {
      const Complex A = ueval(a.A, u1), B = ueval(a.B, u1), C = ueval(a.C, u1);
      std::vector<Complex> cands = polynomial_roots({C, B, A});
      if (cands.empty()) cands.push_back(0.0);
      u2 = cands[0];
      double best = std::abs(G.eval<double>(u1, u2));
      for (auto y : cands) {
        double v = std::abs(G.eval<double>(u1, y));
        if (v < best) {
          best = v;
          u2 = y;
        }
      }
    }
    for (int it = 0; it < 6; ++it) {
      const Complex fv = F.eval<double>(u1, u2), gv = G.eval<double>(u1, u2);
      const Complex j11 = F1.eval<double>(u1, u2), j12 = F2.eval<double>(u1, u2);
      const Complex j21 = G1.eval<double>(u1, u2), j22 = G2.eval<double>(u1, u2);
      const Complex det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-14) break;
      const Complex d1 = (j22 * fv - j12 * gv) / det;
      const Complex d2 = (j11 * gv - j21 * fv) / det;
      u1 -= d1;
      u2 -= d2;
      if (std::abs(d1) + std::abs(d2) < 1e-16) break;
    }
    out.zeros.push_back({center[0] + scale * (u1 - shear * u2), center[1] + scale * u2});
  }
  return out;
}

}  // namespace illab
