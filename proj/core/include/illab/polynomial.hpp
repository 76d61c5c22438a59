#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace illab {

using Complex = std::complex<double>;
using Point = std::array<Complex, 2>;

// Exponent pair (a, b) for z1^a * z2^b.
struct Monomial {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }
  Monomial operator*(const Monomial& m) const { return {a + m.a, b + m.b}; }
  bool operator==(const Monomial& m) const { return a == m.a && b == m.b; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }
};

// Graded lexicographic order with z1 > z2.
bool grlex_less(const Monomial& x, const Monomial& y);

struct GrlexLess {
  bool operator()(const Monomial& x, const Monomial& y) const { return grlex_less(x, y); }
};

// All monomials of total degree <= D in ascending grlex order.
std::vector<Monomial> monomials_upto(int D);

// Position of m in monomials_upto(D) for any D >= deg m.
std::size_t grlex_index(const Monomial& m);

std::string monomial_text(const Monomial& m);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Complex, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(Complex c);
  Polynomial(Monomial m, Complex c);

  static Polynomial variable(int j);
  static Polynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  int order() const;
  Monomial leading() const;
  Complex leading_coeff() const;
  Complex coeff(const Monomial& m) const;
  double max_abs() const;
  double norm() const;
  bool is_homogeneous(int deg) const;

  void add_term(const Monomial& m, Complex c);

  Polynomial pruned(double rel_tol) const;
  Polynomial pruned_abs(double abs_tol) const;
  Polynomial truncated(int D) const;
  Polynomial homogeneous_part(int deg) const;
  Polynomial scaled_variables(Complex s1, Complex s2) const;
  Polynomial compose(const Polynomial& p1, const Polynomial& p2) const;
  Polynomial normalized() const;

  template <class T>
  std::complex<T> eval(std::complex<T> z1, std::complex<T> z2) const {
    std::complex<T> sum = 0;
    for (const auto& [m, c] : terms_) {
      std::complex<T> t(static_cast<T>(c.real()), static_cast<T>(c.imag()));
      for (int i = 0; i < m.a; ++i) t *= z1;
      for (int i = 0; i < m.b; ++i) t *= z2;
      sum += t;
    }
    return sum;
  }
  Complex operator()(const Point& z) const { return eval<double>(z[0], z[1]); }

  // Sum of |c_m| |z^m|, the natural scale for relative vanishing tests.
  double term_scale(const Point& z) const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, Complex s) { return p *= s; }
  friend Polynomial operator*(Complex s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial operator-() const;

  bool operator==(const Polynomial& p) const;
  bool operator!=(const Polynomial& p) const { return !(*this == p); }

 private:
  Terms terms_;
};

Polynomial pow(const Polynomial& p, int k);

// Shortest text that parses back to the same double.
std::string format_real(double x);
std::string format_complex(Complex c);

}  // namespace illab
