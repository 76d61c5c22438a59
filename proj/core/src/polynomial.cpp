#include "illab/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <system_error>

#include "illab/error.hpp"

namespace illab {

bool grlex_less(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return x.a < y.a;
}

std::vector<Monomial> monomials_upto(int D) {
  std::vector<Monomial> out;
  for (int deg = 0; deg <= D; ++deg)
    for (int a = 0; a <= deg; ++a) out.push_back({a, deg - a});
  return out;
}

std::size_t grlex_index(const Monomial& m) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  return d * (d + 1) / 2 + static_cast<std::size_t>(m.a);
}

std::string monomial_text(const Monomial& m) {
  if (m.a == 0 && m.b == 0) return "1";
  std::string s;
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var("z1", m.a);
  var("z2", m.b);
  return s;
}

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_real(c.real());
  return "(" + format_real(c.real()) + "," + format_real(c.imag()) + ")";
}

Polynomial::Polynomial(Complex c) {
  if (c != Complex(0.0)) terms_[Monomial{}] = c;
}

Polynomial::Polynomial(Monomial m, Complex c) {
  if (c != Complex(0.0)) terms_[m] = c;
}

Polynomial Polynomial::variable(int j) {
  return j == 0 ? Polynomial(Monomial{1, 0}, 1.0) : Polynomial(Monomial{0, 1}, 1.0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

Monomial Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::Numeric, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

Complex Polynomial::leading_coeff() const {
  if (terms_.empty()) return 0.0;
  return terms_.rbegin()->second;
}

Complex Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double Polynomial::max_abs() const {
  double r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

double Polynomial::norm() const {
  double r = 0;
  for (const auto& [m, c] : terms_) r += std::norm(c);
  return std::sqrt(r);
}

bool Polynomial::is_homogeneous(int deg) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, Complex c) {
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Polynomial Polynomial::pruned(double rel_tol) const {
  return pruned_abs(rel_tol * max_abs());
}

Polynomial Polynomial::pruned_abs(double abs_tol) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > abs_tol) out.terms_[m] = c;
  return out;
}

Polynomial Polynomial::truncated(int D) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= D) out.terms_[m] = c;
  return out;
}

Polynomial Polynomial::homogeneous_part(int deg) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == deg) out.terms_[m] = c;
  return out;
}

Polynomial Polynomial::scaled_variables(Complex s1, Complex s2) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * std::pow(s1, m.a) * std::pow(s2, m.b));
  return out;
}

Polynomial Polynomial::compose(const Polynomial& p1, const Polynomial& p2) const {
  int da = 0, db = 0;
  for (const auto& [m, c] : terms_) {
    da = std::max(da, m.a);
    db = std::max(db, m.b);
  }
  std::vector<Polynomial> pw1{Polynomial(1.0)}, pw2{Polynomial(1.0)};
  for (int i = 1; i <= da; ++i) pw1.push_back(pw1.back() * p1);
  for (int i = 1; i <= db; ++i) pw2.push_back(pw2.back() * p2);
  Polynomial out;
  for (const auto& [m, c] : terms_) out += c * (pw1[m.a] * pw2[m.b]);
  return out;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  return *this * (1.0 / leading_coeff());
}

double Polynomial::term_scale(const Point& z) const {
  double s = 0;
  for (const auto& [m, c] : terms_)
    s += std::abs(c) * std::pow(std::abs(z[0]), m.a) * std::pow(std::abs(z[1]), m.b);
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::operator==(const Polynomial& p) const { return terms_ == p.terms_; }

Polynomial pow(const Polynomial& p, int k) {
  Polynomial out(1.0);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const Complex c = it->second;
    const bool constant = m.a == 0 && m.b == 0;
    std::string body;
    if (c.imag() == 0.0) {
      const bool neg = std::signbit(c.real());
      const double mag = std::abs(c.real());
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (constant)
        body = format_real(mag);
      else if (mag == 1.0)
        body = monomial_text(m);
      else
        body = format_real(mag) + "*" + monomial_text(m);
    } else {
      if (!first) s += " + ";
      body = format_complex(c);
      if (!constant) body += "*" + monomial_text(m);
    }
    s += body;
    first = false;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view t) : t_(t) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    double sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    out += sign * term();
    for (;;) {
      skip();
      if (pos_ >= t_.size()) break;
      char op = t_[pos_];
      if (op != '+' && op != '-') fail("expected + or -");
      ++pos_;
      out += (op == '-' ? -1.0 : 1.0) * term();
    }
    return out;
  }

 private:
  Polynomial term() {
    Complex coef = 1.0;
    Monomial mono;
    bool any = false;
    for (;;) {
      skip();
      factor(coef, mono);
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Polynomial(mono, coef);
  }

  void factor(Complex& coef, Monomial& mono) {
    char c = peek();
    if (c == 'z') {
      ++pos_;
      char v = peek();
      if (v != '1' && v != '2') fail("unknown variable");
      ++pos_;
      int e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        e = integer();
      }
      (v == '1' ? mono.a : mono.b) += e;
    } else if (c == 'i') {
      ++pos_;
      coef *= Complex(0, 1);
    } else if (c == '(') {
      ++pos_;
      skip();
      double re = number();
      skip();
      if (peek() != ',') fail("expected , in complex literal");
      ++pos_;
      skip();
      double im = number();
      skip();
      if (peek() != ')') fail("expected )");
      ++pos_;
      coef *= Complex(re, im);
    } else {
      coef *= number();
    }
  }

  double number() {
    double x = 0;
    const char* b = t_.data() + pos_;
    const char* e = t_.data() + t_.size();
    auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc()) fail("expected number");
    pos_ += static_cast<std::size_t>(res.ptr - b);
    return x;
  }

  int integer() {
    int x = 0;
    const char* b = t_.data() + pos_;
    const char* e = t_.data() + t_.size();
    auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc() || x < 0) fail("expected exponent");
    pos_ += static_cast<std::size_t>(res.ptr - b);
    return x;
  }

  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  void skip() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorKind::Parse,
                std::string(what) + " at offset " + std::to_string(pos_) + " in '" + std::string(t_) + "'");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace illab
