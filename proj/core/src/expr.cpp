#include "illab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "illab/error.hpp"

namespace illab {

struct Expr::Node {
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow, IntPow, Call };
  Op op = Op::Num;
  XComplex value{};
  std::string name;
  long exponent = 0;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;
using Op = Expr::Node::Op;

NodeP make(Op op, std::vector<NodeP> kids = {}) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}

NodeP num(XComplex v) {
  auto n = std::make_shared<Expr::Node>();
  n->value = v;
  return n;
}

bool has_vars(const NodeP& n) {
  if (n->op == Op::Var) return true;
  for (const auto& k : n->kids)
    if (has_vars(k)) return true;
  return false;
}

XComplex ipow(XComplex x, long e) {
  if (e < 0) return XComplex(1) / ipow(x, -e);
  XComplex r = 1;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

XComplex evaluate(const NodeP& n, const Env& env) {
  switch (n->op) {
    case Op::Num: return n->value;
    case Op::Var: {
      auto it = env.find(n->name);
      if (it == env.end()) throw Error(ErrorKind::Config, "unbound variable '" + n->name + "'");
      return it->second;
    }
    case Op::Add: return evaluate(n->kids[0], env) + evaluate(n->kids[1], env);
    case Op::Sub: return evaluate(n->kids[0], env) - evaluate(n->kids[1], env);
    case Op::Mul: return evaluate(n->kids[0], env) * evaluate(n->kids[1], env);
    case Op::Div: return evaluate(n->kids[0], env) / evaluate(n->kids[1], env);
    case Op::Neg: return XComplex(0) - evaluate(n->kids[0], env);
    case Op::IntPow: return ipow(evaluate(n->kids[0], env), n->exponent);
    case Op::Pow: {
      const XComplex b = evaluate(n->kids[0], env), e = evaluate(n->kids[1], env);
      if (b == XComplex(0)) return 0;
      return std::exp(e * std::log(b));
    }
    case Op::Call: {
      const XComplex x = evaluate(n->kids[0], env);
      if (n->name == "sqrt") return std::sqrt(x);
      if (n->name == "cbrt") return x == XComplex(0) ? XComplex(0) : std::exp(std::log(x) / 3.0L);
      if (n->name == "exp") return std::exp(x);
      if (n->name == "log") return std::log(x);
      if (n->name == "sin") return std::sin(x);
      if (n->name == "cos") return std::cos(x);
      break;
    }
  }
  throw Error(ErrorKind::Config, "bad expression node");
}

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  NodeP parse() {
    NodeP n = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  NodeP expr() {
    NodeP n = term();
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return n;
      ++pos_;
      n = make(c == '+' ? Op::Add : Op::Sub, {n, term()});
    }
  }

  NodeP term() {
    NodeP n = unary();
    for (;;) {
      skip();
      char c = peek();
      if (c != '*' && c != '/') return n;
      ++pos_;
      n = make(c == '*' ? Op::Mul : Op::Div, {n, unary()});
    }
  }

  NodeP unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return make(Op::Neg, {unary()});
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  NodeP power() {
    NodeP base = primary();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    NodeP ex = unary();
    if (!has_vars(ex)) {
      const XComplex v = evaluate(ex, {});
      const long double r = std::round(v.real());
      if (v.imag() == 0 && v.real() == r && std::fabs(r) < 1e6) {
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::IntPow;
        n->exponent = static_cast<long>(r);
        n->kids = {base};
        return n;
      }
    }
    return make(Op::Pow, {base, ex});
  }

  NodeP primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodeP a = expr();
      skip();
      if (peek() == ',') {
        ++pos_;
        NodeP b = expr();
        skip();
        expect(')');
        return make(Op::Add, {a, make(Op::Mul, {num(XComplex(0, 1)), b})});
      }
      expect(')');
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (is_ident(c)) {
      std::string id;
      while (pos_ < t_.size() && (is_ident(t_[pos_]) || std::isdigit(static_cast<unsigned char>(t_[pos_]))))
        id += t_[pos_++];
      skip();
      if (peek() == '(') {
        static const char* fns[] = {"sqrt", "cbrt", "exp", "log", "sin", "cos"};
        bool known = false;
        for (auto f : fns) known = known || id == f;
        if (!known) fail(("unknown function '" + id + "'").c_str());
        ++pos_;
        NodeP arg = expr();
        skip();
        expect(')');
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::Call;
        n->name = id;
        n->kids = {arg};
        return n;
      }
      if (id == "i") return num(XComplex(0, 1));
      if (id == "pi") return num(XComplex(3.141592653589793238462643383279502884L));
      auto n = std::make_shared<Expr::Node>();
      n->op = Op::Var;
      n->name = id;
      return n;
    }
    fail("expected a value");
  }

  NodeP number() {
    std::string s(t_.substr(pos_));
    char* end = nullptr;
    long double v = std::strtold(s.c_str(), &end);
    if (end == s.c_str()) fail("bad number");
    pos_ += static_cast<std::size_t>(end - s.c_str());
    return num(XComplex(v));
  }

  static bool is_ident(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
  }
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail((std::string("expected '") + c + "'").c_str());
    ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorKind::Parse,
                std::string(what) + " at offset " + std::to_string(pos_) + " in '" + std::string(t_) + "'");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

Expr Expr::constant(XComplex value) {
  Expr e;
  e.root_ = num(value);
  e.text_ = "constant";
  return e;
}

XComplex Expr::eval(const Env& env) const { return evaluate(root_, env); }

}  // namespace illab
