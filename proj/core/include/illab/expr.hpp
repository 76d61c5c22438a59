#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace illab {

using XComplex = std::complex<long double>;
using Env = std::map<std::string, XComplex, std::less<>>;

// Complex expressions in named variables: + - * / ^, parentheses, complex
// literals (re,im), the constants i and pi, and sqrt, cbrt, exp, log, sin, cos.
// Constant integer exponents are applied by repeated multiplication; other
// exponents use the principal branch.
class Expr {
 public:
  static Expr parse(std::string_view text);
  static Expr constant(XComplex value);

  XComplex eval(const Env& env) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace illab
