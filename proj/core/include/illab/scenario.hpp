#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "illab/geometry.hpp"
#include "illab/green.hpp"
#include "illab/limit.hpp"

namespace illab {

// Product of polynomial factors whose coefficients are expressions in e and
// the scenario's definitions.
struct PolynomialFamily {
  std::string name;
  std::vector<std::vector<std::pair<Expr, Polynomial>>> factors;
  std::optional<Polynomial> limit;

  Polynomial at(const Env& env) const;
};

struct RatioExpectation {
  Expr expr;
  std::string limit;  // a number, "0" or "inf"
  double tol = 1e-3;
};

struct Expectations {
  std::optional<Tag> classification;
  std::vector<Polynomial> limit_ideal;
  std::vector<Polynomial> staircase;
  std::optional<std::size_t> generators;
  std::optional<bool> no_equality;
  bool sandwich = false;
  std::optional<double> k;
  double k_tol = 1e-3;
  std::optional<RatioExpectation> ratio;
  bool prop44_constraints = false;
  std::optional<std::pair<double, double>> gap_bounds;
  std::vector<PolynomialFamily> witnesses;
  std::vector<PolynomialFamily> vanishing;
};

struct Scenario {
  std::string name;
  std::string description;
  std::string notes;
  Definitions defines;
  PointFamily family;
  Schedule schedule;
  Precision precision = Precision::Double;
  Expectations expect;
  std::vector<std::string> literature;
};

// Parses a JSON document holding one scenario object or {"scenarios": [...]}.
// Throws Error(Config|Parse).
std::vector<Scenario> parse_scenarios(std::string_view json_text);
std::vector<Scenario> load_scenarios(const std::string& path);

const std::vector<Scenario>& builtin_scenarios();
const Scenario& builtin_scenario(std::string_view name);
std::string_view builtin_catalog_json();

}  // namespace illab
