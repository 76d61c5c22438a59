#include "illab/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "illab/error.hpp"

namespace illab {

namespace detail {
extern const std::string_view builtin_catalog;
}

namespace {

using json = nlohmann::json;

[[noreturn]] void config_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Config, where + ": " + what);
}

std::string text_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  config_error(where, "expected a string or number");
}

Expr expr_of(const json& j, const std::string& where) {
  try {
    return Expr::parse(text_of(j, where));
  } catch (const Error& e) {
    config_error(where, e.what());
  }
}

Polynomial poly_of(const json& j, const std::string& where) {
  try {
    return Polynomial::parse(text_of(j, where));
  } catch (const Error& e) {
    config_error(where, e.what());
  }
}

PolynomialFamily poly_family(const json& j, const std::string& where) {
  PolynomialFamily f;
  f.name = j.value("name", "");
  if (!j.contains("factors") || !j["factors"].is_array()) config_error(where, "missing factors");
  for (const auto& fac : j["factors"]) {
    std::vector<std::pair<Expr, Polynomial>> terms;
    for (const auto& t : fac) {
      if (!t.is_array() || t.size() != 2) config_error(where, "a term is [coefficient, monomial]");
      terms.emplace_back(expr_of(t[0], where), poly_of(t[1], where));
    }
    f.factors.push_back(std::move(terms));
  }
  if (j.contains("limit")) f.limit = poly_of(j["limit"], where);
  return f;
}

XComplex complex_number(const json& a, const json& b, const std::string& where) {
  if (!a.is_number() || !b.is_number()) config_error(where, "table entries are numbers");
  return {a.get<long double>(), b.get<long double>()};
}

PointFamily family_of(const json& j, const std::string& name, Definitions& defines) {
  const std::string where = name + ".family";
  if (j.contains("defines")) {
    for (const auto& d : j["defines"]) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_string()) config_error(where, "a definition is [name, expression]");
      defines.emplace_back(d[0].get<std::string>(), expr_of(d[1], where));
    }
  }
  if (j.contains("points")) {
    std::vector<std::array<Expr, 2>> pts;
    for (const auto& p : j["points"]) {
      if (!p.is_array() || p.size() != 2) config_error(where, "a point is [z1, z2]");
      pts.push_back({expr_of(p[0], where), expr_of(p[1], where)});
    }
    if (pts.size() < 2) config_error(where, "need at least two points");
    return PointFamily::from_expressions(name, defines, std::move(pts));
  }
  if (j.contains("table")) {
    std::vector<std::pair<long double, std::vector<XPoint>>> table;
    for (const auto& row : j["table"]) {
      if (!row.contains("eps") || !row["eps"].is_number()) config_error(where, "table row needs eps");
      std::vector<XPoint> pts;
      for (const auto& p : row["points"]) {
        if (!p.is_array() || p.size() != 4) config_error(where, "table point is [re1, im1, re2, im2]");
        pts.push_back({complex_number(p[0], p[1], where), complex_number(p[2], p[3], where)});
      }
      table.emplace_back(row["eps"].get<long double>(), std::move(pts));
    }
    return PointFamily::from_table(name, std::move(table));
  }
  config_error(where, "needs points or table");
}

Schedule schedule_of(const json& j, const std::string& where) {
  Schedule s = Schedule::geometric();
  if (j.contains("samples")) {
    s.samples.clear();
    for (const auto& x : j["samples"]) {
      if (!x.is_number()) config_error(where, "samples are numbers");
      s.samples.push_back(x.get<long double>());
    }
  } else {
    s = Schedule::geometric(j.value("eps0", 0.1L), j.value("ratio", 0.5L), j.value("count", 12));
  }
  s.extrapolation_passes = j.value("passes", 3);
  try {
    s.validate();
  } catch (const Error& e) {
    config_error(where, e.what());
  }
  return s;
}

double real_value(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  return static_cast<double>(expr_of(j, where).eval({}).real());
}

Expectations expectations_of(const json& j, const std::string& where) {
  Expectations e;
  if (j.contains("classification")) {
    const auto t = tag_from_string(text_of(j["classification"], where));
    if (!t) config_error(where, "unknown classification tag");
    e.classification = *t;
  }
  for (const auto& g : j.value("limit_ideal", json::array())) e.limit_ideal.push_back(poly_of(g, where));
  for (const auto& g : j.value("staircase", json::array())) e.staircase.push_back(poly_of(g, where));
  if (j.contains("generators")) e.generators = j["generators"].get<std::size_t>();
  if (j.contains("no_equality")) e.no_equality = j["no_equality"].get<bool>();
  e.sandwich = j.value("sandwich", false);
  if (j.contains("k")) e.k = real_value(j["k"], where);
  e.k_tol = j.value("k_tol", 1e-3);
  if (j.contains("ratio")) {
    const auto& r = j["ratio"];
    e.ratio = RatioExpectation{expr_of(r.at("expr"), where), text_of(r.at("limit"), where), r.value("tol", 1e-3)};
    if (e.ratio->limit != "inf" && e.ratio->limit != "0") (void)real_value(r.at("limit"), where);
  }
  e.prop44_constraints = j.value("prop44_constraints", false);
  if (j.contains("gap_bounds")) {
    const auto& b = j["gap_bounds"];
    if (!b.is_array() || b.size() != 2) config_error(where, "gap_bounds is [min, max]");
    e.gap_bounds = std::make_pair(real_value(b[0], where), real_value(b[1], where));
  }
  for (const auto& w : j.value("witnesses", json::array())) e.witnesses.push_back(poly_family(w, where + ".witnesses"));
  for (const auto& w : j.value("vanishing", json::array())) e.vanishing.push_back(poly_family(w, where + ".vanishing"));
  return e;
}

Scenario scenario_of(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) config_error("scenario", "needs a name");
  Scenario s;
  s.name = j["name"].get<std::string>();
  s.description = j.value("description", "");
  s.notes = j.value("notes", "");
  if (!j.contains("family")) config_error(s.name, "missing family");
  s.family = family_of(j["family"], s.name, s.defines);
  s.schedule = schedule_of(j.value("schedule", json::object()), s.name + ".schedule");
  const std::string prec = j.value("precision", "double");
  if (prec == "extended")
    s.precision = Precision::Extended;
  else if (prec != "double")
    config_error(s.name, "precision is double or extended");
  s.expect = expectations_of(j.value("expect", json::object()), s.name + ".expect");
  for (const auto& l : j.value("literature", json::array())) s.literature.push_back(l.get<std::string>());
  return s;
}

}  // namespace

Polynomial PolynomialFamily::at(const Env& env) const {
  Polynomial out(1.0);
  for (const auto& fac : factors) {
    Polynomial f;
    for (const auto& [c, m] : fac) {
      const XComplex v = c.eval(env);
      f += m * Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    out = out * f;
  }
  return out;
}

std::vector<Scenario> parse_scenarios(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("config is not valid JSON: ") + e.what());
  }
  std::vector<Scenario> out;
  try {
    if (doc.is_object() && doc.contains("scenarios")) {
      for (const auto& s : doc["scenarios"]) out.push_back(scenario_of(s));
    } else {
      out.push_back(scenario_of(doc));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (out[i].name == out[k].name) throw Error(ErrorKind::Config, "duplicate scenario name '" + out[i].name + "'");
  return out;
}

std::vector<Scenario> load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenarios(ss.str());
}

std::string_view builtin_catalog_json() { return detail::builtin_catalog; }

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> all = parse_scenarios(detail::builtin_catalog);
  return all;
}

const Scenario& builtin_scenario(std::string_view name) {
  for (const auto& s : builtin_scenarios())
    if (s.name == name) return s;
  throw Error(ErrorKind::Config, "no built-in scenario named '" + std::string(name) + "'");
}

}  // namespace illab
