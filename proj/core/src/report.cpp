#include "illab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <json.hpp>
#include <sstream>

#include "illab/extrapolation.hpp"

namespace illab {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double x) { return format_real(x); }

void add(RunReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

// Runs one stage; numeric errors turn into a failed check, configuration
// errors abort the run.
void stage(RunReport& r, const std::string& name, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) == 2) throw;
    add(r, name, false, e.what());
  }
}

Complex to_complex(XComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

LimitOptions limit_options(const Scenario& s, const RunOptions& opts) {
  LimitOptions lo = opts.limit;
  lo.precision = opts.precision.value_or(s.precision);
  return lo;
}

void family_checks(RunReport& r, const Scenario& s, const PolynomialFamily& w, const std::optional<Ideal>& ideal,
                   const RunOptions& opts) {
  const std::string base = w.name.empty() ? "polynomial" : w.name;
  stage(r, base + "_vanishes", [&] {
    double worst = 0;
    std::vector<double> dist;
    for (long double eps : s.schedule.samples) {
      const Env env = bind_parameters(s.defines, eps);
      const Polynomial p = w.at(env);
      for (const auto& a : s.family.at_double(eps)) {
        const double scale = p.term_scale(a);
        if (scale > 0) worst = std::max(worst, std::abs(p(a)) / scale);
      }
      if (w.limit) dist.push_back((p - *w.limit).max_abs());
    }
    add(r, base + "_vanishes", worst <= 1e-9, "max relative residual " + fmt(worst));
    if (w.limit) {
      const bool tends = tail_non_increasing(dist, 5, 1e-13) && dist.back() <= 0.5 * dist.front();
      add(r, base + "_tends_to_limit", tends,
          "coefficient distance " + fmt(dist.front()) + " -> " + fmt(dist.back()) + " toward " + w.limit->to_string());
    }
  });
  if (w.limit && ideal)
    add(r, base + "_limit_in_ideal", ideal->contains(*w.limit, opts.ideal_tol),
        w.limit->to_string() + " against the computed limit ideal");
}

void ratio_checks(RunReport& r, const Scenario& s) {
  const auto& e = s.expect;
  if (e.ratio) {
    stage(r, "ratio", [&] {
      std::vector<Complex> v;
      for (long double eps : s.schedule.samples) v.push_back(to_complex(e.ratio->expr.eval(bind_parameters(s.defines, eps))));
      std::vector<double> mod;
      for (auto x : v) mod.push_back(std::abs(x));
      const std::string detail = e.ratio->expr.text() + " = " + format_complex(v.back()) + " at the last sample";
      bool ok = false;
      if (e.ratio->limit == "inf") {
        ok = true;
        for (std::size_t k = 1; k < mod.size(); ++k) ok = ok && mod[k] > mod[k - 1];
      } else if (e.ratio->limit == "0") {
        ok = true;
        for (std::size_t k = 1; k < mod.size(); ++k) ok = ok && mod[k] < mod[k - 1];
        ok = ok && mod.back() < mod.front();
      } else {
        const Complex L = to_complex(Expr::parse(e.ratio->limit).eval({}));
        ok = std::abs(v.back() - L) <= e.ratio->tol * std::max(1.0, std::abs(L));
      }
      add(r, "ratio", ok, detail + ", expected limit " + e.ratio->limit);
    });
  }
  if (e.prop44_constraints) {
    stage(r, "parameter_constraints", [&] {
      bool ok = true;
      std::string detail = "0 < |rho| <= |e|/2 and |e| < |beta| with |e/beta| decreasing";
      double prev = INFINITY;
      for (long double eps : s.schedule.samples) {
        const Env env = bind_parameters(s.defines, eps);
        const auto rho = env.find("rho"), beta = env.find("beta");
        if (rho == env.end() || beta == env.end()) throw Error(ErrorKind::Config, "constraints need rho and beta");
        const long double ar = std::abs(rho->second), ab = std::abs(beta->second), ae = std::fabs(eps);
        const double q = static_cast<double>(ae / ab);
        if (!(ar > 0 && ar <= ae / 2 * (1 + 1e-15L) && ae < ab && q <= prev)) {
          ok = false;
          detail += "; fails at e = " + fmt(static_cast<double>(eps));
          break;
        }
        prev = q;
      }
      add(r, "parameter_constraints", ok, detail);
    });
  }
}

void limit_checks(RunReport& r, const Scenario& s, const RunOptions& opts) {
  const LimitIdeal& L = *r.limit;
  const auto& e = s.expect;
  const bool converged = L.verdict.status == LimitStatus::Converged;
  add(r, "limit_converged", converged,
      converged ? "extrapolation stability " + fmt(L.verdict.stability) : L.verdict.reason);
  if (!converged || !L.ideal) return;
  const Ideal& I = *L.ideal;

  stage(r, "length_criterion", [&] {
    if (!L.length) throw Error(ErrorKind::Numeric, "limit ideal has no finite length under its cap");
    const bool ok = length_criterion(*L.length, L.points, Side::Upper);
    add(r, "length_criterion", ok && L.certified,
        "length " + std::to_string(*L.length) + " for " + std::to_string(L.points) + " points");
  });
  add(r, "gap_tail_monotone", tail_non_increasing(L.verdict.gaps, 5, opts.limit.subspace.floor),
      "last gap " + fmt(L.verdict.gaps.empty() ? 0.0 : L.verdict.gaps.back()));

  stage(r, "lift_consistency", [&] {
    r.lift_gap = subspace_gap<double>(L.verdict.limit_frame, quotient_frame(I, L.shape));
    add(r, "lift_consistency", *r.lift_gap < opts.frame_tol, "gap " + fmt(*r.lift_gap));
  });

  if (!e.limit_ideal.empty()) {
    stage(r, "predicted_limit", [&] {
      const Ideal E = Ideal::local(e.limit_ideal);
      r.predicted_gap = subspace_gap<double>(L.verdict.limit_frame, quotient_frame(E, L.shape));
      add(r, "predicted_frame", *r.predicted_gap < opts.frame_tol, "gap " + fmt(*r.predicted_gap));
      add(r, "predicted_limit", ideal_equal(I, E, opts.ideal_tol), "expected <" + [&] {
        std::string t;
        for (const auto& g : e.limit_ideal) t += (t.empty() ? "" : ", ") + g.to_string();
        return t;
      }() + ">");
    });
  }
  if (!e.staircase.empty()) {
    std::vector<std::string> want, got;
    for (const auto& m : e.staircase) want.push_back(m.to_string());
    for (const auto& m : I.staircase()) got.push_back(monomial_text(m));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    add(r, "staircase", want == got, "computed {" + [&] {
      std::string t;
      for (const auto& m : I.staircase()) t += (t.empty() ? "" : ", ") + monomial_text(m);
      return t;
    }() + "}");
  }
  if (e.k) {
    const Complex k = -I.normal_form(Polynomial(Monomial{2, 0}, 1.0)).coeff(Monomial{0, 2});
    add(r, "k_coefficient", std::abs(k - *e.k) <= e.k_tol, "recovered k = " + format_complex(k));
  }

  const bool spread = r.classification && r.classification->tag != Tag::NonConvergent &&
                      r.classification->distinct_count >= 2;
  if (e.sandwich || spread) {
    bool cubes = true;
    for (int a = 0; a <= 3; ++a) cubes = cubes && I.contains(Polynomial(Monomial{a, 3 - a}, 1.0), opts.ideal_tol);
    add(r, "cubics_in_limit", cubes);
    double low = 0;
    std::vector<Polynomial> gens = L.lifted;
    gens.insert(gens.end(), I.reduced_basis().begin(), I.reduced_basis().end());
    for (const auto& g : gens)
      for (const Monomial m : {Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}}) low = std::max(low, std::abs(g.coeff(m)));
    add(r, "generators_in_m2", low <= opts.sandwich_tol, "largest coefficient on 1, z1, z2: " + fmt(low));
  }

  stage(r, "generators", [&] {
    DegenerateStage d;
    d.minimal_generators = I.minimal_generators();
    d.no_equality = d.minimal_generators.size() > 2;
    if (e.generators)
      add(r, "generators", d.minimal_generators.size() == *e.generators,
          std::to_string(d.minimal_generators.size()) + " minimal generators");
    if (e.no_equality) add(r, "no_equality", d.no_equality == *e.no_equality, d.no_equality ? "set" : "clear");
    r.degenerate = std::move(d);
  });
}

void green_checks(RunReport& r, const Scenario& s, const RunOptions& opts) {
  const Classification& c = *r.classification;
  GreenStage g;
  const DirectionTable table = direction_table(c);
  g.limits = pairing_limits(table);
  g.sets = independence_sets(table, opts.geometry.direction_tol);
  g.pair = independent_pair(g.limits);
  if (c.tag != Tag::Generic) {
    add(r, "no_independent_pair", !g.pair, g.pair ? "unexpected pair found" : "all pairs share a root");
    r.green = std::move(g);
    return;
  }
  add(r, "independent_pair", g.pair.has_value(),
      g.pair ? "(" + std::to_string(g.pair->first) + "," + std::to_string(g.pair->second) + ")" : "none");
  if (!g.pair) {
    r.green = std::move(g);
    return;
  }
  stage(r, "uci", [&] {
    UciOptions uo;
    uo.match_rel = opts.match_rel;
    g.uci = uci_verify(s.family, s.schedule, *g.pair, table, uo);
    std::size_t worst = 4;
    for (const auto& smp : g.uci->samples) worst = std::min(worst, smp.matched);
    add(r, "uci", g.uci->ok && worst == 4, "every sample has 4 common zeros on the poles");
  });
  if (r.limit && r.limit->ideal) {
    stage(r, "complete_intersection_limit", [&] {
      const auto& lim = g.limits;
      const Ideal E = Ideal::local({lim[static_cast<std::size_t>(g.pair->first - 1)],
                                    lim[static_cast<std::size_t>(g.pair->second - 1)]});
      r.predicted_gap = subspace_gap<double>(r.limit->verdict.limit_frame, quotient_frame(E, r.limit->shape));
      add(r, "complete_intersection_limit", ideal_equal(*r.limit->ideal, E, opts.ideal_tol) &&
                                                *r.predicted_gap < opts.frame_tol,
          "frame gap to <Psi0> " + fmt(*r.predicted_gap));
    });
  }
  stage(r, "gap_report", [&] {
    const auto& lim = g.limits;
    g.gap = gap_report(lim[static_cast<std::size_t>(g.pair->first - 1)],
                       lim[static_cast<std::size_t>(g.pair->second - 1)], opts.sampling);
    add(r, "gap_bounded", g.gap->certified_bounded, "min |Psi0| " + fmt(g.gap->min_norm));
    if (s.expect.gap_bounds) {
      const auto [lo, hi] = *s.expect.gap_bounds;
      add(r, "gap_bounds", g.gap->min >= lo - 1e-6 && g.gap->max <= hi + 1e-6,
          "[" + fmt(g.gap->min) + ", " + fmt(g.gap->max) + "]");
    }
  });
  r.green = std::move(g);
}

json poly_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json direction_json(const DirectionLimit& d) {
  json j;
  j["pair"] = {d.i, d.j};
  j["rep_re"] = {d.rep.rep[0].real(), d.rep.rep[1].real()};
  j["rep_im"] = {d.rep.rep[0].imag(), d.rep.rep[1].imag()};
  j["converged"] = d.converged;
  j["stability"] = d.stability;
  if (!d.converged) {
    j["reason"] = d.reason;
    json cl = json::array();
    for (const auto& c : d.clusters)
      cl.push_back({{"rep_re", {c.rep[0].real(), c.rep[1].real()}}, {"rep_im", {c.rep[0].imag(), c.rep[1].imag()}}});
    j["clusters"] = cl;
  }
  return j;
}

json classification_value(const Classification& c) {
  json j;
  j["tag"] = to_string(c.tag);
  j["conditions"] = {{"no_collinear_triple", c.cond21}, {"two_classes_per_vertex", c.cond22},
                     {"vertex_degenerate", c.cond23}};
  j["collinear_triples"] = c.collinear_triples;
  j["degenerate_vertices"] = c.degenerate_vertices;
  j["distinct_directions"] = c.distinct_count;
  json d = json::array();
  for (const auto& x : c.directions) d.push_back(direction_json(x));
  j["directions"] = d;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json limit_value(const LimitIdeal& l) {
  json j;
  const auto& v = l.verdict;
  j["status"] = to_string(v.status);
  j["shape"] = {l.shape.n1, l.shape.n2};
  j["points"] = l.points;
  j["dims"] = v.dims;
  j["gaps"] = v.gaps;
  j["stability"] = v.stability;
  j["clusters"] = v.clusters;
  j["limsup_dim"] = v.limsup_frame.cols();
  j["liminf_dim"] = v.liminf_frame.cols();
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["limit_generators"] = poly_list(l.lifted);
  j["coefficient_threshold"] = l.coefficient_threshold;
  if (l.ideal) {
    json stair = json::array();
    for (const auto& m : l.ideal->staircase()) stair.push_back(monomial_text(m));
    j["ideal"] = {{"generators", poly_list(l.ideal->reduced_basis())},
                  {"staircase", stair},
                  {"length", l.length ? json(*l.length) : json(nullptr)}};
  }
  j["certified"] = l.certified;
  j["length"] = l.length ? json(*l.length) : json(nullptr);
  return j;
}

json gap_value(const GapReport& g) {
  return {{"n_samples", g.n_samples}, {"min", g.min},           {"max", g.max},
          {"mean", g.mean},           {"certified_bounded", g.certified_bounded}, {"min_norm", g.min_norm}};
}

json report_value(const RunReport& r, bool timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = r.scenario;
  j["passed"] = r.passed();
  j["exit_code"] = r.exit_code();
  if (r.classification) j["classification"] = classification_value(*r.classification);
  if (r.limit) j["limit"] = limit_value(*r.limit);
  if (r.predicted_gap) j["predicted_frame_gap"] = *r.predicted_gap;
  if (r.lift_gap) j["lift_frame_gap"] = *r.lift_gap;
  if (r.degenerate) {
    j["minimal_generators"] = poly_list(r.degenerate->minimal_generators);
    j["no_equality"] = r.degenerate->no_equality;
    j["green_candidate"] = "max_j log|g_j| over the minimal generators";
  }
  if (r.green) {
    const auto& g = *r.green;
    json gj;
    gj["pairing_limits"] = poly_list({g.limits.begin(), g.limits.end()});
    auto dirs = [](const std::vector<Direction>& ds) {
      json a = json::array();
      for (const auto& d : ds)
        a.push_back({{"rep_re", {d.rep[0].real(), d.rep[1].real()}}, {"rep_im", {d.rep[0].imag(), d.rep[1].imag()}}});
      return a;
    };
    gj["independence_sets"] = {{"A1", dirs(g.sets.a1)}, {"A2", dirs(g.sets.a2)}, {"A3", dirs(g.sets.a3)}};
    gj["pair"] = g.pair ? json({g.pair->first, g.pair->second}) : json(nullptr);
    if (g.uci) {
      json u;
      u["ok"] = g.uci->ok;
      u["limit_map"] = poly_list({g.uci->limit.begin(), g.uci->limit.end()});
      json smp = json::array();
      for (const auto& s : g.uci->samples)
        smp.push_back({{"eps", static_cast<double>(s.eps)},
                       {"zeros", s.zeros},
                       {"matched", s.matched},
                       {"match_error", s.match_error},
                       {"coefficient_distance", s.coefficient_distance},
                       {"comparability", s.comparability}});
      u["samples"] = smp;
      gj["uci"] = u;
    }
    if (g.gap) gj["gap"] = gap_value(*g.gap);
    j["green"] = gj;
  }
  if (!r.literature.empty()) j["literature"] = r.literature;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  if (r.error) j["error"] = {{"kind", to_string(r.error->first)}, {"message", r.error->second}};
  if (timings) j["seconds"] = r.seconds;
  return j;
}

}  // namespace

bool RunReport::passed() const {
  if (error) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

int RunReport::exit_code() const {
  if (error) return exit_code_for(error->first);
  return passed() ? 0 : 3;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::Config || kind == ErrorKind::Parse ? 2 : 3;
}

Classification run_classify(const Scenario& s, const RunOptions& opts) {
  return classify(s.family, s.schedule, opts.geometry);
}

LimitIdeal run_limit(const Scenario& s, const RunOptions& opts) {
  return limit_ideal(s.family, s.schedule, limit_options(s, opts));
}

RunReport run(const Scenario& s, const RunOptions& opts) {
  RunReport r;
  r.scenario = s.name;
  r.literature = s.literature;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    stage(r, "classification", [&] {
      r.classification = run_classify(s, opts);
      if (s.expect.classification)
        add(r, "classification", r.classification->tag == *s.expect.classification,
            std::string("computed ") + to_string(r.classification->tag));
    });
    stage(r, "limit_ideal", [&] {
      r.limit = run_limit(s, opts);
      limit_checks(r, s, opts);
    });
    const std::optional<Ideal> ideal = r.limit ? r.limit->ideal : std::nullopt;
    for (const auto& w : s.expect.witnesses) family_checks(r, s, w, ideal, opts);
    for (const auto& w : s.expect.vanishing) family_checks(r, s, w, ideal, opts);
    ratio_checks(r, s);
    if (r.classification && r.classification->tag != Tag::NonConvergent)
      stage(r, "green", [&] { green_checks(r, s, opts); });
  } catch (const Error& e) {
    r.error = std::make_pair(e.kind(), std::string(e.what()));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<RunReport> verify_all(const std::vector<Scenario>& scenarios, const RunOptions& opts) {
  std::vector<std::future<RunReport>> jobs;
  jobs.reserve(scenarios.size());
  for (const auto& s : scenarios) jobs.push_back(std::async(std::launch::async, [&s, &opts] { return run(s, opts); }));
  std::vector<RunReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const RunReport& a, const RunReport& b) { return a.scenario < b.scenario; });
  return out;
}

std::string classification_json(const Classification& c) { return classification_value(c).dump(2); }
std::string limit_json(const LimitIdeal& l) { return limit_value(l).dump(2); }
std::string gap_json(const GapReport& g) { return gap_value(g).dump(2); }

std::string gap_csv(const GapReport& g) {
  std::ostringstream out;
  out << "index,z1_re,z1_im,z2_re,z2_im,gap\n";
  for (std::size_t k = 0; k < g.gaps.size(); ++k) {
    const Point& z = g.points[k];
    out << k << ',' << fmt(z[0].real()) << ',' << fmt(z[0].imag()) << ',' << fmt(z[1].real()) << ','
        << fmt(z[1].imag()) << ',' << fmt(g.gaps[k]) << '\n';
  }
  return out.str();
}

std::string report_json(const RunReport& r, bool timings) { return report_value(r, timings).dump(2); }

std::string reports_json(const std::vector<RunReport>& rs, bool timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json a = json::array();
  bool all = true;
  for (const auto& r : rs) {
    a.push_back(report_value(r, timings));
    all = all && r.passed();
  }
  j["passed"] = all;
  j["reports"] = a;
  return j.dump(2);
}

std::string catalog_json(const std::vector<Scenario>& scenarios) {
  json a = json::array();
  for (const auto& s : scenarios) a.push_back({{"name", s.name}, {"description", s.description}, {"notes", s.notes}});
  return a.dump(2);
}

}  // namespace illab
