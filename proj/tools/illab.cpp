#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "illab/report.hpp"

using namespace illab;

namespace {

struct Args {
  std::string config;
  std::string scenario;
  std::string json_out;
  std::string csv_out;
  std::string precision;
  bool timings = false;
  RunOptions opts;
};

void add_common(CLI::App* app, Args& a) {
  app->add_option("--config", a.config, "JSON scenario file (defaults to the built-in catalog)");
  app->add_option("--scenario", a.scenario, "scenario name");
  app->add_option("--json", a.json_out, "write the JSON report here ('-' for stdout)");
  app->add_option("--csv", a.csv_out, "write per-sample gaps as CSV");
  app->add_option("--precision", a.precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));
  app->add_flag("--timings", a.timings, "include wall-clock seconds in JSON reports");
  auto& o = a.opts;
  app->add_option("--tol-direction", o.geometry.direction_tol, "chordal equality of limit directions");
  app->add_option("--tol-cauchy", o.geometry.cauchy_tol, "stability of extrapolated directions");
  app->add_option("--tol-gap", o.limit.subspace.gap_tol, "stability of the extrapolated subspace");
  app->add_option("--tol-frame", o.frame_tol, "gap between the limit frame and the predicted frame");
  app->add_option("--tol-ideal", o.ideal_tol, "normal form threshold for ideal comparisons");
  app->add_option("--tol-rank", o.limit.rank_tol, "rank decisions in ideal reduction");
  app->add_option("--tol-cluster", o.limit.cluster_tol, "merging of grid coordinates");
  app->add_option("--tol-cleanup", o.limit.cleanup_tol, "coefficient cleanup of lifted generators");
  app->add_option("--tol-match", o.match_rel, "matching of common zeros, relative to |e|");
}

void finish(Args& a) {
  if (a.precision == "extended") a.opts.precision = Precision::Extended;
  if (a.precision == "double") a.opts.precision = Precision::Double;
}

std::vector<Scenario> catalog(const Args& a) {
  if (a.config.empty()) return builtin_scenarios();
  return load_scenarios(a.config);
}

Scenario pick(const Args& a) {
  const auto all = catalog(a);
  if (a.scenario.empty()) {
    if (all.size() == 1) return all.front();
    throw Error(ErrorKind::Config, "choose a scenario with --scenario");
  }
  for (const auto& s : all)
    if (s.name == a.scenario) return s;
  throw Error(ErrorKind::Config, "no scenario named '" + a.scenario + "'");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Config, "cannot write '" + path + "'");
  out << text << '\n';
}

bool quiet(const Args& a) { return a.json_out == "-"; }

int cmd_list(const Args& a) {
  const auto all = catalog(a);
  if (!quiet(a))
    for (const auto& s : all) std::cout << s.name << "  " << s.description << '\n';
  emit(a.json_out, catalog_json(all));
  return 0;
}

int cmd_classify(const Args& a) {
  const Scenario s = pick(a);
  const Classification c = run_classify(s, a.opts);
  if (!quiet(a)) {
    std::cout << s.name << ": " << to_string(c.tag) << " (" << c.distinct_count << " distinct directions)\n";
    for (const auto& d : c.directions)
      std::cout << "  v" << d.i << d.j << " = [" << format_complex(d.rep.rep[0]) << " : " << format_complex(d.rep.rep[1])
                << "]" << (d.converged ? "" : "  not converged: " + d.reason) << '\n';
    if (!c.note.empty()) std::cout << "  " << c.note << '\n';
  }
  emit(a.json_out, classification_json(c));
  if (s.expect.classification && *s.expect.classification != c.tag) return 3;
  return 0;
}

int cmd_limit(const Args& a) {
  const Scenario s = pick(a);
  const LimitIdeal l = run_limit(s, a.opts);
  if (!quiet(a)) {
    std::cout << s.name << ": " << to_string(l.verdict.status);
    if (l.verdict.status == LimitStatus::Converged) {
      std::cout << ", length " << (l.length ? std::to_string(*l.length) : "infinite")
                << (l.certified ? ", certified" : ", not certified") << '\n';
      for (const auto& g : l.ideal->reduced_basis()) std::cout << "  " << g.to_string() << '\n';
    } else {
      std::cout << " (" << l.verdict.reason << ")\n";
    }
  }
  emit(a.json_out, limit_json(l));
  return l.verdict.status == LimitStatus::Converged && l.certified ? 0 : 3;
}

int cmd_green(const Args& a) {
  const Scenario s = pick(a);
  const Classification c = run_classify(s, a.opts);
  if (c.tag == Tag::NonConvergent) throw Error(ErrorKind::NonConvergent, c.note);
  const auto limits = pairing_limits(direction_table(c));
  const auto pair = independent_pair(limits);
  if (!pair) {
    std::cerr << s.name << ": no pair of pairing products has independent leading forms\n";
    return 3;
  }
  const auto& f = limits[static_cast<std::size_t>(pair->first - 1)];
  const auto& g = limits[static_cast<std::size_t>(pair->second - 1)];
  const GapReport r = gap_report(f, g, a.opts.sampling);
  if (!quiet(a))
    std::cout << s.name << ": Psi0 = (" << f.to_string() << ", " << g.to_string() << ")\n  gap over " << r.n_samples
              << " samples in [" << format_real(r.min) << ", " << format_real(r.max) << "], mean "
              << format_real(r.mean) << (r.certified_bounded ? ", bounded" : ", not certified") << '\n';
  emit(a.json_out, gap_json(r));
  if (!a.csv_out.empty()) {
    std::ofstream out(a.csv_out);
    if (!out) throw Error(ErrorKind::Config, "cannot write '" + a.csv_out + "'");
    out << gap_csv(r);
  }
  return r.certified_bounded ? 0 : 3;
}

void print_report(const RunReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.scenario << '\n';
  for (const auto& c : r.checks)
    if (!c.passed) std::cout << "  failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  if (r.error) std::cout << "  error: " << r.error->second << '\n';
}

int cmd_run(const Args& a) {
  const RunReport r = run(pick(a), a.opts);
  if (!quiet(a)) {
    print_report(r);
    for (const auto& c : r.checks)
      if (c.passed) std::cout << "  ok " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
  emit(a.json_out, report_json(r, a.timings));
  if (!a.csv_out.empty() && r.green && r.green->gap) {
    std::ofstream out(a.csv_out);
    out << gap_csv(*r.green->gap);
  }
  return r.exit_code();
}

int cmd_verify(const Args& a) {
  auto all = catalog(a);
  if (!a.scenario.empty()) all = {pick(a)};
  const auto reports = verify_all(all, a.opts);
  int code = 0;
  for (const auto& r : reports) {
    if (!quiet(a)) print_report(r);
    code = std::max(code, r.exit_code());
  }
  emit(a.json_out, reports_json(reports, a.timings));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limits of vanishing ideals of four-point families and their Green candidates"};
  app.require_subcommand(1);
  Args args;
  struct Cmd {
    const char* name;
    const char* help;
    int (*fn)(const Args&);
  };
  const Cmd cmds[] = {
      {"list-scenarios", "list the scenario catalog", cmd_list},
      {"classify", "classify the limit directions of a scenario", cmd_classify},
      {"limit-ideal", "compute and certify the limit ideal", cmd_limit},
      {"green-gap", "sample the gap between log|Psi0| and the limit candidate", cmd_green},
      {"run", "full pipeline with expected-value checks", cmd_run},
      {"verify-all", "run every scenario", cmd_verify},
  };
  int (*chosen)(const Args&) = nullptr;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, args);
    sub->callback([&chosen, fn = c.fn] { chosen = fn; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  finish(args);
  try {
    return chosen(args);
  } catch (const Error& e) {
    std::cerr << "illab: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "illab: " << e.what() << '\n';
    return 3;
  }
}
