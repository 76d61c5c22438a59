#pragma once

#include <optional>
#include <string>
#include <vector>

#include "illab/error.hpp"
#include "illab/green.hpp"
#include "illab/limit.hpp"
#include "illab/scenario.hpp"

namespace illab {

inline constexpr int kSchemaVersion = 1;

struct RunOptions {
  GeometryOptions geometry;
  LimitOptions limit;
  double frame_tol = 1e-4;
  double ideal_tol = 1e-6;
  double match_rel = 1e-6;
  double sandwich_tol = 1e-8;
  std::optional<Precision> precision;  // overrides the scenario's choice
  GapSampling sampling;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GreenStage {
  std::array<Polynomial, 3> limits;
  IndependenceSets sets;
  std::optional<std::pair<int, int>> pair;
  std::optional<UciReport> uci;
  std::optional<GapReport> gap;
};

struct DegenerateStage {
  std::vector<Polynomial> minimal_generators;
  bool no_equality = false;
};

struct RunReport {
  std::string scenario;
  std::optional<Classification> classification;
  std::optional<LimitIdeal> limit;
  std::optional<double> predicted_gap;
  std::optional<double> lift_gap;
  std::optional<GreenStage> green;
  std::optional<DegenerateStage> degenerate;
  std::vector<std::string> literature;
  std::vector<Check> checks;
  std::optional<std::pair<ErrorKind, std::string>> error;
  double seconds = 0;

  bool passed() const;
  // 0 pass, 2 configuration problem, 3 numeric or verification failure.
  int exit_code() const;
};

int exit_code_for(ErrorKind kind);

Classification run_classify(const Scenario& s, const RunOptions& opts);
LimitIdeal run_limit(const Scenario& s, const RunOptions& opts);

// classify, limit_ideal, length criterion, then the Green stage for Generic
// configurations or the generator count otherwise; expectations become checks.
RunReport run(const Scenario& s, const RunOptions& opts = {});

// Runs concurrently; reports come back ordered by scenario name.
std::vector<RunReport> verify_all(const std::vector<Scenario>& scenarios, const RunOptions& opts = {});

std::string classification_json(const Classification& c);
std::string limit_json(const LimitIdeal& l);
std::string gap_json(const GapReport& g);
std::string gap_csv(const GapReport& g);
std::string report_json(const RunReport& r, bool timings = false);
std::string reports_json(const std::vector<RunReport>& rs, bool timings = false);
std::string catalog_json(const std::vector<Scenario>& scenarios);

}  // namespace illab
