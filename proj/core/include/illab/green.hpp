#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "illab/geometry.hpp"
#include "illab/ideal.hpp"
#include "illab/polynomial.hpp"

namespace illab {

// l(z) = u1 z1 + u2 z2 + c with |(u1, u2)| = 1 and the larger normal
// component real positive.
struct AffineLine {
  Complex u1;
  Complex u2;
  Complex c;

  Complex operator()(const Point& z) const { return u1 * z[0] + u2 * z[1] + c; }
  Polynomial polynomial() const;
};

AffineLine line_equation(const Point& p, const Point& q, double tol = 1e-12);

// Line through the origin with limit direction v.
AffineLine line_through_origin(const Direction& v);

// Pair order used everywhere: 12, 13, 14, 23, 24, 34.
using DirectionTable = std::array<Direction, 6>;
DirectionTable direction_table(const Classification& c);

// f1 = l12 l34, f2 = l13 l24, f3 = l14 l23.
std::array<Polynomial, 3> pairing_products(const std::vector<Point>& pts);
std::array<Polynomial, 3> pairing_limits(const DirectionTable& v);

struct IndependenceSets {
  std::vector<Direction> a1;  // {v13, v24} and {v12, v34}
  std::vector<Direction> a2;  // {v13, v24} and {v14, v23}
  std::vector<Direction> a3;  // {v12, v34} and {v14, v23}
};

IndependenceSets independence_sets(const DirectionTable& v, double tol = 1e-6);

// First pair (lex order, 1-based) whose quadratic parts have |resultant| > threshold.
std::optional<std::pair<int, int>> independent_pair(const std::array<Polynomial, 3>& limits,
                                                    double threshold = 1e-8);

struct CommonZeroCheck {
  std::vector<Point> zeros;       // all finite common zeros
  std::vector<Point> inside;      // those in the closed unit bidisk
  std::vector<Point> spurious;    // inside but not a pole
  std::size_t matched = 0;        // poles found among the zeros
  double max_match_error = 0;     // worst pole-to-zero distance, absolute
};

// Solves f = g = 0 and matches the zeros inside the bidisk against the poles
// with tolerance match_tol. Throws ExtraCommonZeros on a shared factor or any
// spurious zero.
CommonZeroCheck common_zero_check(const Polynomial& f, const Polynomial& g, const std::vector<Point>& poles,
                                  double match_tol);

struct UciOptions {
  double match_rel = 1e-6;      // zero matching, relative to |eps|
  double coefficient_tol = 1e-3;
  double circle_rel = 1e-3;     // radius of the comparison circles, relative to separation
  int circle_nodes = 32;
};

struct UciSample {
  long double eps = 0;
  std::size_t zeros = 0;
  std::size_t matched = 0;
  double match_error = 0;
  double coefficient_distance = 0;
  double comparability = 0;     // observed C(eps)
};

struct UciReport {
  bool ok = false;
  std::pair<int, int> pair{0, 0};
  std::array<Polynomial, 2> limit;
  std::vector<UciSample> samples;
};

// Throws ExtraCommonZeros or NotConverging.
UciReport uci_verify(const PointFamily& fam, const Schedule& sch, std::pair<int, int> pair,
                     const DirectionTable& v, const UciOptions& opts = {});

double green_candidate(const Point& z);

struct GapSampling {
  int torus = 64;
  int sphere = 1000;
  double threshold = 1e-6;
};

struct GapReport {
  std::size_t n_samples = 0;
  double min = 0;
  double max = 0;
  double mean = 0;
  bool certified_bounded = false;
  double min_norm = 0;
  std::vector<Point> points;
  std::vector<double> gaps;
};

// Deterministic sample: torus phase grid, then Halton points on the unit sphere.
std::vector<Point> gap_sample_points(const GapSampling& s);

GapReport gap_report(const Polynomial& f, const Polynomial& g, const GapSampling& s = {});

struct PoleBounds {
  double lower = 0;
  double upper = 0;
};

double one_pole_green(const Point& a, const Point& z);
PoleBounds bidisk_pole_bounds(const std::vector<Point>& poles, const Point& z);

// max_j log|g_j(z)|
double ideal_green_candidate(const std::vector<Polynomial>& generators, const Point& z);

// More than two minimal generators: not a complete intersection.
bool no_equality(const Ideal& I);

}  // namespace illab
