#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "illab/expr.hpp"
#include "illab/polynomial.hpp"

namespace illab {

using XPoint = std::array<XComplex, 2>;

Point to_point(const XPoint& p);
XPoint to_xpoint(const Point& p);

// Point of P^1(C), stored as its canonical unit representative.
struct Direction {
  std::array<Complex, 2> rep{Complex(1.0), Complex(0.0)};
};

Direction canonical(Complex u1, Complex u2);
Direction canonical(const Direction& d);
double chordal_distance(const Direction& u, const Direction& v);

// Class of q - p; throws CoincidentPoints when |q - p| <= tol * scale.
Direction direction(const Point& p, const Point& q, double scale = 1.0, double tol = 1e-12);

using Definitions = std::vector<std::pair<std::string, Expr>>;

// Binds e (aliases eps and the Greek letter) and then the ordered definitions.
Env bind_parameters(const Definitions& defines, long double eps, Env parameters = {});

class PointFamily {
 public:
  using Evaluator = std::function<std::vector<XPoint>(long double)>;

  PointFamily() = default;
  PointFamily(std::string label, Evaluator f);

  // Points given as expressions in e (aliases eps and the Greek letter),
  // after the ordered definitions have been bound.
  static PointFamily from_expressions(std::string label, Definitions defines,
                                      std::vector<std::array<Expr, 2>> points, Env parameters = {});
  static PointFamily from_table(std::string label, std::vector<std::pair<long double, std::vector<XPoint>>> table);

  std::vector<XPoint> at(long double eps) const;
  std::vector<Point> at_double(long double eps) const;
  const std::string& label() const { return label_; }

  // eps -> A (a_k - a_origin); origin < 0 keeps the translation off.
  PointFamily transformed(const Eigen::Matrix2cd& A, int origin = -1) const;

 private:
  std::string label_;
  Evaluator f_;
};

struct Schedule {
  std::vector<long double> samples;
  int extrapolation_passes = 3;

  static Schedule geometric(long double eps0 = 0.1L, long double ratio = 0.5L, int count = 12);
  void validate() const;
};

struct GeometryOptions {
  double direction_tol = 1e-6;
  double cauchy_tol = 1e-7;
  double coincidence_tol = 1e-12;
  // relative residual under which a geometric schedule is treated as a finite sum of powers of e
  double mode_fit_tol = 1e-11;
  int tail = 6;
};

struct DirectionLimit {
  int i = 0;
  int j = 0;
  bool converged = false;
  Direction rep;
  double stability = 0;
  std::vector<double> steps;
  std::vector<Direction> clusters;
  std::string reason;
};

DirectionLimit limit_direction(const PointFamily& fam, int i, int j, const Schedule& sch,
                               const GeometryOptions& opts = {});

// Greedy clustering under the chordal tolerance, first member as representative.
std::vector<Direction> distinct_classes(const std::vector<Direction>& dirs, double tol);

struct DirectionSet {
  std::vector<DirectionLimit> entries;
  std::vector<Direction> classes;
  std::size_t distinct_count = 0;
};

// Indices are 1-based. Throws NonConvergent naming the first failing pair.
DirectionSet direction_set(const PointFamily& fam, const Schedule& sch, const std::vector<int>& subset,
                           const GeometryOptions& opts = {});

enum class Tag {
  Generic,
  VertexDegenerate,
  TripleCollinear_ManyDirections,
  TripleCollinear_TwoDirections,
  NonConvergent,
  Unclassified
};

const char* to_string(Tag tag);
std::optional<Tag> tag_from_string(std::string_view s);

struct Classification {
  Tag tag = Tag::Unclassified;
  bool cond21 = false;
  bool cond22 = false;
  bool cond23 = false;
  std::vector<std::array<int, 3>> collinear_triples;
  std::vector<int> degenerate_vertices;
  std::size_t distinct_count = 0;
  std::vector<DirectionLimit> directions;
  std::string note;
};

Classification classify(const PointFamily& fam, const Schedule& sch, const GeometryOptions& opts = {});

struct FrameNormalization {
  Eigen::Matrix2cd map;
  PointFamily family;
};

// Linear map sending v_ij to [1:0] and v_ik to [0:1]; the returned family is
// translated so that a_i is the origin.
FrameNormalization normalize_frame(const PointFamily& fam, int i, int j, int k, const Schedule& sch,
                                   const GeometryOptions& opts = {});

}  // namespace illab
