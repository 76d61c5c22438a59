#include "illab/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "illab/error.hpp"
#include "illab/extrapolation.hpp"

namespace illab {

Point to_point(const XPoint& p) {
  return {Complex(static_cast<double>(p[0].real()), static_cast<double>(p[0].imag())),
          Complex(static_cast<double>(p[1].real()), static_cast<double>(p[1].imag()))};
}

XPoint to_xpoint(const Point& p) {
  return {XComplex(p[0].real(), p[0].imag()), XComplex(p[1].real(), p[1].imag())};
}

Direction canonical(Complex u1, Complex u2) {
  const double a1 = std::abs(u1), a2 = std::abs(u2);
  const double n = std::hypot(a1, a2);
  if (!(n > 0) || !std::isfinite(n)) throw Error(ErrorKind::CoincidentPoints, "zero or non-finite direction vector");
  const int pick = a1 >= a2 * (1 - 1e-12) ? 0 : 1;
  const std::array<Complex, 2> u{u1, u2};
  const Complex lead = u[static_cast<std::size_t>(pick)];
  if (lead.imag() == 0 && lead.real() > 0 && std::abs(n - 1) <= 8 * std::numeric_limits<double>::epsilon())
    return Direction{u};
  const Complex t = u[static_cast<std::size_t>(1 - pick)] / lead;
  const double s = 1 / std::sqrt(1 + std::norm(t));
  Direction d;
  d.rep[static_cast<std::size_t>(pick)] = s;
  d.rep[static_cast<std::size_t>(1 - pick)] = t * s + Complex(0.0, 0.0);
  return d;
}

Direction canonical(const Direction& d) { return canonical(d.rep[0], d.rep[1]); }

double chordal_distance(const Direction& u, const Direction& v) {
  const double nu = std::hypot(std::abs(u.rep[0]), std::abs(u.rep[1]));
  const double nv = std::hypot(std::abs(v.rep[0]), std::abs(v.rep[1]));
  const double w = std::abs(u.rep[0] * v.rep[1] - u.rep[1] * v.rep[0]);
  return std::min(1.0, w / (nu * nv));
}

Direction direction(const Point& p, const Point& q, double scale, double tol) {
  const Complex d1 = q[0] - p[0], d2 = q[1] - p[1];
  const double n = std::hypot(std::abs(d1), std::abs(d2));
  if (n == 0 || n <= tol * scale) throw Error(ErrorKind::CoincidentPoints, "points coincide within tolerance");
  return canonical(d1, d2);
}

PointFamily::PointFamily(std::string label, Evaluator f) : label_(std::move(label)), f_(std::move(f)) {}

Env bind_parameters(const Definitions& defines, long double eps, Env env) {
  env["e"] = eps;
  env["eps"] = eps;
  env["\xce\xb5"] = eps;
  for (const auto& [name, ex] : defines) env[name] = ex.eval(env);
  return env;
}

PointFamily PointFamily::from_expressions(std::string label, Definitions defines, std::vector<std::array<Expr, 2>> points,
                                          Env parameters) {
  auto f = [defines = std::move(defines), points = std::move(points),
            parameters = std::move(parameters)](long double eps) {
    const Env env = bind_parameters(defines, eps, parameters);
    std::vector<XPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({p[0].eval(env), p[1].eval(env)});
    return out;
  };
  return PointFamily(std::move(label), std::move(f));
}

PointFamily PointFamily::from_table(std::string label,
                                    std::vector<std::pair<long double, std::vector<XPoint>>> table) {
  auto f = [table = std::move(table)](long double eps) {
    for (const auto& [e, pts] : table)
      if (std::fabs(e - eps) <= 1e-12L * std::fabs(e)) return pts;
    throw Error(ErrorKind::Config, "no table entry for the requested sample");
  };
  return PointFamily(std::move(label), std::move(f));
}

std::vector<XPoint> PointFamily::at(long double eps) const {
  if (!f_) throw Error(ErrorKind::Config, "empty point family");
  auto pts = f_(eps);
  for (const auto& p : pts)
    for (const auto& c : p)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw Error(ErrorKind::Numeric, "non-finite point coordinate in family '" + label_ + "'");
  return pts;
}

std::vector<Point> PointFamily::at_double(long double eps) const {
  std::vector<Point> out;
  for (const auto& p : at(eps)) out.push_back(to_point(p));
  return out;
}

PointFamily PointFamily::transformed(const Eigen::Matrix2cd& A, int origin) const {
  const std::array<XComplex, 4> m{XComplex(A(0, 0).real(), A(0, 0).imag()), XComplex(A(0, 1).real(), A(0, 1).imag()),
                                  XComplex(A(1, 0).real(), A(1, 0).imag()), XComplex(A(1, 1).real(), A(1, 1).imag())};
  auto inner = f_;
  auto f = [inner, m, origin](long double eps) {
    auto pts = inner(eps);
    XPoint shift{XComplex(0), XComplex(0)};
    if (origin >= 0) shift = pts.at(static_cast<std::size_t>(origin));
    for (auto& p : pts) {
      const XComplex x = p[0] - shift[0], y = p[1] - shift[1];
      p = {m[0] * x + m[1] * y, m[2] * x + m[3] * y};
    }
    return pts;
  };
  return PointFamily(label_, std::move(f));
}

Schedule Schedule::geometric(long double eps0, long double ratio, int count) {
  Schedule s;
  long double e = eps0;
  for (int k = 0; k < count; ++k) {
    s.samples.push_back(e);
    e *= ratio;
  }
  return s;
}

void Schedule::validate() const {
  if (samples.size() < 4) throw Error(ErrorKind::Config, "schedule needs at least 4 samples");
  for (std::size_t k = 1; k < samples.size(); ++k)
    if (!(std::fabs(samples[k]) < std::fabs(samples[k - 1])))
      throw Error(ErrorKind::Config, "schedule must be strictly decreasing in modulus");
}

namespace {

long double diameter(const std::vector<XPoint>& pts) {
  long double d = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, std::hypot(std::abs(pts[i][0] - pts[j][0]), std::abs(pts[i][1] - pts[j][1])));
  return d;
}

Direction sample_direction(const std::vector<XPoint>& pts, int i, int j, double tol) {
  const XPoint& p = pts.at(static_cast<std::size_t>(i - 1));
  const XPoint& q = pts.at(static_cast<std::size_t>(j - 1));
  const XComplex d1 = q[0] - p[0], d2 = q[1] - p[1];
  const long double n = std::hypot(std::abs(d1), std::abs(d2));
  if (n == 0 || n <= static_cast<long double>(tol) * diameter(pts))
    throw Error(ErrorKind::CoincidentPoints,
                "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide within tolerance");
  const XComplex u1 = d1 / n, u2 = d2 / n;
  return canonical(Complex(static_cast<double>(u1.real()), static_cast<double>(u1.imag())),
                   Complex(static_cast<double>(u2.real()), static_cast<double>(u2.imag())));
}

Direction chart_limit(const std::vector<Direction>& seq, int chart, int passes) {
  std::vector<Complex> t;
  t.reserve(seq.size());
  for (const auto& d : seq) {
    const Complex c = d.rep[static_cast<std::size_t>(chart)];
    const Complex o = d.rep[static_cast<std::size_t>(1 - chart)];
    t.push_back(o / c);
  }
  const Complex lim = aitken_limit(t, passes);
  if (!std::isfinite(lim.real()) || !std::isfinite(lim.imag())) return seq.back();
  return chart == 0 ? canonical(1.0, lim) : canonical(lim, 1.0);
}

using XVec = std::array<XComplex, 2>;

bool geometric(const std::vector<long double>& s) {
  const long double r = s[1] / s[0];
  for (std::size_t k = 2; k < s.size(); ++k)
    if (std::fabs(s[k] / s[k - 1] - r) > 1e-12L * std::fabs(r)) return false;
  return true;
}

// On a geometric schedule each difference vector is d_k = sum_m w_m r_m^k for
// Puiseux families with finitely many terms. The slowest mode r_1 carries the
// limit direction [w_1]. A linear change of coordinates only mixes the w_m, so
// this estimate commutes with it, unlike extrapolation in a chart.
std::optional<Direction> mode_limit(const std::vector<XVec>& d, long double fit_tol) {
  using MatX = Eigen::Matrix<XComplex, Eigen::Dynamic, Eigen::Dynamic>;
  using VecX = Eigen::Matrix<XComplex, Eigen::Dynamic, 1>;
  const int n = static_cast<int>(d.size());
  std::vector<long double> w(d.size());
  for (int k = 0; k < n; ++k) w[k] = 1 / std::hypot(std::abs(d[k][0]), std::abs(d[k][1]));
  for (int M = 1; M <= 5 && 2 * (n - M) >= M + 3; ++M) {
    const int rows = 2 * (n - M);
    MatX A(rows, M);
    VecX b(rows);
    for (int k = 0; k + M < n; ++k)
      for (int c = 0; c < 2; ++c) {
        const int row = 2 * k + c;
        for (int m = 0; m < M; ++m) A(row, m) = w[k] * d[k + m][c];
        b(row) = -w[k] * d[k + M][c];
      }
    const VecX coef = A.colPivHouseholderQr().solve(b);
    if (!((A * coef - b).norm() <= fit_tol * b.norm())) continue;

    MatX C = MatX::Zero(M, M);
    for (int m = 0; m < M; ++m) C(0, m) = -coef(M - 1 - m);
    for (int m = 1; m < M; ++m) C(m, m - 1) = 1;
    Eigen::ComplexEigenSolver<MatX> es(C);
    if (es.info() != Eigen::Success) return std::nullopt;
    std::vector<XComplex> r(es.eigenvalues().data(), es.eigenvalues().data() + M);
    std::sort(r.begin(), r.end(), [](const XComplex& a, const XComplex& b) { return std::abs(a) > std::abs(b); });
    if (M > 1 && !(std::abs(r[0]) > std::abs(r[1]) * (1 + 1e-3L))) return std::nullopt;

    MatX V(n, M);
    MatX D(n, 2);
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < M; ++m) V(k, m) = w[k] * std::pow(r[m] / r[0], k);
      D(k, 0) = w[k] * d[k][0] / std::pow(r[0], k);
      D(k, 1) = w[k] * d[k][1] / std::pow(r[0], k);
    }
    const MatX W = V.colPivHouseholderQr().solve(D);
    const XComplex a = W(0, 0), c = W(0, 1);
    if (!std::isfinite(std::abs(a)) || !std::isfinite(std::abs(c)) || std::abs(a) + std::abs(c) == 0) return std::nullopt;
    return canonical(Complex(static_cast<double>(a.real()), static_cast<double>(a.imag())),
                     Complex(static_cast<double>(c.real()), static_cast<double>(c.imag())));
  }
  return std::nullopt;
}

}  // namespace

DirectionLimit limit_direction(const PointFamily& fam, int i, int j, const Schedule& sch,
                               const GeometryOptions& opts) {
  if (i == j) throw Error(ErrorKind::Config, "limit_direction needs i != j");
  sch.validate();
  DirectionLimit out;
  out.i = i;
  out.j = j;
  std::vector<Direction> seq;
  std::vector<XVec> diffs;
  for (long double eps : sch.samples) {
    const auto pts = fam.at(eps);
    seq.push_back(sample_direction(pts, i, j, opts.coincidence_tol));
    const XPoint& p = pts[static_cast<std::size_t>(i - 1)];
    const XPoint& q = pts[static_cast<std::size_t>(j - 1)];
    diffs.push_back({q[0] - p[0], q[1] - p[1]});
  }
  for (std::size_t k = 1; k < seq.size(); ++k) out.steps.push_back(chordal_distance(seq[k - 1], seq[k]));

  const Direction& last = seq.back();
  std::optional<Direction> all, prev;
  if (geometric(sch.samples)) {
    all = mode_limit(diffs, opts.mode_fit_tol);
    if (all) prev = mode_limit({diffs.begin(), diffs.end() - 1}, opts.mode_fit_tol);
  }
  const bool fitted = all && prev;
  if (!fitted) {
    const int chart = std::abs(last.rep[0]) >= std::abs(last.rep[1]) ? 0 : 1;
    const int passes = std::min(sch.extrapolation_passes, static_cast<int>(seq.size() - 2) / 2);
    all = chart_limit(seq, chart, passes);
    std::vector<Direction> head(seq.begin(), seq.end() - 1);
    prev = chart_limit(head, chart, std::min(passes, static_cast<int>(head.size() - 2) / 2));
  }
  out.stability = chordal_distance(*all, *prev);

  const std::size_t window = static_cast<std::size_t>(std::max(2, opts.tail - 1));
  const double floor = 1e-13;
  const bool monotone = fitted || tail_non_increasing(out.steps, window, floor);
  const bool contracting = fitted || tail_contracting(out.steps, window, floor);
  out.converged = monotone && contracting && out.stability < opts.cauchy_tol;
  if (out.converged) {
    out.rep = *all;
    return out;
  }
  if (!monotone)
    out.reason = "sampled directions do not settle: consecutive chordal steps grow in the tail";
  else if (!contracting)
    out.reason = "sampled directions keep a constant step in the tail";
  else
    out.reason = "extrapolated class moves by " + format_real(out.stability) + " when the last sample is dropped";
  out.rep = last;
  const std::size_t n = std::min(seq.size(), static_cast<std::size_t>(opts.tail));
  std::vector<Direction> tail(seq.end() - static_cast<std::ptrdiff_t>(n), seq.end());
  out.clusters = distinct_classes(tail, 1e-2);
  return out;
}

std::vector<Direction> distinct_classes(const std::vector<Direction>& dirs, double tol) {
  std::vector<Direction> classes;
  for (const auto& d : dirs) {
    bool found = false;
    for (const auto& c : classes)
      if (chordal_distance(c, d) <= tol) {
        found = true;
        break;
      }
    if (!found) classes.push_back(d);
  }
  return classes;
}

DirectionSet direction_set(const PointFamily& fam, const Schedule& sch, const std::vector<int>& subset,
                           const GeometryOptions& opts) {
  if (subset.size() < 2) throw Error(ErrorKind::Config, "direction_set needs at least two indices");
  DirectionSet out;
  std::vector<Direction> reps;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      DirectionLimit d = limit_direction(fam, subset[a], subset[b], sch, opts);
      if (!d.converged)
        throw Error(ErrorKind::NonConvergent, "pair (" + std::to_string(d.i) + "," + std::to_string(d.j) + "): " + d.reason);
      reps.push_back(d.rep);
      out.entries.push_back(std::move(d));
    }
  out.classes = distinct_classes(reps, opts.direction_tol);
  out.distinct_count = out.classes.size();
  return out;
}

const char* to_string(Tag tag) {
  switch (tag) {
    case Tag::Generic: return "Generic";
    case Tag::VertexDegenerate: return "VertexDegenerate";
    case Tag::TripleCollinear_ManyDirections: return "TripleCollinear_ManyDirections";
    case Tag::TripleCollinear_TwoDirections: return "TripleCollinear_TwoDirections";
    case Tag::NonConvergent: return "NonConvergent";
    case Tag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::optional<Tag> tag_from_string(std::string_view s) {
  for (Tag t : {Tag::Generic, Tag::VertexDegenerate, Tag::TripleCollinear_ManyDirections,
                Tag::TripleCollinear_TwoDirections, Tag::NonConvergent, Tag::Unclassified})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

Classification classify(const PointFamily& fam, const Schedule& sch, const GeometryOptions& opts) {
  Classification out;
  const auto pts = fam.at(sch.samples.front());
  if (pts.size() != 4) throw Error(ErrorKind::Config, "classification needs exactly four points");

  Direction v[5][5];
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      DirectionLimit d = limit_direction(fam, i, j, sch, opts);
      if (!d.converged) {
        out.tag = Tag::NonConvergent;
        out.note = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + d.reason;
        out.directions.push_back(std::move(d));
        return out;
      }
      v[i][j] = v[j][i] = d.rep;
      out.directions.push_back(std::move(d));
    }

  auto count = [&](std::vector<Direction> ds) { return distinct_classes(ds, opts.direction_tol).size(); };

  out.cond21 = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k)
        if (count({v[i][j], v[i][k], v[j][k]}) == 1) {
          out.cond21 = false;
          out.collinear_triples.push_back({i, j, k});
        }
  out.cond22 = true;
  for (int k = 1; k <= 4; ++k) {
    std::vector<Direction> ds;
    for (int m = 1; m <= 4; ++m)
      if (m != k) ds.push_back(v[k][m]);
    if (count(ds) < 2) {
      out.cond22 = false;
      out.degenerate_vertices.push_back(k);
    }
  }
  out.cond23 = !out.degenerate_vertices.empty();
  std::vector<Direction> all;
  for (const auto& d : out.directions) all.push_back(d.rep);
  out.distinct_count = count(all);

  if (out.cond21 && out.cond22)
    out.tag = Tag::Generic;
  else if (out.cond21 && out.cond23)
    out.tag = Tag::VertexDegenerate;
  else if (!out.collinear_triples.empty()) {
    if (out.distinct_count >= 3)
      out.tag = Tag::TripleCollinear_ManyDirections;
    else if (out.distinct_count == 2)
      out.tag = Tag::TripleCollinear_TwoDirections;
    else {
      out.tag = Tag::Unclassified;
      out.note = "all limit directions coincide";
    }
  } else {
    out.tag = Tag::Unclassified;
  }
  return out;
}

FrameNormalization normalize_frame(const PointFamily& fam, int i, int j, int k, const Schedule& sch,
                                   const GeometryOptions& opts) {
  const DirectionLimit a = limit_direction(fam, i, j, sch, opts);
  const DirectionLimit b = limit_direction(fam, i, k, sch, opts);
  if (!a.converged || !b.converged) throw Error(ErrorKind::NonConvergent, "limit directions needed for normalization");
  if (chordal_distance(a.rep, b.rep) <= opts.direction_tol)
    throw Error(ErrorKind::DegenerateDirections, "v_ij and v_ik define the same class");
  Eigen::Matrix2cd B;
  B << a.rep.rep[0], b.rep.rep[0], a.rep.rep[1], b.rep.rep[1];
  const Eigen::Matrix2cd A = B.inverse();
  return {A, fam.transformed(A, i - 1)};
}

}  // namespace illab
