#include "illab/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "illab/error.hpp"
#include "illab/extrapolation.hpp"
#include "illab/resultant.hpp"

namespace illab {

namespace {

AffineLine from_normal(Complex n1, Complex n2, const Point& through) {
  const Direction d = canonical(n1, n2);
  AffineLine l{d.rep[0], d.rep[1], 0.0};
  l.c = -(l.u1 * through[0] + l.u2 * through[1]);
  return l;
}

double radical_inverse(unsigned k, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (k > 0) {
    r += f * (k % base);
    k /= base;
    f *= inv;
  }
  return r;
}

double coefficient_distance(const Polynomial& p, const Polynomial& q) { return (p - q).max_abs(); }

std::string point_text(const Point& z) { return "(" + format_complex(z[0]) + ", " + format_complex(z[1]) + ")"; }

}  // namespace

Polynomial AffineLine::polynomial() const {
  Polynomial p(Monomial{1, 0}, u1);
  p.add_term({0, 1}, u2);
  p.add_term({0, 0}, c);
  return p;
}

AffineLine line_equation(const Point& p, const Point& q, double tol) {
  const Complex d1 = q[0] - p[0], d2 = q[1] - p[1];
  const double n = std::hypot(std::abs(d1), std::abs(d2));
  const double scale = std::max({1.0, std::abs(p[0]), std::abs(p[1])});
  if (n == 0 || n <= tol * scale) throw Error(ErrorKind::CoincidentPoints, "line through coincident points");
  return from_normal(d2, -d1, p);
}

AffineLine line_through_origin(const Direction& v) {
  return from_normal(v.rep[1], -v.rep[0], Point{0.0, 0.0});
}

DirectionTable direction_table(const Classification& c) {
  if (c.directions.size() != 6) throw Error(ErrorKind::NonConvergent, "direction table needs all six limits");
  DirectionTable t;
  for (std::size_t k = 0; k < 6; ++k) t[k] = c.directions[k].rep;
  return t;
}

std::array<Polynomial, 3> pairing_products(const std::vector<Point>& a) {
  if (a.size() != 4) throw Error(ErrorKind::Config, "pairing products need four points");
  auto l = [&](int i, int j) {
    return line_equation(a[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(j - 1)]).polynomial();
  };
  return {l(1, 2) * l(3, 4), l(1, 3) * l(2, 4), l(1, 4) * l(2, 3)};
}

std::array<Polynomial, 3> pairing_limits(const DirectionTable& v) {
  auto l = [&](std::size_t k) { return line_through_origin(v[k]).polynomial(); };
  return {l(0) * l(5), l(1) * l(4), l(2) * l(3)};
}

IndependenceSets independence_sets(const DirectionTable& v, double tol) {
  auto meet = [tol](std::vector<Direction> x, const std::vector<Direction>& y) {
    std::vector<Direction> out;
    for (const auto& d : distinct_classes(x, tol))
      for (const auto& e : y)
        if (chordal_distance(d, e) <= tol) {
          out.push_back(d);
          break;
        }
    return out;
  };
  const std::vector<Direction> p1{v[0], v[5]}, p2{v[1], v[4]}, p3{v[2], v[3]};
  return {meet(p2, p1), meet(p2, p3), meet(p1, p3)};
}

std::optional<std::pair<int, int>> independent_pair(const std::array<Polynomial, 3>& f, double threshold) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Polynomial a = f[static_cast<std::size_t>(i)].homogeneous_part(2);
      const Polynomial b = f[static_cast<std::size_t>(j)].homogeneous_part(2);
      if (a.is_zero() || b.is_zero()) continue;
      if (std::abs(resultant_binary_quadratics(a, b)) > threshold) return std::make_pair(i + 1, j + 1);
    }
  return std::nullopt;
}

CommonZeroCheck common_zero_check(const Polynomial& f, const Polynomial& g, const std::vector<Point>& poles,
                                  double match_tol) {
  Point center{0.0, 0.0};
  for (const auto& p : poles) {
    center[0] += p[0] / double(poles.size());
    center[1] += p[1] / double(poles.size());
  }
  double scale = 0;
  for (const auto& p : poles) scale = std::max(scale, std::hypot(std::abs(p[0] - center[0]), std::abs(p[1] - center[1])));
  if (scale == 0) scale = 1;

  const QuadraticSystem sys = solve_quadratic_system(f, g, center, scale);
  if (sys.common_factor) throw Error(ErrorKind::ExtraCommonZeros, "the pair shares a factor; common zeros form a curve");
  CommonZeroCheck out;
  out.zeros = sys.zeros;
  std::vector<bool> used(poles.size(), false);
  for (const auto& z : sys.zeros) {
    if (std::abs(z[0]) > 1 + 1e-12 || std::abs(z[1]) > 1 + 1e-12) continue;
    out.inside.push_back(z);
    std::size_t best = poles.size();
    double bd = 0;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (used[k]) continue;
      const double d = std::hypot(std::abs(z[0] - poles[k][0]), std::abs(z[1] - poles[k][1]));
      if (best == poles.size() || d < bd) {
        best = k;
        bd = d;
      }
    }
    if (best < poles.size() && bd <= match_tol) {
      used[best] = true;
      ++out.matched;
      out.max_match_error = std::max(out.max_match_error, bd);
    } else {
      out.spurious.push_back(z);
    }
  }
  if (!out.spurious.empty()) {
    std::string msg = "common zeros off the pole set:";
    for (const auto& z : out.spurious) msg += " " + point_text(z);
    throw Error(ErrorKind::ExtraCommonZeros, msg);
  }
  return out;
}

UciReport uci_verify(const PointFamily& fam, const Schedule& sch, std::pair<int, int> pair, const DirectionTable& v,
                     const UciOptions& opts) {
  sch.validate();
  const auto [i, j] = pair;
  if (i < 1 || j > 3 || i >= j) throw Error(ErrorKind::Config, "pair must satisfy 1 <= i < j <= 3");
  const auto lim = pairing_limits(v);
  UciReport out;
  out.pair = pair;
  out.limit = {lim[static_cast<std::size_t>(i - 1)], lim[static_cast<std::size_t>(j - 1)]};

  std::vector<double> dist;
  for (long double eps : sch.samples) {
    const auto pts = fam.at_double(eps);
    const auto f = pairing_products(pts);
    const Polynomial& g = f[static_cast<std::size_t>(i - 1)];
    const Polynomial& h = f[static_cast<std::size_t>(j - 1)];
    UciSample s;
    s.eps = eps;
    const CommonZeroCheck cz = common_zero_check(g, h, pts, opts.match_rel * static_cast<double>(std::fabs(eps)));
    s.zeros = cz.inside.size();
    s.matched = cz.matched;
    s.match_error = cz.max_match_error;
    if (cz.matched != pts.size())
      throw Error(ErrorKind::ExtraCommonZeros, "only " + std::to_string(cz.matched) + " of " +
                                                   std::to_string(pts.size()) + " poles are common zeros");
    s.coefficient_distance =
        std::max(coefficient_distance(g, out.limit[0]), coefficient_distance(h, out.limit[1]));
    dist.push_back(s.coefficient_distance);

    double sep = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        const double d = std::hypot(std::abs(pts[a][0] - pts[b][0]), std::abs(pts[a][1] - pts[b][1]));
        sep = sep == 0 ? d : std::min(sep, d);
      }
    const double r = opts.circle_rel * sep;
    for (const auto& a : pts)
      for (const Complex w : {Complex(1, 0), Complex(0, 1), Complex(1, 1) / std::sqrt(2.0)})
        for (int k = 0; k < opts.circle_nodes; ++k) {
          const Complex e = std::polar(r, 2 * std::numbers::pi * k / opts.circle_nodes);
          const Point z{a[0] + e * w.real(), a[1] + e * w.imag()};
          const double nz = std::hypot(std::abs(z[0] - a[0]), std::abs(z[1] - a[1]));
          const double np = std::hypot(std::abs(g(z)), std::abs(h(z)));
          s.comparability = std::max(s.comparability, std::abs(std::log(np) - std::log(nz)));
        }
    out.samples.push_back(s);
  }
  const std::size_t window = std::min<std::size_t>(5, dist.size());
  if (!tail_non_increasing(dist, window, 1e-13) || dist.back() > opts.coefficient_tol)
    throw Error(ErrorKind::NotConverging,
                "coefficients of the pair do not approach the limit map (last distance " + format_real(dist.back()) + ")");
  out.ok = true;
  return out;
}

double green_candidate(const Point& z) {
  const double a = std::abs(z[0]), b = std::abs(z[1]);
  if (a == 0 && b == 0) throw Error(ErrorKind::OriginSingularity, "green candidate is -inf at the origin");
  return 2 * std::log(std::max(a, b));
}

std::vector<Point> gap_sample_points(const GapSampling& s) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(s.torus * s.torus + s.sphere));
  const double tau = 2 * std::numbers::pi;
  for (int a = 0; a < s.torus; ++a)
    for (int b = 0; b < s.torus; ++b)
      pts.push_back({std::polar(1.0, tau * a / s.torus), std::polar(1.0, tau * b / s.torus)});
  for (int k = 1; k <= s.sphere; ++k) {
    const double u = radical_inverse(static_cast<unsigned>(k), 2);
    const double v = radical_inverse(static_cast<unsigned>(k), 3);
    const double w = radical_inverse(static_cast<unsigned>(k), 5);
    pts.push_back({std::polar(std::sqrt(u), tau * v), std::polar(std::sqrt(1 - u), tau * w)});
  }
  return pts;
}

GapReport gap_report(const Polynomial& f, const Polynomial& g, const GapSampling& s) {
  const Complex res = resultant_binary_quadratics(f, g);
  if (std::abs(res) <= 1e-12 * std::max(1.0, std::pow(f.max_abs() * g.max_abs(), 2)))
    throw Error(ErrorKind::ZeroOnSphere, "leading forms share a projective root; the map vanishes on a line");
  GapReport out;
  out.points = gap_sample_points(s);
  out.gaps.reserve(out.points.size());
  double sum = 0;
  out.min = INFINITY;
  out.max = -INFINITY;
  out.min_norm = INFINITY;
  for (const auto& z : out.points) {
    const double n = std::hypot(std::abs(f(z)), std::abs(g(z)));
    if (!(n > 0)) throw Error(ErrorKind::ZeroOnSphere, "sample point " + point_text(z) + " annihilates the map");
    out.min_norm = std::min(out.min_norm, n);
    const double gap = std::log(n) - green_candidate(z);
    out.gaps.push_back(gap);
    out.min = std::min(out.min, gap);
    out.max = std::max(out.max, gap);
    sum += gap;
  }
  out.n_samples = out.points.size();
  out.mean = sum / double(out.n_samples);
  out.certified_bounded = std::isfinite(out.min) && std::isfinite(out.max) && out.min_norm > s.threshold;
  return out;
}

double one_pole_green(const Point& a, const Point& z) {
  double v = -INFINITY;
  for (int j = 0; j < 2; ++j) {
    const Complex aj = a[static_cast<std::size_t>(j)], zj = z[static_cast<std::size_t>(j)];
    v = std::max(v, std::log(std::abs((zj - aj) / (1.0 - std::conj(aj) * zj))));
  }
  return v;
}

PoleBounds bidisk_pole_bounds(const std::vector<Point>& poles, const Point& z) {
  if (poles.empty()) throw Error(ErrorKind::Config, "no poles");
  for (const auto& a : poles)
    if (!(std::abs(a[0]) < 1 && std::abs(a[1]) < 1)) throw Error(ErrorKind::Config, "pole outside the open bidisk");
  if (std::abs(z[0]) > 1 + 1e-12 || std::abs(z[1]) > 1 + 1e-12)
    throw Error(ErrorKind::Config, "evaluation point outside the closed bidisk");
  PoleBounds b{0, INFINITY};
  for (const auto& a : poles) {
    const double g = one_pole_green(a, z);
    if (!std::isfinite(g)) throw Error(ErrorKind::PoleHit, "evaluation point " + point_text(z) + " is a pole");
    b.lower += g;
    b.upper = std::min(b.upper, g);
  }
  return b;
}

double ideal_green_candidate(const std::vector<Polynomial>& generators, const Point& z) {
  double v = -INFINITY;
  for (const auto& g : generators) v = std::max(v, std::log(std::abs(g(z))));
  return v;
}

bool no_equality(const Ideal& I) { return I.minimal_generators().size() > 2; }

}  // namespace illab
