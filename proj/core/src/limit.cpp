#include "illab/limit.hpp"

#include <Eigen/Dense>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>

#include "illab/error.hpp"

namespace illab {

namespace {

template <class T>
std::complex<T> phi(const std::vector<std::complex<T>>& nodes, int k, std::complex<T> x) {
  std::complex<T> r = T(1);
  for (int i = 0; i < k; ++i) r *= x - nodes[static_cast<std::size_t>(i)];
  return r;
}

template <class T>
T axis_spread(const std::vector<std::complex<T>>& nodes) {
  T s = 0;
  for (const auto& b : nodes) s = std::max(s, std::abs(b - nodes.front()));
  return s > T(0) ? s : T(1);
}

std::vector<Monomial> grlex_sorted(std::vector<Monomial> ex, bool descending) {
  std::sort(ex.begin(), ex.end(), GrlexLess{});
  if (descending) std::reverse(ex.begin(), ex.end());
  return ex;
}

template <class T>
Frame to_double(const CMat<T>& M) {
  Frame out(M.rows(), M.cols());
  for (Eigen::Index r = 0; r < M.rows(); ++r)
    for (Eigen::Index c = 0; c < M.cols(); ++c)
      out(r, c) = Complex(static_cast<double>(M(r, c).real()), static_cast<double>(M(r, c).imag()));
  return out;
}

template <class T>
std::vector<std::array<std::complex<T>, 2>> convert_points(const std::vector<XPoint>& pts) {
  std::vector<std::array<std::complex<T>, 2>> out;
  for (const auto& p : pts)
    out.push_back({std::complex<T>(static_cast<T>(p[0].real()), static_cast<T>(p[0].imag())),
                   std::complex<T>(static_cast<T>(p[1].real()), static_cast<T>(p[1].imag()))});
  return out;
}

void check_distinct(const std::vector<XPoint>& pts, double tol) {
  long double diam = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      diam = std::max(diam, std::hypot(std::abs(pts[i][0] - pts[j][0]), std::abs(pts[i][1] - pts[j][1])));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const long double d = std::hypot(std::abs(pts[i][0] - pts[j][0]), std::abs(pts[i][1] - pts[j][1]));
      if (d == 0 || d <= static_cast<long double>(tol) * diam)
        throw Error(ErrorKind::CoincidentPoints,
                    "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    }
}

template <class T>
LimitIdeal limit_ideal_impl(const PointFamily& fam, const Schedule& sch, const LimitOptions& opts) {
  sch.validate();
  LimitIdeal out;
  std::vector<CMat<T>> frames;
  bool first = true;
  for (long double eps : sch.samples) {
    const auto xp = fam.at(eps);
    check_distinct(xp, opts.coincidence_tol);
    const auto pts = convert_points<T>(xp);
    const auto grid = cluster_grid(pts, opts.cluster_tol);
    if (first) {
      out.shape = grid.shape();
      out.points = pts.size();
      first = false;
    } else if (grid.shape() != out.shape) {
      throw Error(ErrorKind::UnstableShape, "grid shape changes along the schedule");
    }
    frames.push_back(sample_frame<T>(pts, grid, opts.pivot_tol));
  }

  const auto sl = subspace_limit_impl<T>(frames, opts.subspace);
  LimitVerdict& v = out.verdict;
  v.status = sl.status;
  v.dims = sl.dims;
  v.gaps = sl.gaps;
  v.stability = sl.stability;
  v.limit_frame = to_double(sl.limit);
  v.limsup_frame = to_double(sl.limsup);
  v.liminf_frame = to_double(sl.liminf);
  v.clusters = sl.clusters;
  v.reason = sl.reason;
  if (sl.status != LimitStatus::Converged) return out;

  const double eta = sl.stability;
  out.coefficient_threshold = std::max(opts.cleanup_tol, 10 * eta);
  out.lifted = lift_frame(v.limit_frame, out.shape, std::max(opts.lift_tol, 100 * eta), out.coefficient_threshold);

  std::vector<Polynomial> gens = out.lifted;
  gens.emplace_back(Monomial{out.shape.n1, 0}, 1.0);
  gens.emplace_back(Monomial{0, out.shape.n2}, 1.0);
  IdealOptions io;
  io.rank_tol = std::max(opts.rank_tol, 10 * eta);
  out.ideal = Ideal::local(std::move(gens), 2 * std::max(out.shape.n1, out.shape.n2), io);
  out.length = out.ideal->length();
  out.certified = out.length && *out.length == out.points;
  return out;
}

}  // namespace

template <class T>
CMat<T> sample_frame(const std::vector<std::array<std::complex<T>, 2>>& pts, const BasicGrid<std::complex<T>>& grid,
                     double pivot_tol) {
  const GridShape shape = grid.shape();
  const Eigen::Index d = shape.d();
  const Eigen::Index N = static_cast<Eigen::Index>(pts.size());
  if (N > d) throw Error(ErrorKind::Numeric, "more points than grid nodes");
  const auto ex = grid_exponents(shape);
  const T s1 = axis_spread(grid.nodes[0]), s2 = axis_spread(grid.nodes[1]);

  CMat<T> U(N, d);
  for (Eigen::Index k = 0; k < N; ++k)
    for (const auto& a : ex) {
      const auto& p = pts[static_cast<std::size_t>(k)];
      U(k, grid_position(shape, a)) = phi(grid.nodes[0], a.a, p[0]) * phi(grid.nodes[1], a.b, p[1]) /
                                      (std::pow(s1, a.a) * std::pow(s2, a.b));
    }

  const T thr = static_cast<T>(pivot_tol) * U.cwiseAbs().maxCoeff();
  Eigen::Index r = 0;
  for (const auto& a : grlex_sorted(ex, false)) {
    if (r == N) break;
    const Eigen::Index c = grid_position(shape, a);
    Eigen::Index best = r;
    T bv = 0;
    for (Eigen::Index i = r; i < N; ++i)
      if (std::abs(U(i, c)) > bv) {
        bv = std::abs(U(i, c));
        best = i;
      }
    if (bv <= thr) continue;
    U.row(r).swap(U.row(best));
    for (Eigen::Index i = r + 1; i < N; ++i) {
      const std::complex<T> f = U(i, c) / U(r, c);
      U.row(i) -= f * U.row(r);
      U(i, c) = T(0);
    }
    ++r;
  }
  if (r < N) throw Error(ErrorKind::Numeric, "evaluation matrix lost rank; points are too close for this precision");

  for (const auto& a : ex) U.col(grid_position(shape, a)) *= std::pow(s1, a.a) * std::pow(s2, a.b);

  Eigen::HouseholderQR<CMat<T>> qr(U.adjoint());
  const CMat<T> Q = qr.householderQ() * CMat<T>::Identity(d, d);
  return Q.rightCols(d - N);
}

template CMat<double> sample_frame<double>(const std::vector<std::array<std::complex<double>, 2>>&,
                                           const BasicGrid<std::complex<double>>&, double);
template CMat<long double> sample_frame<long double>(const std::vector<std::array<std::complex<long double>, 2>>&,
                                                     const BasicGrid<std::complex<long double>>&, double);

Frame ideal_subspace(const std::vector<Point>& pts, int cap, double cluster_tol) {
  const GridPoints grid = grid_points(pts, cluster_tol);
  const GridShape shape = grid.shape();
  const int N = static_cast<int>(pts.size());
  if (cap < 0) cap = std::max(N, shape.n1 + shape.n2 - 2);
  const Ideal I = vanishing_ideal(pts, cap);
  std::vector<Eigen::VectorXcd> cols;
  for (const auto& g : I.reduced_basis())
    for (const auto& m : monomials_upto(cap - g.degree())) {
      const Polynomial f = Polynomial(m, 1.0) * g;
      cols.push_back(quotient_coordinates(f, grid, std::numeric_limits<double>::infinity()) / f.norm());
    }
  if (cols.empty()) return Frame(shape.d(), 0);
  Eigen::MatrixXcd M(shape.d(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = cols[k];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > 1e-9 * sv(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

GridShape family_shape(const PointFamily& fam, const Schedule& sch, double cluster_tol) {
  GridShape shape;
  bool first = true;
  for (long double eps : sch.samples) {
    const GridShape s = grid_shape(fam.at_double(eps), cluster_tol);
    if (first) {
      shape = s;
      first = false;
    } else if (s != shape) {
      throw Error(ErrorKind::UnstableShape, "grid shape changes along the schedule");
    }
  }
  return shape;
}

LimitIdeal limit_ideal(const PointFamily& fam, const Schedule& sch, const LimitOptions& opts) {
  if (opts.precision == Precision::Extended) return limit_ideal_impl<long double>(fam, sch, opts);
  return limit_ideal_impl<double>(fam, sch, opts);
}

std::vector<Polynomial> lift_frame(const Frame& K, const GridShape& shape, double lift_tol, double cleanup) {
  const Eigen::Index k = K.cols();
  if (k == 0) return {};
  const auto ex = grid_exponents(shape);
  std::vector<Eigen::Index> pivots;
  std::vector<Eigen::VectorXcd> basis;
  for (const auto& a : grlex_sorted(ex, true)) {
    if (static_cast<Eigen::Index>(pivots.size()) == k) break;
    const Eigen::Index row = grid_position(shape, a);
    Eigen::VectorXcd v = K.row(row).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q.dot(v) * q;
    const double n = v.norm();
    if (n > lift_tol) {
      basis.push_back(v / n);
      pivots.push_back(row);
    }
  }
  if (static_cast<Eigen::Index>(pivots.size()) < k) throw Error(ErrorKind::Numeric, "limit frame lift lost rank");

  Frame KP(k, k);
  for (Eigen::Index i = 0; i < k; ++i) KP.row(i) = K.row(pivots[static_cast<std::size_t>(i)]);
  Frame X = K * KP.inverse();
  for (Eigen::Index r = 0; r < X.rows(); ++r)
    for (Eigen::Index c = 0; c < k; ++c) {
      Complex& x = X(r, c);
      if (std::abs(x.real()) <= cleanup) x.real(0);
      if (std::abs(x.imag()) <= cleanup) x.imag(0);
    }
  for (Eigen::Index i = 0; i < k; ++i) {
    X.row(pivots[static_cast<std::size_t>(i)]).setZero();
    X(pivots[static_cast<std::size_t>(i)], i) = 1.0;
  }
  std::vector<Polynomial> out;
  for (Eigen::Index c = 0; c < k; ++c) {
    Polynomial p;
    for (const auto& a : ex) p.add_term(a, X(grid_position(shape, a), c));
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& x, const Polynomial& y) { return grlex_less(x.leading(), y.leading()); });
  return out;
}

Frame quotient_frame(const Ideal& I, const GridShape& shape) {
  const auto ex = grid_exponents(shape);
  const auto& stair = I.staircase();
  const Eigen::Index d = shape.d();
  const Eigen::Index l = static_cast<Eigen::Index>(stair.size());
  if (l == 0) return Frame::Identity(d, d);
  Frame A(l, d);
  for (const auto& a : ex) {
    const Polynomial nf = I.normal_form(Polynomial(a, 1.0));
    for (Eigen::Index i = 0; i < l; ++i) A(i, grid_position(shape, a)) = nf.coeff(stair[static_cast<std::size_t>(i)]);
  }
  Eigen::JacobiSVD<Frame> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > 1e-9 * s(0)) ++rank;
  return svd.matrixV().rightCols(d - rank);
}

bool length_criterion(std::size_t length, std::size_t N, Side side) {
  if (side == Side::Upper) {
    if (length > N)
      throw Error(ErrorKind::SanityViolation, "upper limit longer than the point count");
    return length >= N;
  }
  if (length < N) throw Error(ErrorKind::SanityViolation, "lower limit shorter than the point count");
  return length <= N;
}

}  // namespace illab
