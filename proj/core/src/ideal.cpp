#include "illab/ideal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "illab/error.hpp"

namespace illab {

namespace {

bool is_pivot_free_tail(const Polynomial& row, const Monomial& p, double tol) {
  for (const auto& [m, c] : row.terms())
    if (m != p && std::abs(c) > tol) return false;
  return true;
}

}  // namespace

Ideal Ideal::local(std::vector<Polynomial> generators, int cap, IdealOptions opts) {
  Ideal I;
  I.kind_ = Kind::Local;
  I.opts_ = opts;
  for (auto& g : generators)
    if (!g.is_zero()) I.generators_.push_back(std::move(g));
  int D = cap;
  if (D < 0) {
    D = 1;
    for (const auto& g : I.generators_) D = std::max(D, g.degree());
  }
  I.cap_ = D;
  I.build_local();
  if (!I.finite_) {
    I.cap_ = D + 2;
    I.build_local();
  }
  return I;
}

Ideal Ideal::power_of_maximal(int k) {
  std::vector<Polynomial> gens;
  for (int a = k; a >= 0; --a) gens.emplace_back(Monomial{a, k - a}, 1.0);
  return local(std::move(gens), std::max(k, 1));
}

Ideal Ideal::monomial_grid(int n1, int n2) {
  std::vector<Polynomial> gens{Polynomial(Monomial{n1, 0}, 1.0), Polynomial(Monomial{0, n2}, 1.0)};
  return local(std::move(gens), std::max(1, n1 + n2 - 1));
}

Ideal Ideal::from_groebner(std::vector<Polynomial> basis, std::vector<Monomial> staircase, int cap,
                           IdealOptions opts) {
  Ideal I;
  I.kind_ = Kind::Points;
  I.opts_ = opts;
  I.cap_ = cap;
  for (auto& g : basis) g = g.normalized();
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& x, const Polynomial& y) { return grlex_less(x.leading(), y.leading()); });
  std::sort(staircase.begin(), staircase.end(), GrlexLess{});
  I.generators_ = basis;
  I.reduced_ = basis;
  I.staircase_ = std::move(staircase);
  I.finite_ = true;
  return I;
}

void Ideal::build_local() {
  const int D = cap_;
  const auto mons = monomials_upto(D);
  const Eigen::Index M = static_cast<Eigen::Index>(mons.size());
  auto col_of = [&](const Monomial& m) { return M - 1 - static_cast<Eigen::Index>(grlex_index(m)); };

  std::vector<Eigen::VectorXcd> rows;
  for (const auto& g0 : generators_) {
    Polynomial g = g0.truncated(D);
    if (g.is_zero()) continue;
    const int o = g.order();
    for (const auto& m : mons) {
      if (m.degree() > D - o) break;
      Polynomial p = (Polynomial(m, 1.0) * g).truncated(D);
      if (p.is_zero()) continue;
      Eigen::VectorXcd r = Eigen::VectorXcd::Zero(M);
      for (const auto& [mm, c] : p.terms()) r(col_of(mm)) = c;
      r /= r.cwiseAbs().maxCoeff();
      rows.push_back(std::move(r));
    }
  }

  Eigen::MatrixXcd A(static_cast<Eigen::Index>(rows.size()), M);
  for (std::size_t i = 0; i < rows.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

  rows_.clear();
  Eigen::Index r = 0;
  const Eigen::Index R = A.rows();
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index c = 0; c < M && r < R; ++c) {
    Eigen::Index best = -1;
    double bv = 0;
    for (Eigen::Index i = r; i < R; ++i) {
      double v = std::abs(A(i, c));
      if (v > bv) {
        bv = v;
        best = i;
      }
    }
    if (best < 0 || bv <= opts_.rank_tol) {
      for (Eigen::Index i = r; i < R; ++i) A(i, c) = 0;
      continue;
    }
    A.row(r).swap(A.row(best));
    A.row(r) /= A(r, c);
    for (Eigen::Index i = 0; i < R; ++i) {
      if (i == r) continue;
      const Complex f = A(i, c);
      if (f != Complex(0.0)) A.row(i) -= f * A.row(r);
      A(i, c) = 0;
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(M), false);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    const Eigen::Index c = pivot_cols[k];
    is_pivot[static_cast<std::size_t>(c)] = true;
    const Monomial p = mons[static_cast<std::size_t>(M - 1 - c)];
    Polynomial row(p, 1.0);
    for (Eigen::Index j = c + 1; j < M; ++j) {
      const Complex v = A(static_cast<Eigen::Index>(k), j);
      if (std::abs(v) > opts_.cleanup_tol) row.add_term(mons[static_cast<std::size_t>(M - 1 - j)], v);
    }
    rows_.emplace(p, std::move(row));
  }

  staircase_.clear();
  for (const auto& m : mons)
    if (!rows_.count(m)) staircase_.push_back(m);

  const double tail_tol = std::max(1e-8, 100 * opts_.rank_tol);
  finite_ = true;
  for (int a = 0; a <= D; ++a) {
    const Monomial m{a, D - a};
    auto it = rows_.find(m);
    if (it == rows_.end() || !is_pivot_free_tail(it->second, m, tail_tol)) {
      finite_ = false;
      break;
    }
  }

  reduced_.clear();
  if (finite_) {
    for (const auto& [p, row] : rows_) {
      bool minimal = true;
      if (p.a > 0 && rows_.count(Monomial{p.a - 1, p.b})) minimal = false;
      if (p.b > 0 && rows_.count(Monomial{p.a, p.b - 1})) minimal = false;
      if (minimal) reduced_.push_back(row);
    }
  }
}

std::optional<std::size_t> Ideal::length() const {
  if (!finite_) return std::nullopt;
  return staircase_.size();
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!finite_) throw Error(ErrorKind::CapTooSmall, "ideal has no finite staircase under cap " + std::to_string(cap_));
  Polynomial r = kind_ == Kind::Local ? local_normal_form(f) : division_normal_form(f);
  return r.pruned_abs(opts_.cleanup_tol * f.max_abs());
}

Polynomial Ideal::local_normal_form(const Polynomial& f) const {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > cap_) continue;
    auto it = rows_.find(m);
    if (it == rows_.end()) {
      out.add_term(m, c);
      continue;
    }
    for (const auto& [mm, cc] : it->second.terms())
      if (mm != m) out.add_term(mm, -c * cc);
  }
  return out;
}

Polynomial Ideal::division_normal_form(const Polynomial& f) const {
  Polynomial work = f;
  Polynomial out;
  while (!work.is_zero()) {
    const Monomial m = work.leading();
    const Complex c = work.leading_coeff();
    work.add_term(m, -c);
    const Polynomial* div = nullptr;
    for (const auto& g : reduced_)
      if (g.leading().divides(m)) {
        div = &g;
        break;
      }
    if (!div) {
      out.add_term(m, c);
      continue;
    }
    const Monomial lm = div->leading();
    const Monomial u{m.a - lm.a, m.b - lm.b};
    for (const auto& [mm, cc] : div->terms())
      if (mm != lm) work.add_term(u * mm, -c * cc);
  }
  return out;
}

bool Ideal::contains(const Polynomial& f, double tol) const {
  if (f.is_zero()) return true;
  return normal_form(f).max_abs() <= tol * f.max_abs();
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  if (kind_ != Kind::Local || !finite_) return reduced_;
  std::vector<Polynomial> gens;
  for (const auto& g : reduced_) {
    gens.push_back(Polynomial::variable(0) * g);
    gens.push_back(Polynomial::variable(1) * g);
  }
  const Ideal mI = Ideal::local(gens, cap_ + 1, opts_);
  const auto& stair = mI.staircase();
  std::vector<Eigen::VectorXcd> basis;
  std::vector<Polynomial> out;
  const double tol = std::max(1e-6, 100 * opts_.rank_tol);
  for (const auto& g : reduced_) {
    const Polynomial nf = mI.normal_form(g);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(stair.size()));
    for (std::size_t i = 0; i < stair.size(); ++i) v(static_cast<Eigen::Index>(i)) = nf.coeff(stair[i]);
    const double n0 = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q.dot(v) * q;
    const double n1 = v.norm();
    if (n1 > tol * std::max(1.0, n0)) {
      basis.push_back(v / n1);
      out.push_back(g);
    }
  }
  return out;
}

bool ideal_contains(const Ideal& I, const Ideal& J, double tol) {
  const auto& gens = J.finite() ? J.reduced_basis() : J.generators();
  for (const auto& g : gens)
    if (!I.contains(g, tol)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, double tol) {
  if (I.length() != J.length()) return false;
  return ideal_contains(I, J, tol) && ideal_contains(J, I, tol);
}

Ideal vanishing_ideal(const std::vector<Point>& points, int cap, IdealOptions opts) {
  const std::size_t N = points.size();
  if (N == 0) throw Error(ErrorKind::DuplicatePoints, "empty point set");
  if (cap < 0) cap = static_cast<int>(N);

  double diam = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      diam = std::max(diam, std::hypot(std::abs(points[i][0] - points[j][0]), std::abs(points[i][1] - points[j][1])));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      double d = std::hypot(std::abs(points[i][0] - points[j][0]), std::abs(points[i][1] - points[j][1]));
      if (d <= 1e-12 * diam || diam == 0)
        throw Error(ErrorKind::DuplicatePoints,
                    "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    }

  std::array<double, 2> s{0, 0};
  for (const auto& p : points)
    for (int j = 0; j < 2; ++j) s[j] = std::max(s[j], std::abs(p[j]));
  for (auto& x : s)
    if (x == 0) x = 1;

  const Eigen::Index n = static_cast<Eigen::Index>(N);
  auto eval = [&](const Monomial& t) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Point& p = points[static_cast<std::size_t>(k)];
      v(k) = std::pow(p[0] / s[0], t.a) * std::pow(p[1] / s[1], t.b);
    }
    return v;
  };

  std::vector<Eigen::VectorXcd> Q;
  std::vector<Eigen::VectorXcd> Rcols;
  std::vector<Monomial> stair;
  std::vector<Polynomial> gb;
  std::set<Monomial, GrlexLess> cand{Monomial{}};
  while (!cand.empty()) {
    const Monomial t = *cand.begin();
    cand.erase(cand.begin());
    bool skip = false;
    for (const auto& g : gb)
      if (g.leading().divides(t)) skip = true;
    if (skip) continue;
    if (t.degree() > cap)
      throw Error(ErrorKind::CapTooSmall, "staircase not closed under cap " + std::to_string(cap));
    Eigen::VectorXcd v = eval(t);
    const double vn = v.norm();
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(Q.size()));
    Eigen::VectorXcd r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < Q.size(); ++i) {
        const Complex c = Q[i].dot(r);
        h(static_cast<Eigen::Index>(i)) += c;
        r -= c * Q[i];
      }
    const double rn = r.norm();
    if (rn <= opts.rank_tol * vn || vn == 0) {
      const Eigen::Index m = static_cast<Eigen::Index>(stair.size());
      Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(m, m);
      for (Eigen::Index j = 0; j < m; ++j) R.col(j).head(j + 1) = Rcols[static_cast<std::size_t>(j)];
      Eigen::VectorXcd c = m > 0 ? Eigen::VectorXcd(R.triangularView<Eigen::Upper>().solve(h)) : Eigen::VectorXcd();
      Polynomial g(t, 1.0);
      for (Eigen::Index j = 0; j < m; ++j) g.add_term(stair[static_cast<std::size_t>(j)], -c(j));
      g = g.pruned(opts.cleanup_tol);
      Polynomial out;
      for (const auto& [mm, cc] : g.terms())
        out.add_term(mm, cc * std::pow(s[0], t.a - mm.a) * std::pow(s[1], t.b - mm.b));
      gb.push_back(out);
    } else {
      Eigen::VectorXcd col(static_cast<Eigen::Index>(Q.size()) + 1);
      col.head(static_cast<Eigen::Index>(Q.size())) = h;
      col(static_cast<Eigen::Index>(Q.size())) = rn;
      Rcols.push_back(col);
      Q.push_back(r / rn);
      stair.push_back(t);
      cand.insert(Monomial{t.a + 1, t.b});
      cand.insert(Monomial{t.a, t.b + 1});
    }
  }
  return Ideal::from_groebner(std::move(gb), std::move(stair), cap, opts);
}

}  // namespace illab
