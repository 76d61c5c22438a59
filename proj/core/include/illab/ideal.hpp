#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "illab/polynomial.hpp"

namespace illab {

struct IdealOptions {
  double rank_tol = 1e-9;
  double cleanup_tol = 1e-10;
};

// Zero-dimensional ideal of C[z1, z2], either supported at the origin (kept as
// the reduced row echelon span of its elements modulo m^(cap+1)) or the
// vanishing ideal of a finite point set (kept as a reduced Groebner basis).
class Ideal {
 public:
  enum class Kind { Local, Points };

  // cap < 0 picks the largest generator degree.
  static Ideal local(std::vector<Polynomial> generators, int cap = -1, IdealOptions opts = {});
  static Ideal power_of_maximal(int k);
  static Ideal monomial_grid(int n1, int n2);
  static Ideal from_groebner(std::vector<Polynomial> basis, std::vector<Monomial> staircase, int cap,
                             IdealOptions opts);

  Kind kind() const { return kind_; }
  int cap() const { return cap_; }
  const IdealOptions& options() const { return opts_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool finite() const { return finite_; }
  std::optional<std::size_t> length() const;
  const std::vector<Monomial>& staircase() const { return staircase_; }

  // Elements m - NF(m) for the minimal leading monomials m, ascending grlex.
  const std::vector<Polynomial>& reduced_basis() const { return reduced_; }

  // Subset of the reduced basis whose classes span I / mI.
  std::vector<Polynomial> minimal_generators() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f, double tol = 1e-8) const;

 private:
  Ideal() = default;
  void build_local();
  Polynomial local_normal_form(const Polynomial& f) const;
  Polynomial division_normal_form(const Polynomial& f) const;

  Kind kind_ = Kind::Local;
  int cap_ = 0;
  IdealOptions opts_;
  bool finite_ = false;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> staircase_;
  std::vector<Polynomial> reduced_;
  std::map<Monomial, Polynomial, GrlexLess> rows_;
};

// J is contained in I.
bool ideal_contains(const Ideal& I, const Ideal& J, double tol = 1e-8);
bool ideal_equal(const Ideal& I, const Ideal& J, double tol = 1e-8);

Ideal vanishing_ideal(const std::vector<Point>& points, int cap = -1, IdealOptions opts = {});

}  // namespace illab
