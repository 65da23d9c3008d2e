#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dvf/coeffield.hpp"
#include "dvf/ordgroup.hpp"

namespace dvf {

using Term = std::pair<GroupElem, KElem>;

/// Truncated Hahn series: finitely many terms below a precision cap O(t^p).
/// A series with infinite precision is exact. Terms are ascending, have
/// distinct exponents, nonzero coefficients, and lie strictly below the cap.
class HahnSeries {
 public:
  explicit HahnSeries(std::size_t rank = 1) : rank_(rank), precision_(ExtGroupElem::infinity()) {}
  HahnSeries(std::size_t rank, std::vector<Term> terms, ExtGroupElem precision = ExtGroupElem::infinity());

  static HahnSeries constant(std::size_t rank, const KElem& c);
  static HahnSeries monomial(const KElem& c, const GroupElem& g);
  static HahnSeries t_pow(const GroupElem& g) { return monomial(KElem(1), g); }
  /// The zero series known only up to O(t^p).
  static HahnSeries big_o(const GroupElem& p);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const ExtGroupElem& precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_.is_infinite(); }
  /// No visible terms: zero up to the precision cap.
  bool is_zero_at_precision() const noexcept { return terms_.empty(); }
  bool definitely_zero() const noexcept { return terms_.empty() && is_exact(); }
  bool is_monomial() const noexcept { return terms_.size() == 1 && is_exact(); }

  /// Least exponent; +inf for the exact zero. PrecisionError when no term
  /// is visible below a finite cap.
  ExtGroupElem val() const;
  /// Least exponent, or the cap when no term is visible.
  ExtGroupElem val_lower_bound() const;
  /// Coefficient of t^g (zero if absent); PrecisionError when g is not below the cap.
  KElem coeff(const GroupElem& g) const;
  /// res for val >= 0: coefficient of t^0.
  KElem res() const;

  HahnSeries truncated(const ExtGroupElem& cap) const;
  /// Terms with exponent <= bound, as an exact series.
  HahnSeries head(const GroupElem& bound) const;

  HahnSeries operator-() const;
  HahnSeries& operator+=(const HahnSeries& o);
  HahnSeries& operator-=(const HahnSeries& o);
  friend HahnSeries operator+(HahnSeries a, const HahnSeries& b) { return a += b; }
  friend HahnSeries operator-(HahnSeries a, const HahnSeries& b) { return a -= b; }
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);
  HahnSeries scaled(const KElem& c) const;
  /// Multiplication by c * t^g, exact.
  HahnSeries shifted(const KElem& c, const GroupElem& g) const;
  HahnSeries map_coeffs(const std::function<KElem(const KElem&)>& f) const;
  HahnSeries pow(unsigned n) const;

  /// Highest theta index among the coefficients.
  std::size_t max_symbol() const;

  /// Same terms and same cap.
  friend bool operator==(const HahnSeries&, const HahnSeries&);

  std::string to_string() const;

 private:
  void canonicalize();
  std::size_t rank_;
  std::vector<Term> terms_;
  ExtGroupElem precision_;
};

std::ostream& operator<<(std::ostream& os, const HahnSeries& s);

/// Equal where both are known: the difference shows no term.
bool equal_at_precision(const HahnSeries& a, const HahnSeries& b);
/// Equal and both exact.
bool definitely_equal(const HahnSeries& a, const HahnSeries& b);

/// 1/x up to O(t^target). When the unit part converges too slowly for the
/// capped number of geometric terms the result carries a lower cap.
HahnSeries invert(const HahnSeries& x, const GroupElem& target, unsigned max_terms = 64);
/// a / b; exact when b is an exact monomial, otherwise through invert.
HahnSeries divide(const HahnSeries& a, const HahnSeries& b, const GroupElem& target);

/// Element of D = K/m, represented by the exact part with exponents <= 0.
class ResidueClass {
 public:
  explicit ResidueClass(std::size_t rank = 1) : rep_(rank) {}
  /// `rep` must be exact with every exponent <= 0.
  explicit ResidueClass(HahnSeries rep);

  const HahnSeries& rep() const noexcept { return rep_; }
  std::size_t rank() const noexcept { return rep_.rank(); }
  bool is_zero() const noexcept { return rep_.terms().empty(); }
  /// D-valuation: val(rep) <= 0, or +inf for the zero class.
  ExtGroupElem dval() const;
  /// Coefficient of t^0 of the representative.
  KElem res2() const;

  ResidueClass operator-() const { return ResidueClass(-rep_); }
  friend ResidueClass operator+(const ResidueClass& a, const ResidueClass& b);
  friend ResidueClass operator-(const ResidueClass& a, const ResidueClass& b);
  friend bool operator==(const ResidueClass& a, const ResidueClass& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string(); }

 private:
  HahnSeries rep_;
};

/// The class x + m. Needs the cap above 0.
ResidueClass dclass(const HahnSeries& x);
/// a * d in D. Needs enough precision in `a` to fix the product mod m.
ResidueClass mul_class(const HahnSeries& a, const ResidueClass& d);
/// Some x in D with a * x = d, for nonzero a in O.
ResidueClass divide_class(const HahnSeries& a, const ResidueClass& d);

/// A nonzero q in {1, 1/2, 1/6, ..., 1/n!} with coarsen(val(b - q)) <= 0 for
/// each listed convex subgroup, so 1/(b - q) lies in every coarsened ring.
Rational separating_rational(const HahnSeries& b, const std::vector<ConvexSubgroup>& coarsenings);


}  // namespace dvf
