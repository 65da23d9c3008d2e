#pragma once

#include <vector>

#include "dvf/hahn.hpp"

namespace dvf {

/// a_0 + a_1 x + ... + a_n x^n with a_n != 0 and n >= 1.
class ValuedPoly {
 public:
  explicit ValuedPoly(std::vector<HahnSeries> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::size_t rank() const noexcept { return coeffs_.front().rank(); }
  const std::vector<HahnSeries>& coeffs() const noexcept { return coeffs_; }
  const HahnSeries& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Formal derivative; requires degree >= 2.
  ValuedPoly derivative() const;
  /// P(c x + b).
  ValuedPoly substitute(const HahnSeries& c, const HahnSeries& b) const;
  /// prod (x - r_i), times `lead`.
  static ValuedPoly from_roots(const std::vector<HahnSeries>& roots, const HahnSeries& lead);

  std::string to_string() const;

 private:
  std::vector<HahnSeries> coeffs_;
};

struct NewtonVertex {
  std::size_t index;
  GroupElem value;
};

struct NewtonSegment {
  /// In the divisible hull; a root valuation is the negated slope.
  GroupElem slope;
  std::size_t length;
};

struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
  std::vector<NewtonSegment> segments;
};

/// Lower convex hull of (i, val a_i) over the nonzero coefficients.
NewtonPolygon polygon(const ValuedPoly& p);

/// Roots of valuation >= 0 with multiplicity: the largest i with val(a_i)
/// minimal. Exact zero roots count.
std::size_t count_roots_in_O(const ValuedPoly& p);

struct RolleVerdict {
  std::size_t roots_in_ball;
  std::size_t derivative_roots_in_ball;
  bool certified;
};

/// Closed ball {x : val(x - center) >= radius}. PreconditionError unless P
/// has at least two roots there.
RolleVerdict rolle_check(const ValuedPoly& p, const HahnSeries& center, const GroupElem& radius);

struct RadicalSplit {
  HahnSeries b;
  HahnSeries c;
  HahnSeries e;
  GroupElem gamma;
};

/// a = b c^n with b = e^n a^(1-n), c = a / e and val(e) strictly between
/// (n-1)/n val(a) and val(a). Inverses are taken to O(t^precision).
RadicalSplit split_radical(const ValueGroupDesc& g, const HahnSeries& a, unsigned n, const GroupElem& precision);

}  // namespace dvf
