#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dvf/errors.hpp"

namespace dvf {

using Rational = mpq_class;

std::string to_string(const Rational& q);

enum class CoordKind { Integers, Rationals };

/// An element of a lexicographically ordered group Z^k / Q^k (or a mix).
/// Coordinate 0 is the most significant. The element does not carry its
/// descriptor; mixing ranks raises StructuralError.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
  }
  GroupElem(std::initializer_list<long> coords);

  static GroupElem zero(std::size_t rank) { return GroupElem(std::vector<Rational>(rank)); }
  /// Basis vector e_i of a rank-k group.
  static GroupElem unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// -1, 0 or +1 according to the lex order.
  int sign() const;

  GroupElem operator-() const;
  GroupElem& operator+=(const GroupElem& other);
  GroupElem& operator-=(const GroupElem& other);
  friend GroupElem operator+(GroupElem a, const GroupElem& b) { return a += b; }
  friend GroupElem operator-(GroupElem a, const GroupElem& b) { return a -= b; }
  /// Scalar multiple in the divisible hull.
  friend GroupElem operator*(const Rational& s, const GroupElem& a);

  friend bool operator==(const GroupElem& a, const GroupElem& b);
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b);

 private:
  std::vector<Rational> coords_;
};

/// Total lex comparison. Throws StructuralError on rank mismatch.
std::strong_ordering compare(const GroupElem& a, const GroupElem& b);

/// Gamma extended by +infinity.
class ExtGroupElem {
 public:
  ExtGroupElem(GroupElem g) : value_(std::move(g)) {}  // NOLINT: implicit by design of Gamma ⊂ Gamma ∪ {∞}
  static ExtGroupElem infinity() { return ExtGroupElem(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const GroupElem& value() const;

  friend ExtGroupElem operator+(const ExtGroupElem& a, const ExtGroupElem& b);
  friend bool operator==(const ExtGroupElem& a, const ExtGroupElem& b);
  friend std::strong_ordering operator<=>(const ExtGroupElem& a, const ExtGroupElem& b);

 private:
  ExtGroupElem() = default;
  std::optional<GroupElem> value_;
};

inline const ExtGroupElem& min(const ExtGroupElem& a, const ExtGroupElem& b) { return b < a ? b : a; }
inline const ExtGroupElem& max(const ExtGroupElem& a, const ExtGroupElem& b) { return a < b ? b : a; }

/// The subgroup of elements whose first `cut` coordinates vanish.
struct ConvexSubgroup {
  std::size_t cut = 0;

  bool contains(const GroupElem& g) const;
};

/// Descriptor of a finite-rank lexicographic product of Z and Q.
class ValueGroupDesc {
 public:
  explicit ValueGroupDesc(std::vector<CoordKind> kinds);

  static ValueGroupDesc integers(std::size_t rank);
  static ValueGroupDesc rationals(std::size_t rank);
  /// Z + Z·omega with omega = [1;0] above every [0;n].
  static ValueGroupDesc z_plus_z_omega() { return integers(2); }

  std::size_t rank() const noexcept { return kinds_.size(); }
  CoordKind kind(std::size_t i) const { return kinds_.at(i); }
  const std::vector<CoordKind>& kinds() const noexcept { return kinds_; }

  bool contains(const GroupElem& g) const;
  /// Validating constructor.
  GroupElem make(std::vector<Rational> coords) const;
  GroupElem zero() const { return GroupElem::zero(rank()); }
  /// One unit in the least significant coordinate.
  GroupElem least_unit() const { return GroupElem::unit(rank(), rank() - 1); }

  /// Descriptor of Gamma / Delta (the first `cut` coordinates).
  ValueGroupDesc quotient(const ConvexSubgroup& delta) const;

  friend bool operator==(const ValueGroupDesc&, const ValueGroupDesc&) = default;

 private:
  std::vector<CoordKind> kinds_;
};

/// Structural Z-lessness: the least significant coordinate is divisible.
bool is_z_less(const ValueGroupDesc& g);

/// Image of `a` in Gamma / Delta: its first `delta.cut` coordinates.
GroupElem coarsen(const GroupElem& a, const ConvexSubgroup& delta);

/// Some b in the group with p·a < b < q·a. Requires a > 0, 0 <= p < q and a
/// Z-less descriptor. Picks the interior point closest to the midpoint that
/// the group admits.
GroupElem strict_between(const ValueGroupDesc& g, const GroupElem& a, const Rational& p,
                         const Rational& q);

/// `[j;i;...]`, or a bare rational for rank 1.
std::string to_string(const GroupElem& g);
std::string to_string(const ExtGroupElem& g);
std::ostream& operator<<(std::ostream& os, const GroupElem& g);
std::ostream& operator<<(std::ostream& os, const ExtGroupElem& g);

/// Parses the text form. A bare rational is embedded in the least significant
/// coordinate of a rank-`rank` group.
GroupElem parse_group_elem(std::string_view text, std::size_t rank);
Rational parse_rational(std::string_view text);

}  // namespace dvf
