#pragma once

#include <string>
#include <vector>

#include "dvf/dvmodel.hpp"

namespace dvf {

/// res(x) + res2(dx) eps for x in R.
DualNumber wres(const DVModel& m, const HahnSeries& x);

/// The membership probes x, 1/x, 1/(x-1), 1/(x+1), in that order.
enum class Probe { Identity, Inverse, MinusOne, PlusOne };
const char* to_string(Probe p);
/// The constant c with probe = 1/(x - c); Identity has none.
Rational probe_shift(Probe p);

struct TameClass {
  enum class Kind { InR, TameViaProbe, Wild };
  Kind kind = Kind::Wild;
  Probe probe = Probe::Identity;
  /// wres of the witness; meaningless for Wild.
  DualNumber value;
  HahnSeries witness;
};

const char* to_string(TameClass::Kind k);

/// First probe that lands in R, or Wild when none does.
TameClass classify_tame(const DVModel& m, const HahnSeries& x);

/// A point of projective space over K: a nonzero tuple up to scaling.
class Line {
 public:
  explicit Line(std::vector<HahnSeries> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<HahnSeries>& coords() const noexcept { return coords_; }
  const HahnSeries& operator[](std::size_t i) const { return coords_[i]; }
  /// Index of the first coordinate that is not the exact zero.
  std::size_t pivot() const;
  /// Divides by the pivot coordinate; quotients are taken to O(t^precision).
  Line canonical(const GroupElem& precision) const;

  std::string to_string() const;

 private:
  std::vector<HahnSeries> coords_;
};

/// Row-major Kronecker product (arg_i * base_j).
Line kronecker(const Line& arg, const Line& base);

enum class Completeness { Complete, LowerBound };

/// A k-subspace of k[eps]^n kept as a reduced row echelon basis over k on the
/// 2n coordinates (a_1, b_1, ..., a_n, b_n) of x_i = a_i + b_i eps.
class EpsSubspace {
 public:
  explicit EpsSubspace(std::size_t ambient = 1) : ambient_(ambient) {}

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  /// Adds v to the span; true when the dimension grew.
  bool add(const std::vector<DualNumber>& v);
  bool contains(const std::vector<DualNumber>& v) const;
  std::vector<std::vector<DualNumber>> basis() const;

  Completeness completeness = Completeness::Complete;

  /// Same ambient and same echelon basis; completeness is not compared.
  friend bool operator==(const EpsSubspace& a, const EpsSubspace& b);
  std::string to_string() const;

 private:
  std::vector<KElem> flatten(const std::vector<DualNumber>& v) const;
  std::vector<KElem> reduce(std::vector<KElem> v) const;
  std::size_t ambient_;
  std::vector<std::vector<KElem>> rows_;
};

/// Box of exponents for witness enumeration. Each coordinate runs over the
/// integers in [lo_i, hi_i]; only g >= 0 is used.
struct SearchWindow {
  GroupElem lo;
  GroupElem hi;
  bool binomials = true;
  std::size_t max_candidates = 20000;
};

SearchWindow default_window(const DVModel& m);

struct LineWitness {
  /// Multiplies the line scaled so that its pivot coordinate is 1.
  HahnSeries lambda;
  std::vector<DualNumber> image;
};

struct Specialization {
  EpsSubspace space;
  /// "coordinate", "in-R", "probe:<name>", "wild", "module" or "enumeration".
  std::string method;
  std::vector<LineWitness> witnesses;
};

/// The image of L meet R^n under wres, closed form where one is known.
Specialization specialize_line(const DVModel& m, const Line& line, const SearchWindow& window);
/// Span of wres(lambda * L) over lambda from the window; Complete once the
/// span reaches dimension 2.
Specialization enumerate_line(const DVModel& m, const Line& line, const SearchWindow& window);

/// The degenerate subspace k*eps of k[eps], checked by enumerating a wild line
/// built from a fresh weird witness.
EpsSubspace degeneracy_subspace(DVModel& m, const SearchWindow& window);

/// Specialization of the row-major Kronecker product (arg_i * base_j). Bases
/// with a zero coordinate are rejected.
Specialization mutate_line(const DVModel& m, const Line& base, const Line& arg, const SearchWindow& window);

/// Checks for a wild alpha with alpha^2 + b alpha + c = 0 and b, c in R.
struct DiscriminantCheck {
  bool quadratic_holds;
  bool alpha_wild;
  bool coefficients_in_R;
  /// b^2 - 4c lies in R with positive valuation.
  bool discriminant_in_p;
};

DiscriminantCheck check_discriminant(const DVModel& m, const HahnSeries& alpha, const HahnSeries& b,
                                     const HahnSeries& c);

}  // namespace dvf
