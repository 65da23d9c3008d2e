#pragma once

#include <map>
#include <vector>

#include "dvf/hahn.hpp"

namespace dvf {

/// delta_u(c t^g) = sum_m dc/dth_m * table[m] * t^g + u * c * t^g * L(g),
/// with L(g) = sum_i g_i * character[i].
struct DerivationSpec {
  std::vector<HahnSeries> character;
  /// th_m -> delta_u(th_m). A symbol missing here is undeclared.
  std::map<std::size_t, HahnSeries> coeff_table;
  HahnSeries u;

  DerivationSpec() = default;
  DerivationSpec(std::vector<HahnSeries> character, std::map<std::size_t, HahnSeries> table, HahnSeries u);

  /// The omega-derivation on Z + Z*omega: l_omega = t^-omega, l_1 = 0.
  static DerivationSpec partial0(const HahnSeries& u);
  /// Rank-1 integer analogue of d/dt: l_1 = t^-1.
  static DerivationSpec d_dt();

  std::size_t rank() const noexcept { return character.size(); }
  HahnSeries L(const GroupElem& g) const;
  /// Least valuation among the nonzero character entries and table entries;
  /// a cap pi on the input becomes pi + weight on the output.
  ExtGroupElem weight() const;
};

HahnSeries apply_delta(const DerivationSpec& d, const HahnSeries& x);
/// Class of delta_u(x) in D; x must lie in O.
ResidueClass apply_partial(const DerivationSpec& d, const HahnSeries& x);
/// Class of delta_u(x)/x in D. The inverse is taken `margin` beyond what the
/// class needs.
ResidueClass dlog(const DerivationSpec& d, const HahnSeries& x, const GroupElem& margin);
/// dlog with one least-significant unit of margin.
ResidueClass dlog(const DerivationSpec& d, const HahnSeries& x);

/// Both sides of dlog(x - y) = x/(x-y) dlog(x) - y/(x-y) dlog(y).
struct DiffsCertificate {
  bool equal;
  ResidueClass lhs;
  ResidueClass rhs;
};

/// PreconditionError unless val(x - y) <= max(val x, val y) is decidable and true.
DiffsCertificate check_diffs_identity(const DerivationSpec& d, const HahnSeries& x, const HahnSeries& y);

/// (x + y) dlog(x + y) = x dlog(x) + y dlog(y) in D, for nonzero x, y, x + y in O.
bool check_log_axiom(const DerivationSpec& d, const HahnSeries& x, const HahnSeries& y);

/// One unit in the least significant coordinate.
GroupElem least_unit(std::size_t rank);

}  // namespace dvf
