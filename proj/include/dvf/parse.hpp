#pragma once

#include <optional>
#include <string_view>

#include "dvf/coeffield.hpp"
#include "dvf/hahn.hpp"

namespace dvf {

struct SeriesParseOptions {
  /// Group rank; 0 infers it from the first bracketed exponent (else 1).
  std::size_t rank = 0;
  /// Cap used when dividing by a series that is not an exact monomial.
  std::optional<GroupElem> division_precision;
};

/// Parses `3/2*t^[0;2] + th1*t^[1;0] + O(t^[2;0])` and friends. A bare
/// rational exponent is embedded in the least significant coordinate.
HahnSeries parse_series(std::string_view text, const SeriesParseOptions& opts = {});
KElem parse_kelem(std::string_view text);
/// `a + b*eps`.
DualNumber parse_dual(std::string_view text);

}  // namespace dvf
