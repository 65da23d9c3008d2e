#pragma once

#include <string>
#include <string_view>

#include "dvf/dvmodel.hpp"

namespace dvf {

/// Model files use a TOML subset: `key = value` lines with strings, integers,
/// inline tables and (multi-line) arrays, `#` comments.
///
///   group = "Z x Z"
///   precision = "[2;0]"
///   u = "1"
///   character = { omega = "t^[-1;0]", unit = "0" }
///   coeff = { th1 = "t^[0;-3]" }
///   generators = [ { th = 2, exponent = "[0;3]", origin = "density" } ]
///
/// `character` keys are c0, c1, ... (most significant first); `omega` and
/// `unit` name the coordinates of a rank-2 group, `unit` the only one of a
/// rank-1 group. Each generator must have a `coeff` entry.
DVModel parse_model(std::string_view text);
DVModel load_model(const std::string& path);

/// Canonical text of a model; parse_model(model_text(m)) rebuilds m.
std::string model_text(const DVModel& m);
void save_model(const DVModel& m, const std::string& path);

/// `dir/name.toml` -> `dir/name.grown.toml`.
std::string grown_model_path(const std::string& path);

}  // namespace dvf
