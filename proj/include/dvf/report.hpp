#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dvf/dvmodel.hpp"
#include "dvf/inflator.hpp"

namespace dvf {

using Json = nlohmann::ordered_json;

/// {operation, inputs, output, witness_ledger, precision_used}. Field order
/// is fixed so that printed reports are byte-stable.
struct Report {
  std::string operation;
  Json inputs = Json::object();
  Json output = Json::object();
  /// Generators adjoined while computing the output.
  std::vector<GeneratorRecord> witness_ledger;
  std::string precision_used;

  Json to_json() const;
};

Json generator_json(const GeneratorRecord& g);
Json dual_json(const DualNumber& d);
/// {basis, complete, method, witnesses}.
Json specialization_json(const Specialization& s);
/// {"error": {code, message, offset}}; offset is null unless parsing failed.
Json error_json(const std::string& code, const std::string& message, const std::size_t* offset);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace dvf
