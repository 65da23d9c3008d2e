#include "dvf/report.hpp"

namespace dvf {

Json generator_json(const GeneratorRecord& g) {
  return Json{{"th", "th" + std::to_string(g.index)},
              {"exponent", to_string(g.exponent)},
              {"derivative", g.derivative.to_string()},
              {"origin", g.origin}};
}

Json dual_json(const DualNumber& d) { return d.to_string(); }

Json specialization_json(const Specialization& s) {
  Json basis = Json::array();
  for (const auto& v : s.space.basis()) {
    Json row = Json::array();
    for (const auto& d : v) row.push_back(dual_json(d));
    basis.push_back(std::move(row));
  }
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses) {
    Json image = Json::array();
    for (const auto& d : w.image) image.push_back(dual_json(d));
    witnesses.push_back(Json{{"lambda", w.lambda.to_string()}, {"image", std::move(image)}});
  }
  return Json{{"basis", std::move(basis)},
              {"complete", s.space.completeness == Completeness::Complete},
              {"method", s.method},
              {"witnesses", std::move(witnesses)}};
}

Json error_json(const std::string& code, const std::string& message, const std::size_t* offset) {
  return Json{{"error", Json{{"code", code}, {"message", message}, {"offset", offset ? Json(*offset) : Json()}}}};
}

Json Report::to_json() const {
  Json ledger = Json::array();
  for (const auto& g : witness_ledger) ledger.push_back(generator_json(g));
  return Json{{"operation", operation},
              {"inputs", inputs},
              {"output", output},
              {"witness_ledger", std::move(ledger)},
              {"precision_used", precision_used}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dvf
