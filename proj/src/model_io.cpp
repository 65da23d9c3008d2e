#include "dvf/model_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dvf/parse.hpp"

namespace dvf {

namespace {

using Json = nlohmann::ordered_json;

class TomlReader {
 public:
  explicit TomlReader(std::string_view text) : s_(text) {}

  Json document() {
    Json doc = Json::object();
    for (;;) {
      skip_blank_lines();
      if (pos_ == s_.size()) return doc;
      const std::size_t at = pos_;
      const std::string key = bare_key();
      skip_spaces();
      expect('=');
      skip_spaces();
      if (doc.contains(key)) throw ParseError("duplicate key '" + key + "'", at);
      doc[key] = value();
      offsets_[key] = at;
      skip_spaces();
      skip_comment();
      if (pos_ < s_.size() && s_[pos_] != '\n') throw ParseError("expected end of line", pos_);
    }
  }

  std::size_t offset_of(const std::string& key) const {
    auto it = offsets_.find(key);
    return it == offsets_.end() ? 0 : it->second;
  }

 private:
  Json value() {
    if (pos_ == s_.size()) throw ParseError("expected a value", pos_);
    const char c = s_[pos_];
    if (c == '"') return string();
    if (c == '{') return inline_table();
    if (c == '[') return array();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Json string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\n') throw ParseError("unterminated string", pos_);
      if (s_[pos_] == '\\') {
        if (++pos_ == s_.size()) break;
        if (s_[pos_] != '"' && s_[pos_] != '\\') throw ParseError("unsupported escape", pos_);
      }
      out += s_[pos_++];
    }
    expect('"');
    return out;
  }

  Json integer() {
    const std::size_t at = pos_;
    if (s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return std::stoll(std::string(s_.substr(at, pos_ - at)));
    } catch (const std::exception&) {
      throw ParseError("malformed integer", at);
    }
  }

  Json inline_table() {
    ++pos_;
    Json t = Json::object();
    skip_spaces();
    if (peek('}')) return ++pos_, t;
    for (;;) {
      skip_spaces();
      const std::size_t at = pos_;
      const std::string key = bare_key();
      skip_spaces();
      expect('=');
      skip_spaces();
      if (t.contains(key)) throw ParseError("duplicate key '" + key + "'", at);
      t[key] = value();
      skip_spaces();
      if (peek('}')) return ++pos_, t;
      expect(',');
    }
  }

  Json array() {
    ++pos_;
    Json a = Json::array();
    for (;;) {
      skip_blank_lines();
      if (peek(']')) return ++pos_, a;
      a.push_back(value());
      skip_blank_lines();
      if (peek(']')) return ++pos_, a;
      expect(',');
    }
  }

  std::string bare_key() {
    const std::size_t at = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
      ++pos_;
    if (pos_ == at) throw ParseError("expected a key", at);
    return std::string(s_.substr(at, pos_ - at));
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_spaces() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  void skip_comment() {
    if (peek('#'))
      while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
  }

  void skip_blank_lines() {
    for (;;) {
      skip_spaces();
      skip_comment();
      if (!peek('\n')) return;
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> coordinate_names(std::size_t rank) {
  if (rank == 1) return {"unit"};
  if (rank == 2) return {"omega", "unit"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

ValueGroupDesc parse_group(const std::string& text, std::size_t at) {
  std::vector<CoordKind> kinds;
  std::istringstream in(text);
  std::string tok;
  bool want_factor = true;
  while (in >> tok) {
    if (!want_factor) {
      if (tok != "x") throw ParseError("group factors are separated by ' x '", at);
      want_factor = true;
      continue;
    }
    std::size_t count = 1;
    std::string base = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      try {
        count = std::stoul(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("malformed group power '" + tok + "'", at);
      }
    }
    if (base != "Z" && base != "Q") throw ParseError("group factors are Z or Q, got '" + base + "'", at);
    kinds.insert(kinds.end(), count, base == "Z" ? CoordKind::Integers : CoordKind::Rationals);
    want_factor = false;
  }
  if (kinds.empty() || want_factor) throw ParseError("malformed group '" + text + "'", at);
  return ValueGroupDesc(std::move(kinds));
}

const std::string& string_field(const Json& obj, const std::string& key, std::size_t at) {
  if (!obj.contains(key)) throw ParseError("missing key '" + key + "'", at);
  if (!obj[key].is_string()) throw ParseError("'" + key + "' must be a string", at);
  return obj[key].get_ref<const std::string&>();
}

// Re-raises parse failures inside a field value at the field's offset.
template <class F>
auto within(const std::string& what, std::size_t at, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.what(), at);
  }
}

std::size_t symbol_index(const std::string& key, std::size_t at) {
  if (key.size() < 3 || key.compare(0, 2, "th") != 0) throw ParseError("coeff keys are th1, th2, ...", at);
  try {
    std::size_t used = 0;
    const unsigned long i = std::stoul(key.substr(2), &used);
    if (used != key.size() - 2 || i == 0) throw std::invalid_argument(key);
    return i;
  } catch (const std::exception&) {
    throw ParseError("coeff keys are th1, th2, ...", at);
  }
}

}  // namespace

DVModel parse_model(std::string_view text) {
  TomlReader reader(text);
  const Json doc = reader.document();
  for (const auto& [key, v] : doc.items())
    if (key != "group" && key != "precision" && key != "u" && key != "character" && key != "coeff" &&
        key != "generators")
      throw ParseError("unknown key '" + key + "'", reader.offset_of(key));

  const ValueGroupDesc group = parse_group(string_field(doc, "group", 0), reader.offset_of("group"));
  const std::size_t r = group.rank();
  const SeriesParseOptions opts{r, std::nullopt};
  auto series = [&](const std::string& key, const std::string& s) {
    return within("in '" + key + "'", reader.offset_of(key), [&] { return parse_series(s, opts); });
  };

  const std::size_t prec_at = reader.offset_of("precision");
  const GroupElem precision =
      within("in 'precision'", prec_at, [&] { return parse_group_elem(string_field(doc, "precision", 0), r); });
  const HahnSeries u = doc.contains("u") ? series("u", string_field(doc, "u", 0)) : HahnSeries::constant(r, 1);

  std::vector<HahnSeries> character(r, HahnSeries(r));
  if (doc.contains("character")) {
    const std::size_t at = reader.offset_of("character");
    const Json& c = doc["character"];
    if (!c.is_object()) throw ParseError("'character' must be an inline table", at);
    const std::vector<std::string> names = coordinate_names(r);
    for (const auto& [key, v] : c.items()) {
      std::size_t i = r;
      for (std::size_t j = 0; j < r; ++j)
        if (key == names[j] || key == "c" + std::to_string(j)) i = j;
      if (i == r) throw ParseError("unknown character coordinate '" + key + "'", at);
      if (!v.is_string()) throw ParseError("character entries must be strings", at);
      character[i] = series("character", v.get<std::string>());
    }
  }

  std::map<std::size_t, HahnSeries> table;
  if (doc.contains("coeff")) {
    const std::size_t at = reader.offset_of("coeff");
    const Json& c = doc["coeff"];
    if (!c.is_object()) throw ParseError("'coeff' must be an inline table", at);
    for (const auto& [key, v] : c.items()) {
      if (!v.is_string()) throw ParseError("coeff entries must be strings", at);
      table.emplace(symbol_index(key, at), series("coeff", v.get<std::string>()));
    }
  }

  std::vector<GeneratorRecord> log;
  if (doc.contains("generators")) {
    const std::size_t at = reader.offset_of("generators");
    const Json& g = doc["generators"];
    if (!g.is_array()) throw ParseError("'generators' must be an array", at);
    for (const auto& rec : g) {
      if (!rec.is_object() || !rec.contains("th") || !rec["th"].is_number_integer() || rec["th"].get<long long>() <= 0)
        throw ParseError("generator records need a positive integer 'th'", at);
      const std::size_t index = rec["th"].get<std::size_t>();
      auto it = table.find(index);
      if (it == table.end()) throw ParseError("generator th" + std::to_string(index) + " has no coeff entry", at);
      const GroupElem e = within("in 'generators'", at, [&] { return parse_group_elem(string_field(rec, "exponent", at), r); });
      const std::string origin = rec.contains("origin") ? string_field(rec, "origin", at) : "";
      log.push_back({index, e, it->second, origin});
    }
  }
  return DVModel(group, DerivationSpec(std::move(character), std::move(table), u), precision, std::move(log));
}

DVModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read model file " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_text(const DVModel& m) {
  const std::size_t r = m.rank();
  const DerivationSpec d = m.derivation();
  std::string out = "group = \"";
  for (std::size_t i = 0; i < r; ++i)
    out += std::string(i ? " x " : "") + (m.group().kind(i) == CoordKind::Integers ? "Z" : "Q");
  out += "\"\nprecision = " + quoted(to_string(m.working_precision())) + "\n";
  out += "u = " + quoted(d.u.to_string()) + "\n";
  const std::vector<std::string> names = coordinate_names(r);
  out += "character = {";
  for (std::size_t i = 0; i < r; ++i) out += (i ? ", " : " ") + names[i] + " = " + quoted(d.character[i].to_string());
  out += " }\ncoeff = {";
  bool first = true;
  for (const auto& [i, s] : d.coeff_table) {
    out += (first ? " th" : ", th") + std::to_string(i) + " = " + quoted(s.to_string());
    first = false;
  }
  out += first ? "}\n" : " }\n";
  const auto log = m.generator_log();
  if (log.empty()) return out;
  out += "generators = [\n";
  for (const auto& g : log)
    out += "  { th = " + std::to_string(g.index) + ", exponent = " + quoted(to_string(g.exponent)) +
           ", origin = " + quoted(g.origin) + " },\n";
  return out + "]\n";
}

void save_model(const DVModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write model file " + path, 0);
  out << model_text(m);
}

std::string grown_model_path(const std::string& path) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + ".grown" + p.extension().string())).string();
}

}  // namespace dvf
