#include "dvf/parse.hpp"

#include <cctype>
#include <string>

namespace dvf {

namespace {

enum class Mode { Coeff, Dual, Series };

// One grammar, three carriers. Series carry the rank; the others ignore it.
struct Value {
  HahnSeries series;
  DualNumber dual;
};

class Parser {
 public:
  Parser(std::string_view text, Mode mode, SeriesParseOptions opts)
      : text_(text), mode_(mode), opts_(std::move(opts)) {
    if (mode_ == Mode::Series && opts_.rank == 0) opts_.rank = infer_rank();
  }

  Value parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::size_t infer_rank() const {
    const auto open = text_.find('[');
    if (open == std::string_view::npos) return 1;
    const auto close = text_.find(']', open);
    std::size_t r = 1;
    for (std::size_t i = open; i < close && i < text_.size(); ++i)
      if (text_[i] == ';') ++r;
    return r;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  Value constant(const KElem& c) const {
    Value v;
    if (mode_ == Mode::Series) v.series = HahnSeries::constant(opts_.rank, c);
    v.dual = DualNumber(c);
    return v;
  }

  Value add(Value a, const Value& b, bool subtract) const {
    if (mode_ == Mode::Series)
      a.series = subtract ? a.series - b.series : a.series + b.series;
    else
      a.dual = subtract ? a.dual - b.dual : a.dual + b.dual;
    return a;
  }

  Value mul(Value a, const Value& b) const {
    if (mode_ == Mode::Series)
      a.series = a.series * b.series;
    else
      a.dual = a.dual * b.dual;
    return a;
  }

  Value div(Value a, const Value& b, std::size_t at) const {
    if (mode_ == Mode::Series) {
      if (b.series.definitely_zero()) throw ParseError("division by zero", at);
      if (!b.series.is_monomial()) {
        if (!opts_.division_precision)
          throw ParseError("division by a non-monomial series needs a working precision", at);
        a.series = divide(a.series, b.series, *opts_.division_precision);
      } else {
        const auto& [g, c] = b.series.terms().front();
        a.series = a.series.shifted(c.inverse(), -g);
      }
      return a;
    }
    if (b.dual.a.is_zero()) throw ParseError("division by a non-unit", at);
    if (mode_ == Mode::Coeff) {
      a.dual = DualNumber(a.dual.a / b.dual.a);
    } else {
      a.dual = a.dual * dual_invert(b.dual);
    }
    return a;
  }

  Value power(Value base, long e, std::size_t at) const {
    if (e < 0) {
      Value one = constant(KElem(1));
      base = div(one, base, at);
      e = -e;
    }
    Value r = constant(KElem(1));
    for (long i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Value expr() {
    Value v;
    const bool leading_minus = eat('-');
    if (!leading_minus) eat('+');
    v = term();
    if (leading_minus) v = add(constant(KElem()), v, true);
    while (true) {
      if (eat('+'))
        v = add(v, term(), false);
      else if (eat('-'))
        v = add(v, term(), true);
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (eat('*'))
        v = mul(v, unary());
      else if (eat('/'))
        v = div(v, unary(), at);
      else
        return v;
    }
  }

  Value unary() {
    if (eat('-')) return add(constant(KElem()), unary(), true);
    Value base = primary();
    skip_ws();
    const std::size_t at = pos_;
    if (eat('^')) return power(base, signed_integer(), at);
    return base;
  }

  long signed_integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    const std::string s(text_.substr(start, pos_ - start));
    if (pos_ - digits > 6) throw ParseError("exponent too large", start);
    return std::stol(s);
  }

  Rational natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Rational(std::string(text_.substr(start, pos_ - start)), 10);
  }

  GroupElem exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      const auto close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '['");
      pos_ = close + 1;
      return checked_exponent(text_.substr(start, pos_ - start), start);
    }
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an exponent");
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return checked_exponent(text_.substr(start, pos_ - start), start);
  }

  GroupElem checked_exponent(std::string_view s, std::size_t start) const {
    try {
      return parse_group_elem(s, opts_.rank);
    } catch (const ParseError& e) {
      throw ParseError("bad exponent", start + e.offset());
    } catch (const StructuralError&) {
      throw ParseError("exponent rank differs from " + std::to_string(opts_.rank), start);
    }
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return constant(KElem(natural()));
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 2) == "th") {
      pos_ += 2;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits) fail("expected a symbol index after 'th'");
      const std::string idx(text_.substr(digits, pos_ - digits));
      if (idx.size() > 6 || std::stoul(idx) == 0) throw ParseError("bad symbol index", digits);
      return constant(KElem::symbol(std::stoul(idx)));
    }
    if (text_.substr(pos_, 3) == "eps") {
      if (mode_ != Mode::Dual) fail("'eps' is only allowed in dual numbers");
      pos_ += 3;
      Value v;
      v.dual = DualNumber::eps();
      return v;
    }
    if (text_.substr(pos_, 2) == "O(") {
      if (mode_ != Mode::Series) fail("'O(...)' is only allowed in series");
      pos_ += 2;
      const GroupElem p = monomial_exponent();
      if (!eat(')')) fail("expected ')'");
      Value v;
      v.series = HahnSeries::big_o(p);
      return v;
    }
    if (ch == 't') {
      if (mode_ != Mode::Series) fail("'t' is only allowed in series");
      const GroupElem g = monomial_exponent();
      Value v;
      v.series = HahnSeries::t_pow(g);
      return v;
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  // `t` or `t^exp`.
  GroupElem monomial_exponent() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 't') fail("expected 't'");
    ++pos_;
    if (eat('^')) return exponent();
    return GroupElem::unit(opts_.rank, opts_.rank - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Mode mode_;
  SeriesParseOptions opts_;
};

}  // namespace

HahnSeries parse_series(std::string_view text, const SeriesParseOptions& opts) {
  return Parser(text, Mode::Series, opts).parse().series;
}

KElem parse_kelem(std::string_view text) { return Parser(text, Mode::Coeff, {}).parse().dual.a; }

DualNumber parse_dual(std::string_view text) { return Parser(text, Mode::Dual, {}).parse().dual; }

}  // namespace dvf
