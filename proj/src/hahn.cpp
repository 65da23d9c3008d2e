#include "dvf/hahn.hpp"

#include <algorithm>
#include <ostream>
#include <map>

namespace dvf {

namespace {

void require_rank(const HahnSeries& a, const HahnSeries& b) {
  if (a.rank() != b.rank())
    throw StructuralError("series over groups of rank " + std::to_string(a.rank()) + " and " +
                          std::to_string(b.rank()) + " cannot be combined");
}

bool below(const GroupElem& g, const ExtGroupElem& cap) { return ExtGroupElem(g) < cap; }

std::string power(const GroupElem& g) {
  if (g.rank() == 1 && g[0] == 1) return "t";
  return "t^" + dvf::to_string(g);
}

}  // namespace

HahnSeries::HahnSeries(std::size_t rank, std::vector<Term> terms, ExtGroupElem precision)
    : rank_(rank), terms_(std::move(terms)), precision_(std::move(precision)) {
  if (precision_.is_finite() && precision_.value().rank() != rank_)
    throw StructuralError("precision exponent has the wrong rank");
  canonicalize();
}

void HahnSeries::canonicalize() {
  for (const auto& [g, c] : terms_)
    if (g.rank() != rank_) throw StructuralError("term exponent " + dvf::to_string(g) + " has the wrong rank");
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [&](const Term& t) { return t.second.is_zero() || !below(t.first, precision_); });
  terms_ = std::move(out);
}

HahnSeries HahnSeries::constant(std::size_t rank, const KElem& c) {
  return HahnSeries(rank, {{GroupElem::zero(rank), c}});
}

HahnSeries HahnSeries::monomial(const KElem& c, const GroupElem& g) { return HahnSeries(g.rank(), {{g, c}}); }

HahnSeries HahnSeries::big_o(const GroupElem& p) { return HahnSeries(p.rank(), {}, p); }

ExtGroupElem HahnSeries::val() const {
  if (!terms_.empty()) return terms_.front().first;
  if (is_exact()) return ExtGroupElem::infinity();
  throw PrecisionError("series " + to_string() + " has no visible term; its valuation is undecidable");
}

ExtGroupElem HahnSeries::val_lower_bound() const {
  return terms_.empty() ? precision_ : ExtGroupElem(terms_.front().first);
}

KElem HahnSeries::coeff(const GroupElem& g) const {
  if (!below(g, precision_))
    throw PrecisionError("coefficient of t^" + dvf::to_string(g) + " lies beyond O(t^" +
                         dvf::to_string(precision_) + ")");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const GroupElem& e) { return t.first < e; });
  if (it != terms_.end() && it->first == g) return it->second;
  return KElem();
}

KElem HahnSeries::res() const {
  const GroupElem zero = GroupElem::zero(rank_);
  if (!terms_.empty() && terms_.front().first < zero)
    throw DomainError("res needs val >= 0, got val " + dvf::to_string(terms_.front().first));
  if (!below(zero, precision_))
    throw PrecisionError("precision O(t^" + dvf::to_string(precision_) + ") cannot decide the residue");
  return coeff(zero);
}

HahnSeries HahnSeries::truncated(const ExtGroupElem& cap) const {
  if (cap >= precision_) return *this;
  HahnSeries r = *this;
  r.precision_ = cap;
  r.canonicalize();
  return r;
}

HahnSeries HahnSeries::head(const GroupElem& bound) const {
  if (!below(bound, precision_))
    throw PrecisionError("precision O(t^" + dvf::to_string(precision_) + ") does not reach t^" +
                         dvf::to_string(bound));
  std::vector<Term> kept;
  for (const auto& t : terms_)
    if (t.first <= bound) kept.push_back(t);
  return HahnSeries(rank_, std::move(kept));
}

HahnSeries HahnSeries::operator-() const {
  HahnSeries r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

HahnSeries& HahnSeries::operator+=(const HahnSeries& o) {
  require_rank(*this, o);
  precision_ = min(precision_, o.precision_);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

HahnSeries& HahnSeries::operator-=(const HahnSeries& o) { return *this += -o; }

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  require_rank(a, b);
  ExtGroupElem cap = min(a.precision_ + b.val_lower_bound(), b.precision_ + a.val_lower_bound());
  std::map<GroupElem, KElem> acc;
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) {
      GroupElem g = ga + gb;
      if (!below(g, cap)) continue;
      auto [it, inserted] = acc.try_emplace(std::move(g), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [g, c] : acc)
    if (!c.is_zero()) terms.emplace_back(g, std::move(c));
  return HahnSeries(a.rank_, std::move(terms), cap);
}

HahnSeries HahnSeries::scaled(const KElem& c) const {
  if (c.is_zero()) return HahnSeries(rank_);
  HahnSeries r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

HahnSeries HahnSeries::shifted(const KElem& c, const GroupElem& g) const {
  if (c.is_zero()) return HahnSeries(rank_);
  HahnSeries r = *this;
  for (auto& t : r.terms_) {
    t.first += g;
    t.second *= c;
  }
  if (r.precision_.is_finite()) r.precision_ = r.precision_.value() + g;
  return r;
}

HahnSeries HahnSeries::map_coeffs(const std::function<KElem(const KElem&)>& f) const {
  HahnSeries r = *this;
  for (auto& t : r.terms_) t.second = f(t.second);
  r.canonicalize();
  return r;
}

HahnSeries HahnSeries::pow(unsigned n) const {
  HahnSeries r = constant(rank_, 1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

std::size_t HahnSeries::max_symbol() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.second.max_symbol());
  return m;
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
  return a.rank_ == b.rank_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

std::string HahnSeries::to_string() const {
  std::string out;
  const GroupElem zero = GroupElem::zero(rank_);
  for (const auto& [g, c] : terms_) {
    const bool negative = !c.is_compound() && sgn(c.num().leading().second) < 0;
    const KElem mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (g == zero)
      out += coeff_factor_string(mag);
    else if (mag == KElem(1))
      out += power(g);
    else
      out += coeff_factor_string(mag) + "*" + power(g);
  }
  if (precision_.is_finite()) {
    if (!out.empty()) out += " + ";
    out += "O(t^" + dvf::to_string(precision_.value()) + ")";
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const HahnSeries& s) { return os << s.to_string(); }

bool equal_at_precision(const HahnSeries& a, const HahnSeries& b) { return (a - b).is_zero_at_precision(); }

bool definitely_equal(const HahnSeries& a, const HahnSeries& b) {
  return a.is_exact() && b.is_exact() && a == b;
}

HahnSeries invert(const HahnSeries& x, const GroupElem& target, unsigned max_terms) {
  if (x.is_zero_at_precision())
    throw PrecisionError("cannot invert " + x.to_string() + ": indistinguishable from 0");
  const auto& [g, c] = x.terms().front();
  const KElem ci = c.inverse();
  // x = c t^g (1 + h) with val(h) > 0.
  const HahnSeries h = x.shifted(ci, -g) - HahnSeries::constant(x.rank(), 1);
  const GroupElem unit_target = target + g;
  HahnSeries sum = HahnSeries::constant(x.rank(), 1).truncated(unit_target);
  HahnSeries power = sum;
  const HahnSeries minus_h = -h;
  bool converged = false;
  for (unsigned k = 0; k < max_terms; ++k) {
    power = (power * minus_h).truncated(unit_target);
    sum += power;
    // Later powers start strictly above this one's cap.
    if (power.is_zero_at_precision()) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // The dropped tail (-h)^(K+1)/(1+h) starts no lower than the next power.
    power = (power * minus_h).truncated(unit_target);
    sum = sum.truncated(power.val_lower_bound());
  }
  return sum.shifted(ci, -g).truncated(target);
}

HahnSeries divide(const HahnSeries& a, const HahnSeries& b, const GroupElem& target) {
  require_rank(a, b);
  if (b.is_monomial()) {
    const auto& [g, c] = b.terms().front();
    return a.shifted(c.inverse(), -g);
  }
  GroupElem inv_target = target;
  if (ExtGroupElem lb = a.val_lower_bound(); lb.is_finite()) inv_target = target - lb.value();
  return (a * invert(b, inv_target)).truncated(target);
}

ResidueClass::ResidueClass(HahnSeries rep) : rep_(std::move(rep)) {
  if (!rep_.is_exact()) throw StructuralError("a class representative must be exact");
  const GroupElem zero = GroupElem::zero(rep_.rank());
  for (const auto& t : rep_.terms())
    if (t.first > zero) throw StructuralError("a class representative has exponents <= 0 only");
}

ExtGroupElem ResidueClass::dval() const { return rep_.val(); }

KElem ResidueClass::res2() const { return rep_.coeff(GroupElem::zero(rep_.rank())); }

ResidueClass operator+(const ResidueClass& a, const ResidueClass& b) { return ResidueClass(a.rep_ + b.rep_); }
ResidueClass operator-(const ResidueClass& a, const ResidueClass& b) { return ResidueClass(a.rep_ - b.rep_); }

ResidueClass dclass(const HahnSeries& x) { return ResidueClass(x.head(GroupElem::zero(x.rank()))); }

ResidueClass mul_class(const HahnSeries& a, const ResidueClass& d) { return dclass(a * d.rep()); }

ResidueClass divide_class(const HahnSeries& a, const ResidueClass& d) {
  const ExtGroupElem va = a.val();
  if (va.is_infinite()) throw DomainError("division of a class by 0");
  if (va.value().sign() < 0) throw DomainError("divide_class needs a divisor in O");
  if (d.is_zero()) return d;
  const GroupElem unit = GroupElem::unit(a.rank(), a.rank() - 1);
  // The quotient only matters modulo m: the target just clears -val_D(d).
  const GroupElem target = unit - d.dval().value();
  return dclass(divide(d.rep(), a, target));
}

Rational separating_rational(const HahnSeries& b, const std::vector<ConvexSubgroup>& coarsenings) {
  Rational q(1);
  for (int n = 1; n <= 20; ++n) {
    q /= n;
    const HahnSeries diff = b - HahnSeries::constant(b.rank(), q);
    if (diff.is_zero_at_precision()) continue;
    const GroupElem v = diff.val().value();
    bool ok = true;
    for (const auto& delta : coarsenings)
      if (coarsen(v, delta).sign() > 0) ok = false;
    if (ok) return q;
  }
  throw PrecisionError("no separating rational found for " + b.to_string());
}

}  // namespace dvf
