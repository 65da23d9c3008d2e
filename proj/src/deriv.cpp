#include "dvf/deriv.hpp"

#include <string>

namespace dvf {

GroupElem least_unit(std::size_t rank) { return GroupElem::unit(rank, rank - 1); }

DerivationSpec::DerivationSpec(std::vector<HahnSeries> character_, std::map<std::size_t, HahnSeries> table,
                               HahnSeries u_)
    : character(std::move(character_)), coeff_table(std::move(table)), u(std::move(u_)) {
  if (character.empty()) throw StructuralError("a derivation needs one character entry per coordinate");
  for (const auto& l : character)
    if (l.rank() != rank()) throw StructuralError("character entry has the wrong rank");
  for (const auto& [m, e] : coeff_table)
    if (e.rank() != rank()) throw StructuralError("table entry for th" + std::to_string(m) + " has the wrong rank");
  if (u.rank() != rank()) throw StructuralError("multiplier u has the wrong rank");
  if (u.val() != ExtGroupElem(GroupElem::zero(rank())))
    throw DomainError("multiplier u = " + u.to_string() + " is not a unit");
}

DerivationSpec DerivationSpec::partial0(const HahnSeries& u) {
  return DerivationSpec({HahnSeries::t_pow(GroupElem({-1, 0})), HahnSeries(2)}, {}, u);
}

DerivationSpec DerivationSpec::d_dt() {
  return DerivationSpec({HahnSeries::t_pow(GroupElem({-1}))}, {}, HahnSeries::constant(1, 1));
}

HahnSeries DerivationSpec::L(const GroupElem& g) const {
  if (g.rank() != rank()) throw StructuralError("exponent rank differs from the derivation's");
  HahnSeries out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    if (sgn(g[i]) != 0 && !character[i].definitely_zero()) out += character[i].scaled(KElem(g[i]));
  return out;
}

ExtGroupElem DerivationSpec::weight() const {
  ExtGroupElem w = ExtGroupElem::infinity();
  for (const auto& l : character)
    if (!l.definitely_zero()) w = min(w, l.val_lower_bound());
  for (const auto& [m, e] : coeff_table)
    if (!e.definitely_zero()) w = min(w, e.val_lower_bound());
  return w;
}

HahnSeries apply_delta(const DerivationSpec& d, const HahnSeries& x) {
  if (x.rank() != d.rank()) throw StructuralError("series rank differs from the derivation's");
  HahnSeries coeff_part(d.rank()), char_part(d.rank());
  for (const auto& [g, c] : x.terms()) {
    for (std::size_t m : c.symbols()) {
      auto it = d.coeff_table.find(m);
      if (it == d.coeff_table.end())
        throw UndeclaredGeneratorError("th" + std::to_string(m) + " has no declared derivative");
      coeff_part += it->second.shifted(c.partial(m), g);
    }
    char_part += d.L(g).shifted(c, g);
  }
  HahnSeries out = coeff_part + (d.u == HahnSeries::constant(d.rank(), 1) ? char_part : d.u * char_part);
  if (x.precision().is_finite()) out = out.truncated(x.precision() + d.weight());
  return out;
}

ResidueClass apply_partial(const DerivationSpec& d, const HahnSeries& x) {
  const ExtGroupElem v = x.val_lower_bound();
  if (!x.terms().empty() && x.terms().front().first.sign() < 0)
    throw DomainError("the truncated derivation is defined on O; val = " + to_string(v));
  if (x.terms().empty() && v.is_finite() && v.value().sign() < 0)
    throw PrecisionError("cannot decide whether " + x.to_string() + " lies in O");
  return dclass(apply_delta(d, x));
}

ResidueClass dlog(const DerivationSpec& d, const HahnSeries& x, const GroupElem& margin) {
  if (x.is_zero_at_precision()) throw PrecisionError("dlog of " + x.to_string() + ": indistinguishable from 0");
  const HahnSeries dx = apply_delta(d, x);
  if (dx.definitely_zero()) return ResidueClass(x.rank());
  // The product dx * x^-1 is needed above 0; its cap is
  // min(cap(dx) - val(x), cap(x^-1) + val_lb(dx)).
  GroupElem target = margin;
  if (ExtGroupElem lb = dx.val_lower_bound(); lb.is_finite() && lb.value().sign() < 0) target = margin - lb.value();
  return dclass(dx * invert(x, target));
}

ResidueClass dlog(const DerivationSpec& d, const HahnSeries& x) { return dlog(d, x, least_unit(x.rank())); }

namespace {

// q * c in D where q = a / b lies in O; computes q far enough to fix the product.
ResidueClass ratio_times_class(const HahnSeries& a, const HahnSeries& b, const ResidueClass& c) {
  if (c.is_zero()) return c;
  const GroupElem target = least_unit(a.rank()) - c.dval().value();
  return mul_class(divide(a, b, target), c);
}

}  // namespace

DiffsCertificate check_diffs_identity(const DerivationSpec& d, const HahnSeries& x, const HahnSeries& y) {
  const HahnSeries diff = x - y;
  if (diff.is_zero_at_precision())
    throw PreconditionError("val(x - y) is undecidable: x - y shows no term");
  if (x.is_zero_at_precision() || y.is_zero_at_precision())
    throw PreconditionError("log derivative of a zero argument");
  const ExtGroupElem vd = diff.val(), vmax = max(x.val(), y.val());
  if (vd > vmax)
    throw PreconditionError("hypothesis val(x - y) <= max(val x, val y) fails: " + to_string(vd) + " > " +
                            to_string(vmax));
  const ResidueClass lhs = dlog(d, diff);
  const ResidueClass rhs = ratio_times_class(x, diff, dlog(d, x)) - ratio_times_class(y, diff, dlog(d, y));
  return {lhs == rhs, lhs, rhs};
}

bool check_log_axiom(const DerivationSpec& d, const HahnSeries& x, const HahnSeries& y) {
  const HahnSeries s = x + y;
  if (x.is_zero_at_precision() || y.is_zero_at_precision() || s.is_zero_at_precision())
    throw PreconditionError("the log-derivation axiom needs nonzero x, y and x + y");
  return mul_class(s, dlog(d, s)) == mul_class(x, dlog(d, x)) + mul_class(y, dlog(d, y));
}

}  // namespace dvf
