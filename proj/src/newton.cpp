#include "dvf/newton.hpp"

namespace dvf {

ValuedPoly::ValuedPoly(std::vector<HahnSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("a polynomial needs degree >= 1");
  for (const auto& c : coeffs_)
    if (c.rank() != coeffs_.front().rank()) throw StructuralError("coefficients have different ranks");
  if (coeffs_.back().is_zero_at_precision()) throw DomainError("leading coefficient is not known to be nonzero");
}

ValuedPoly ValuedPoly::derivative() const {
  std::vector<HahnSeries> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i].scaled(KElem(static_cast<long>(i))));
  return ValuedPoly(std::move(out));
}

ValuedPoly ValuedPoly::substitute(const HahnSeries& c, const HahnSeries& b) const {
  // Horner: acc = acc * (c x + b) + a_i.
  const std::size_t r = rank();
  std::vector<HahnSeries> acc{coeffs_.back()};
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    std::vector<HahnSeries> next(acc.size() + 1, HahnSeries(r));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * b;
      next[j + 1] += acc[j] * c;
    }
    next[0] += coeffs_[i];
    acc = std::move(next);
  }
  return ValuedPoly(std::move(acc));
}

ValuedPoly ValuedPoly::from_roots(const std::vector<HahnSeries>& roots, const HahnSeries& lead) {
  std::vector<HahnSeries> acc{lead};
  for (const auto& root : roots) {
    std::vector<HahnSeries> next(acc.size() + 1, HahnSeries(lead.rank()));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] -= acc[j] * root;
      next[j + 1] += acc[j];
    }
    acc = std::move(next);
  }
  return ValuedPoly(std::move(acc));
}

std::string ValuedPoly::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].definitely_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

GroupElem slope(const NewtonVertex& a, const NewtonVertex& b) {
  return Rational(1, static_cast<long>(b.index - a.index)) * (b.value - a.value);
}

}  // namespace

NewtonPolygon polygon(const ValuedPoly& p) {
  std::vector<NewtonVertex> hull;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (p[i].definitely_zero()) continue;
    NewtonVertex v{i, p[i].val().value()};
    while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), v)) hull.pop_back();
    hull.push_back(std::move(v));
  }
  NewtonPolygon out{hull, {}};
  for (std::size_t i = 1; i < hull.size(); ++i)
    out.segments.push_back({slope(hull[i - 1], hull[i]), hull[i].index - hull[i - 1].index});
  return out;
}

std::size_t count_roots_in_O(const ValuedPoly& p) {
  std::optional<GroupElem> least;
  std::size_t last = 0;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (p[i].definitely_zero()) continue;
    const GroupElem v = p[i].val().value();
    if (!least || v < *least) {
      least = v;
      last = i;
    } else if (v == *least) {
      last = i;
    }
  }
  return last;
}

RolleVerdict rolle_check(const ValuedPoly& p, const HahnSeries& center, const GroupElem& radius) {
  if (p.degree() < 2) throw PreconditionError("a polynomial of degree 1 has at most one root");
  const HahnSeries scale = HahnSeries::t_pow(radius);
  const std::size_t roots = count_roots_in_O(p.substitute(scale, center));
  if (roots < 2)
    throw PreconditionError("the ball holds " + std::to_string(roots) + " root(s); at least two are needed");
  const std::size_t droots = count_roots_in_O(p.derivative().substitute(scale, center));
  return {roots, droots, droots >= 1};
}

RadicalSplit split_radical(const ValueGroupDesc& g, const HahnSeries& a, unsigned n, const GroupElem& precision) {
  if (n < 2) throw DomainError("split_radical needs n >= 2");
  if (!is_z_less(g)) throw UnsupportedError("split_radical needs a Z-less value group");
  if (a.is_zero_at_precision()) throw DomainError("split_radical needs a != 0");
  const GroupElem va = a.val().value();
  if (va.sign() <= 0) throw DomainError("split_radical needs val(a) > 0");
  const GroupElem gamma = strict_between(g, va, Rational(n - 1, n), 1);
  const HahnSeries e = HahnSeries::t_pow(gamma);
  const HahnSeries an1 = a.pow(n - 1);
  const HahnSeries b = divide(e.pow(n), an1, precision);
  const HahnSeries c = divide(a, e, precision);
  return {b, c, e, gamma};
}

}  // namespace dvf
