#include "dvf/coeffield.hpp"

#include <algorithm>
#include <utility>

namespace dvf {

namespace {

void trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i]) return std::nullopt;
  }
  Mono r = a;
  for (std::size_t i = 0; i < b.size() && i < a.size(); ++i) {
    if (b[i] > a[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading().second;
  return p.scaled(Rational(1) / lc);
}

// The single symbol index f uses, or -1 for several / none.
long sole_var(const Poly& f) {
  long v = -1;
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (v >= 0 && static_cast<std::size_t>(v) != i) return -2;
      v = static_cast<long>(i);
    }
  return v;
}

using UPoly = std::vector<Rational>;  // dense, lowest degree first

void trim_upoly(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly to_upoly(const Poly& f, std::size_t var) {
  UPoly out(f.degree_in(var) + 1);
  for (const auto& [m, c] : f.terms()) out[var < m.size() ? m[var] : 0] += c;
  trim_upoly(out);
  return out;
}

Poly from_upoly(const UPoly& u, std::size_t var) {
  Poly out;
  for (std::size_t d = 0; d < u.size(); ++d) {
    Mono x(var + 1, 0);
    x[var] = static_cast<std::uint32_t>(d);
    out += Poly::monomial(std::move(x), u[d]);
  }
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      Rational q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
      trim_upoly(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
    if (!a.empty()) {
      Rational lc = a.back();
      for (auto& c : a) c /= lc;
    }
  }
  return a;
}

// mpq_class(n, d) keeps the fraction as given; equality needs lowest terms.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Mono{}, canonical(c));
}

Poly Poly::symbol(std::size_t m) {
  if (m == 0) throw DomainError("symbols are numbered from th1");
  Mono x(m, 0);
  x[m - 1] = 1;
  return monomial(std::move(x), 1);
}

Poly Poly::monomial(Mono exps, const Rational& c) {
  Poly p;
  trim(exps);
  if (sgn(c) != 0) p.terms_.emplace(std::move(exps), canonical(c));
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t Poly::nvars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_)
    if (var < m.size()) d = std::max(d, m[var]);
  return d;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, canonical(c));
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= canonical(c);
  return r;
}

Poly Poly::partial(std::size_t var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (var >= m.size() || m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    trim(d);
    r.add_term(d, c * m[var]);
  }
  return r;
}

std::optional<Poly> Poly::exact_div(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (g.is_constant()) return f.scaled(Rational(1) / g.constant_value());
  Poly rem = f, quot;
  const auto& [gm, gc] = g.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto qm = mono_div(rm, gm);
    if (!qm) return std::nullopt;
    Poly t = Poly::monomial(*qm, rc / gc);
    quot += t;
    rem -= t * g;
  }
  return quot;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "th" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

Poly common_factor(const Poly& f, const Poly& g) {
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  if (f.is_constant() || g.is_constant()) return Poly(1);
  Mono common = f.leading().first;
  for (const Poly* p : {&f, &g})
    for (const auto& [m, c] : p->terms()) {
      if (common.size() > m.size()) common.resize(m.size());
      for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], m[i]);
    }
  const Poly mono = Poly::monomial(common, 1);
  const Poly a = *Poly::exact_div(f, mono), b = *Poly::exact_div(g, mono);
  Poly rest(1);
  const long va = sole_var(a), vb = sole_var(b);
  if (va >= 0 && va == vb) {
    const auto v = static_cast<std::size_t>(va);
    rest = from_upoly(upoly_gcd(to_upoly(a, v), to_upoly(b, v)), v);
  } else if (!a.is_constant() && !b.is_constant()) {
    if (Poly::exact_div(a, b))
      rest = b;
    else if (Poly::exact_div(b, a))
      rest = a;
  }
  return monic(mono * rest);
}

KElem::KElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator in coefficient");
  normalize();
}

void KElem::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    const Rational d = den_.constant_value();
    if (d != 1) num_ = num_.scaled(Rational(1) / d);
    den_ = Poly(1);
    return;
  }
  Poly g = common_factor(num_, den_);
  if (!g.is_constant()) {
    num_ = *Poly::exact_div(num_, g);
    den_ = *Poly::exact_div(den_, g);
  }
  const Rational lc = den_.leading().second;
  if (lc != 1) {
    num_ = num_.scaled(Rational(1) / lc);
    den_ = den_.scaled(Rational(1) / lc);
  }
  if (den_.is_constant()) den_ = Poly(1);
}

Rational KElem::to_rational() const {
  if (!is_rational()) throw DomainError("coefficient " + to_string() + " is not rational");
  return num_.is_zero() ? Rational(0) : num_.constant_value() / den_.constant_value();
}

bool KElem::is_compound() const { return !den_.is_constant() || num_.terms().size() > 1; }

std::size_t KElem::max_symbol() const { return std::max(num_.nvars(), den_.nvars()); }

std::set<std::size_t> KElem::symbols() const {
  std::set<std::size_t> out;
  for (const Poly* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms())
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) out.insert(i + 1);
  return out;
}

bool operator==(const KElem& x, const KElem& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

KElem KElem::operator-() const {
  KElem r = *this;
  r.num_ = -r.num_;
  return r;
}

KElem& KElem::operator+=(const KElem& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

KElem& KElem::operator-=(const KElem& o) { return *this += -o; }

KElem& KElem::operator*=(const KElem& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  if (o.den_.is_constant() && den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

KElem KElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero in the residue field");
  return KElem(den_, num_);
}

KElem& KElem::operator/=(const KElem& o) { return *this *= o.inverse(); }

KElem KElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  KElem r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

KElem KElem::partial(std::size_t m) const {
  if (m == 0) throw DomainError("symbols are numbered from th1");
  const std::size_t v = m - 1;
  if (den_.is_constant()) return KElem(num_.partial(v));
  return KElem(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
}

std::string KElem::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || den_.leading().second != 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string coeff_factor_string(const KElem& c) {
  return c.is_compound() ? "(" + c.to_string() + ")" : c.to_string();
}

std::string DualNumber::to_string() const {
  std::string out = coeff_factor_string(a);
  const bool negative_atom = !b.is_compound() && !b.is_zero() && sgn(b.num().leading().second) < 0;
  if (negative_atom)
    out += " - " + (-b).to_string();
  else
    out += " + " + coeff_factor_string(b);
  return out + "*eps";
}

DualNumber dual_invert(const DualNumber& x) {
  if (x.a.is_zero()) throw DomainError("dual number with zero real part is not a unit");
  KElem ia = x.a.inverse();
  return {ia, -(ia * ia * x.b)};
}

bool repeated_eigenvalue_check(const KElem& m11, const KElem& m12, const KElem& m21, const KElem& m22) {
  KElem tr = m11 + m22;
  return tr * tr == KElem(4) * (m11 * m22 - m12 * m21);
}

}  // namespace dvf
