#include "dvf/inflator.hpp"

#include <set>
#include <stdexcept>

namespace dvf {

DualNumber wres(const DVModel& m, const HahnSeries& x) {
  const RingTag tag = classify_ring(m, x);
  if (tag == RingTag::Undecidable) throw PrecisionError("cannot decide whether " + x.to_string() + " lies in R");
  if (!in_R(tag)) throw DomainError("wres needs x in R; " + x.to_string() + " lies in " + to_string(tag));
  return {x.res(), m.partial(x).res2()};
}

const char* to_string(Probe p) {
  switch (p) {
    case Probe::Identity: return "identity";
    case Probe::Inverse: return "inverse";
    case Probe::MinusOne: return "minus-one";
    case Probe::PlusOne: return "plus-one";
  }
  return "?";
}

Rational probe_shift(Probe p) {
  switch (p) {
    case Probe::MinusOne: return 1;
    case Probe::PlusOne: return -1;
    default: return 0;
  }
}

const char* to_string(TameClass::Kind k) {
  switch (k) {
    case TameClass::Kind::InR: return "in-R";
    case TameClass::Kind::TameViaProbe: return "tame";
    case TameClass::Kind::Wild: return "wild";
  }
  return "?";
}

namespace {

enum class Membership { In, Out, Unknown };

// Decides 1/z in R from leading terms only: val(1/z) = -val(z) and
// d(1/z) = -dz / z^2 has valuation val(dz) - 2 val(z).
Membership inverse_in_R(const DVModel& m, const HahnSeries& z, DualNumber& value) {
  if (z.is_zero_at_precision()) return Membership::Unknown;
  const auto& [gz, cz] = z.terms().front();
  if (gz.sign() > 0) return Membership::Out;
  const HahnSeries dz = m.delta(z);
  const GroupElem twice = Rational(2) * gz;
  if (dz.terms().empty()) {
    if (!dz.is_exact() && dz.precision().value() <= twice) return Membership::Unknown;
    value = DualNumber(gz.sign() == 0 ? cz.inverse() : KElem());
    return Membership::In;
  }
  const auto& [gd, cd] = dz.terms().front();
  const int s = compare(gd, twice) < 0 ? -1 : (gd == twice ? 0 : 1);
  if (s < 0) return Membership::Out;
  value = DualNumber(gz.sign() == 0 ? cz.inverse() : KElem(), s == 0 ? -(cd / (cz * cz)) : KElem());
  return Membership::In;
}

}  // namespace

TameClass classify_tame(const DVModel& m, const HahnSeries& x) {
  if (x.is_zero_at_precision()) throw DomainError("classify_tame needs x != 0");
  const std::size_t r = m.rank();
  const RingTag tag = classify_ring(m, x);
  if (in_R(tag)) return {TameClass::Kind::InR, Probe::Identity, wres(m, x), x};
  bool undecided = tag == RingTag::Undecidable;
  for (Probe p : {Probe::Inverse, Probe::MinusOne, Probe::PlusOne}) {
    const HahnSeries z = x - HahnSeries::constant(r, KElem(probe_shift(p)));
    DualNumber value;
    switch (inverse_in_R(m, z, value)) {
      case Membership::In: return {TameClass::Kind::TameViaProbe, p, value, invert(z, m.working_precision())};
      case Membership::Unknown: undecided = true; break;
      case Membership::Out: break;
    }
  }
  if (undecided) throw PrecisionError("membership probes for " + x.to_string() + " are undecidable");
  return {TameClass::Kind::Wild, Probe::Identity, DualNumber(), HahnSeries(r)};
}

Line::Line(std::vector<HahnSeries> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("a line needs at least one coordinate");
  for (const auto& c : coords_)
    if (c.rank() != coords_.front().rank()) throw StructuralError("line coordinates have different ranks");
  bool nonzero = false;
  for (const auto& c : coords_) {
    if (!c.terms().empty()) nonzero = true;
    if (c.terms().empty() && !c.is_exact())
      throw PrecisionError("line coordinate " + c.to_string() + " is indistinguishable from 0");
  }
  if (!nonzero) throw DomainError("a line needs a nonzero coordinate");
}

std::size_t Line::pivot() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].definitely_zero()) return i;
  return coords_.size();
}

Line Line::canonical(const GroupElem& precision) const {
  const std::size_t p = pivot();
  std::vector<HahnSeries> out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i == p)
      out.push_back(HahnSeries::constant(coords_[i].rank(), 1));
    else if (coords_[i].definitely_zero())
      out.push_back(coords_[i]);
    else
      out.push_back(divide(coords_[i], coords_[p], precision));
  }
  return Line(std::move(out));
}

std::string Line::to_string() const {
  std::string s = "K*(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + ")";
}

Line kronecker(const Line& arg, const Line& base) {
  std::vector<HahnSeries> out;
  for (const auto& a : arg.coords())
    for (const auto& b : base.coords()) out.push_back(a * b);
  return Line(std::move(out));
}

std::vector<KElem> EpsSubspace::flatten(const std::vector<DualNumber>& v) const {
  if (v.size() != ambient_) throw StructuralError("vector length differs from the ambient dimension");
  std::vector<KElem> out;
  out.reserve(2 * ambient_);
  for (const auto& d : v) {
    out.push_back(d.a);
    out.push_back(d.b);
  }
  return out;
}

std::vector<KElem> EpsSubspace::reduce(std::vector<KElem> v) const {
  for (const auto& row : rows_) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    if (v[p].is_zero()) continue;
    const KElem f = v[p];
    for (std::size_t i = p; i < v.size(); ++i)
      if (!row[i].is_zero()) v[i] -= f * row[i];
  }
  return v;
}

bool EpsSubspace::add(const std::vector<DualNumber>& vec) {
  std::vector<KElem> v = reduce(flatten(vec));
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  const KElem inv = v[p].inverse();
  for (auto& e : v) e *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const KElem f = row[p];
    for (std::size_t i = p; i < row.size(); ++i)
      if (!v[i].is_zero()) row[i] -= f * v[i];
  }
  auto pivot_of = [](const std::vector<KElem>& r) {
    std::size_t q = 0;
    while (r[q].is_zero()) ++q;
    return q;
  };
  auto it = rows_.begin();
  while (it != rows_.end() && pivot_of(*it) < p) ++it;
  rows_.insert(it, std::move(v));
  return true;
}

bool EpsSubspace::contains(const std::vector<DualNumber>& vec) const {
  for (const auto& e : reduce(flatten(vec)))
    if (!e.is_zero()) return false;
  return true;
}

std::vector<std::vector<DualNumber>> EpsSubspace::basis() const {
  std::vector<std::vector<DualNumber>> out;
  for (const auto& row : rows_) {
    std::vector<DualNumber> v;
    for (std::size_t i = 0; i < ambient_; ++i) v.emplace_back(row[2 * i], row[2 * i + 1]);
    out.push_back(std::move(v));
  }
  return out;
}

bool operator==(const EpsSubspace& a, const EpsSubspace& b) { return a.ambient_ == b.ambient_ && a.rows_ == b.rows_; }

namespace {

std::string dual_text(const DualNumber& d) {
  if (d.b.is_zero()) return d.a.to_string();
  const std::string eps = d.b == KElem(1) ? "eps" : coeff_factor_string(d.b) + "*eps";
  if (d.a.is_zero()) return eps;
  return d.to_string();
}

}  // namespace

std::string EpsSubspace::to_string() const {
  std::string s = "span{";
  bool first = true;
  for (const auto& v : basis()) {
    s += first ? "(" : ", (";
    first = false;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + dual_text(v[i]);
    s += ")";
  }
  return s + "}";
}

SearchWindow default_window(const DVModel& m) {
  if (m.rank() == 1) return {GroupElem({0}), GroupElem({8})};
  std::vector<Rational> lo(m.rank(), 0), hi(m.rank(), 2);
  lo.back() = -4;
  hi.back() = 6;
  return {GroupElem(lo), GroupElem(hi)};
}

namespace {

std::vector<DualNumber> unit_vector(std::size_t n, std::size_t i, const DualNumber& d) {
  std::vector<DualNumber> v(n);
  v[i] = d;
  return v;
}

std::vector<DualNumber> scaled(const std::vector<DualNumber>& v, const DualNumber& s) {
  std::vector<DualNumber> out;
  for (const auto& d : v) out.push_back(s * d);
  return out;
}

Specialization module_on(std::size_t n, const std::vector<DualNumber>& w, const std::string& method) {
  Specialization s{EpsSubspace(n), method, {}};
  s.space.add(w);
  s.space.add(scaled(w, DualNumber::eps()));
  return s;
}

mpz_class floor_rational(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_rational(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

void lattice_points(const SearchWindow& w, std::size_t i, std::vector<Rational>& cur, std::vector<GroupElem>& out) {
  if (i == cur.size()) {
    GroupElem g(cur);
    if (g.sign() >= 0) out.push_back(std::move(g));
    return;
  }
  for (mpz_class v = ceil_rational(w.lo[i]); v <= floor_rational(w.hi[i]); ++v) {
    cur[i] = Rational(v);
    lattice_points(w, i + 1, cur, out);
  }
}

}  // namespace

Specialization enumerate_line(const DVModel& m, const Line& line, const SearchWindow& window) {
  const std::size_t n = line.size(), r = m.rank();
  if (window.lo.rank() != r || window.hi.rank() != r) throw StructuralError("window rank differs from the model's");
  const Line L = line.canonical(m.working_precision());
  std::vector<GroupElem> exps;
  std::vector<Rational> cur(r);
  lattice_points(window, 0, cur, exps);
  std::set<std::size_t> syms;
  for (const auto& c : L.coords())
    for (const auto& [g, k] : c.terms())
      for (std::size_t s : k.symbols()) syms.insert(s);
  std::vector<HahnSeries> monos;
  for (const auto& g : exps) {
    monos.push_back(HahnSeries::t_pow(g));
    for (std::size_t s : syms) monos.push_back(HahnSeries::monomial(KElem::symbol(s), g));
  }
  if (monos.empty()) throw DomainError("the search window contains no exponent g >= 0");

  Specialization out{EpsSubspace(n), "enumeration", {}};
  std::size_t tried = 0;
  auto try_lambda = [&](const HahnSeries& lambda) {
    ++tried;
    std::vector<DualNumber> image;
    for (const auto& c : L.coords()) {
      const HahnSeries p = lambda * c;
      const RingTag tag = classify_ring(m, p);
      if (!in_R(tag)) return;
      image.push_back(DualNumber(p.res(), m.partial(p).res2()));
    }
    if (out.space.add(image)) out.witnesses.push_back({lambda, std::move(image)});
  };
  for (const auto& l : monos) {
    if (out.space.dimension() == 2 || tried >= window.max_candidates) break;
    try_lambda(l);
  }
  if (window.binomials)
    for (std::size_t i = 0; i < monos.size() && out.space.dimension() < 2 && tried < window.max_candidates; ++i)
      for (std::size_t j = i + 1; j < monos.size() && out.space.dimension() < 2 && tried < window.max_candidates; ++j)
        try_lambda(monos[i] + monos[j]);
  out.space.completeness = out.space.dimension() == 2 ? Completeness::Complete : Completeness::LowerBound;
  return out;
}

Specialization specialize_line(const DVModel& m, const Line& line, const SearchWindow& window) {
  const std::size_t n = line.size();
  const Line L = line.canonical(m.working_precision());
  const std::size_t p = L.pivot();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (!L[i].definitely_zero()) support.push_back(i);
  if (support.size() == 1) {
    Specialization s = module_on(n, unit_vector(n, p, DualNumber(1)), "coordinate");
    s.witnesses.push_back({m.one(), unit_vector(n, p, DualNumber(1))});
    return s;
  }

  std::vector<DualNumber> w(n);
  bool all_in_R = true;
  for (std::size_t i : support) {
    const RingTag tag = classify_ring(m, L[i]);
    if (tag == RingTag::Undecidable) throw PrecisionError("cannot decide whether " + L[i].to_string() + " lies in R");
    if (!in_R(tag)) {
      all_in_R = false;
      break;
    }
    w[i] = wres(m, L[i]);
  }
  if (all_in_R) {
    Specialization s = module_on(n, w, "in-R");
    s.witnesses.push_back({m.one(), w});
    return s;
  }
  if (support.size() > 2) return enumerate_line(m, line, window);

  const std::size_t q = support[1];
  const TameClass tc = classify_tame(m, L[q]);
  if (tc.kind == TameClass::Kind::Wild) {
    Specialization s{EpsSubspace(n), "wild", {}};
    s.space.add(unit_vector(n, p, DualNumber::eps()));
    s.space.add(unit_vector(n, q, DualNumber::eps()));
    return s;
  }
  // lambda = y * mu with y = 1/(alpha - c): (lambda, lambda alpha) = mu (y, 1 + c y).
  std::vector<DualNumber> v(n);
  v[p] = tc.value;
  v[q] = DualNumber(1) + DualNumber(KElem(probe_shift(tc.probe))) * tc.value;
  Specialization s = module_on(n, v, std::string("probe:") + to_string(tc.probe));
  s.witnesses.push_back({tc.witness, v});
  return s;
}

EpsSubspace degeneracy_subspace(DVModel& m, const SearchWindow& window) {
  const HahnSeries a = weird_witness(m, m.least_unit());
  if (classify_tame(m, a).kind != TameClass::Kind::Wild)
    throw std::logic_error("weird witness " + a.to_string() + " is not wild");
  const Specialization s = enumerate_line(m, Line({m.one(), a}), window);
  EpsSubspace expected(2);
  expected.add(unit_vector(2, 0, DualNumber::eps()));
  expected.add(unit_vector(2, 1, DualNumber::eps()));
  for (const auto& v : s.space.basis())
    if (!expected.contains(v)) throw std::logic_error("wild line specializes outside k*eps + k*eps");
  EpsSubspace out(1);
  out.add({DualNumber::eps()});
  out.completeness = s.space.completeness;
  return out;
}

Specialization mutate_line(const DVModel& m, const Line& base, const Line& arg, const SearchWindow& window) {
  for (const auto& c : base.coords())
    if (c.definitely_zero()) throw DomainError("mutation base " + base.to_string() + " has a zero coordinate");
  return specialize_line(m, kronecker(arg, base), window);
}

DiscriminantCheck check_discriminant(const DVModel& m, const HahnSeries& alpha, const HahnSeries& b,
                                     const HahnSeries& c) {
  DiscriminantCheck out{};
  out.quadratic_holds = (alpha * alpha + b * alpha + c).is_zero_at_precision();
  out.alpha_wild = classify_tame(m, alpha).kind == TameClass::Kind::Wild;
  out.coefficients_in_R = in_R(classify_ring(m, b)) && in_R(classify_ring(m, c));
  const HahnSeries disc = b * b - c.scaled(KElem(4));
  const RingTag tag = classify_ring(m, disc);
  out.discriminant_in_p = in_R(tag) && (disc.terms().empty() || disc.terms().front().first.sign() > 0);
  return out;
}

}  // namespace dvf
