#include "dvf/dvmodel.hpp"

#include <mutex>

namespace dvf {

const char* to_string(RingTag tag) {
  switch (tag) {
    case RingTag::InI: return "I";
    case RingTag::InQnotI: return "Q\\I";
    case RingTag::InRnotQ: return "R\\Q";
    case RingTag::InOnotR: return "O\\R";
    case RingTag::NotInO: return "K\\O";
    case RingTag::Undecidable: return "undecidable";
  }
  return "?";
}

DVModel::DVModel(ValueGroupDesc group, DerivationSpec deriv, GroupElem working_precision,
                 std::vector<GeneratorRecord> log)
    : group_(std::move(group)),
      deriv_(std::move(deriv)),
      precision_(std::move(working_precision)),
      log_(std::move(log)) {
  for (const auto& g : log_)
    if (!deriv_.coeff_table.count(g.index))
      throw StructuralError("logged generator th" + std::to_string(g.index) + " is missing from the table");
  if (deriv_.rank() != group_.rank()) throw StructuralError("derivation rank differs from the value group's");
  if (precision_.rank() != group_.rank()) throw StructuralError("working precision has the wrong rank");
  if (precision_.sign() <= 0) throw DomainError("working precision must be positive");
}

DVModel::DVModel(const DVModel& other) : group_(other.group_) {
  std::shared_lock lock(other.mutex_);
  deriv_ = other.deriv_;
  precision_ = other.precision_;
  log_ = other.log_;
}

DVModel& DVModel::operator=(const DVModel& other) {
  if (this == &other) return *this;
  std::unique_lock mine(mutex_, std::defer_lock);
  std::shared_lock theirs(other.mutex_, std::defer_lock);
  std::lock(mine, theirs);
  group_ = other.group_;
  deriv_ = other.deriv_;
  precision_ = other.precision_;
  log_ = other.log_;
  return *this;
}

DVModel DVModel::base() {
  DerivationSpec d = DerivationSpec::partial0(HahnSeries::constant(2, 1));
  d.coeff_table.emplace(1, HahnSeries::t_pow(GroupElem({0, -3})));
  return DVModel(ValueGroupDesc::z_plus_z_omega(), std::move(d), GroupElem({2, 0}));
}

DVModel DVModel::dt() { return DVModel(ValueGroupDesc::integers(1), DerivationSpec::d_dt(), GroupElem({12})); }

void DVModel::set_working_precision(GroupElem p) {
  if (p.rank() != rank()) throw StructuralError("working precision has the wrong rank");
  if (p.sign() <= 0) throw DomainError("working precision must be positive");
  std::unique_lock lock(mutex_);
  precision_ = std::move(p);
}

DerivationSpec DVModel::derivation() const {
  std::shared_lock lock(mutex_);
  return deriv_;
}

std::vector<GeneratorRecord> DVModel::generator_log() const {
  std::shared_lock lock(mutex_);
  return log_;
}

std::size_t DVModel::generator_count() const {
  std::shared_lock lock(mutex_);
  return deriv_.coeff_table.size();
}

std::size_t DVModel::max_symbol() const {
  std::shared_lock lock(mutex_);
  return deriv_.coeff_table.empty() ? 0 : deriv_.coeff_table.rbegin()->first;
}

HahnSeries DVModel::delta(const HahnSeries& x) const {
  std::shared_lock lock(mutex_);
  return apply_delta(deriv_, x);
}

ResidueClass DVModel::partial(const HahnSeries& x) const {
  std::shared_lock lock(mutex_);
  return apply_partial(deriv_, x);
}

ResidueClass DVModel::dlog(const HahnSeries& x) const {
  std::shared_lock lock(mutex_);
  return dvf::dlog(deriv_, x);
}

HahnSeries DVModel::L(const GroupElem& g) const {
  std::shared_lock lock(mutex_);
  return deriv_.L(g);
}

HahnSeries DVModel::u() const {
  std::shared_lock lock(mutex_);
  return deriv_.u;
}

HahnSeries DVModel::t_pow(const GroupElem& g) const {
  if (!group_.contains(g)) throw DomainError("exponent " + to_string(g) + " is not in the value group");
  return HahnSeries::t_pow(g);
}

std::size_t DVModel::adjoin(const GroupElem& exponent, const std::function<HahnSeries(const KElem&)>& derivative,
                            const std::string& origin) {
  if (!group_.contains(exponent)) throw DomainError("exponent " + to_string(exponent) + " is not in the value group");
  std::unique_lock lock(mutex_);
  const std::size_t index = deriv_.coeff_table.empty() ? 1 : deriv_.coeff_table.rbegin()->first + 1;
  HahnSeries e = derivative(KElem::symbol(index));
  if (e.rank() != rank()) throw StructuralError("derivative of a new generator has the wrong rank");
  for (const auto& [g, c] : e.terms())
    for (std::size_t s : c.symbols())
      if (s != index && !deriv_.coeff_table.count(s))
        throw UndeclaredGeneratorError("th" + std::to_string(s) + " has no declared derivative");
  deriv_.coeff_table.emplace(index, e);
  log_.push_back({index, exponent, std::move(e), origin});
  return index;
}

void DVModel::validate(const HahnSeries& x) const {
  if (x.rank() != rank()) throw StructuralError("series rank differs from the model's");
  std::shared_lock lock(mutex_);
  for (const auto& [g, c] : x.terms()) {
    if (!group_.contains(g)) throw DomainError("exponent " + to_string(g) + " is not in the value group");
    for (std::size_t s : c.symbols())
      if (!deriv_.coeff_table.count(s))
        throw UndeclaredGeneratorError("th" + std::to_string(s) + " is not a generator of the model");
  }
}

RingTag classify_ring(const DVModel& m, const HahnSeries& x) {
  const auto& terms = x.terms();
  if (!terms.empty() && terms.front().first.sign() < 0) return RingTag::NotInO;
  if (terms.empty() && !x.is_exact() && x.precision().value().sign() <= 0) return RingTag::Undecidable;
  const bool in_m = terms.empty() || terms.front().first.sign() > 0;
  const HahnSeries dx = m.delta(x);
  if (!dx.terms().empty()) {
    const int s = dx.terms().front().first.sign();
    if (s < 0) return RingTag::InOnotR;
    if (s == 0) return RingTag::InRnotQ;
  }
  if (!dx.is_exact() && dx.precision().value().sign() <= 0) return RingTag::Undecidable;
  return in_m ? RingTag::InI : RingTag::InQnotI;
}

ExtGroupElem val_partial(const DVModel& m, const HahnSeries& x) {
  if (!in_O(classify_ring(m, x)) && classify_ring(m, x) != RingTag::Undecidable)
    throw DomainError("val_partial needs x in O; x = " + x.to_string());
  return m.partial(x).dval();
}

HahnSeries neutralizer(DVModel& m, const HahnSeries& x) {
  const RingTag tag = classify_ring(m, x);
  switch (tag) {
    case RingTag::InRnotQ: return m.one();
    case RingTag::InOnotR: break;
    case RingTag::Undecidable: throw PrecisionError("cannot place " + x.to_string() + " in the ring filtration");
    case RingTag::NotInO: throw DomainError("no neutralizer: " + x.to_string() + " is not in O");
    default: throw DomainError("no neutralizer: " + x.to_string() + " lies in Q");
  }
  const GroupElem g = -m.partial(x).dval().value();
  const HahnSeries tg = m.t_pow(g);
  if (in_Q(classify_ring(m, tg))) return tg;
  const HahnSeries lg = m.L(g), u = m.u();
  const std::size_t idx = m.adjoin(g, [&](const KElem& th) { return -(u * lg.scaled(th)); },
                                   "neutralizer of " + x.to_string());
  return HahnSeries::monomial(KElem::symbol(idx), g);
}

HahnSeries solve_density(DVModel& m, const HahnSeries& a, const HahnSeries& b, const GroupElem& gamma) {
  m.validate(a);
  m.validate(b);
  if (!m.group().contains(gamma)) throw DomainError("gamma = " + to_string(gamma) + " is not in the value group");
  const GroupElem g = (gamma.sign() > 0 ? gamma : m.group().zero()) + m.least_unit();
  const HahnSeries rest = (b - m.delta(a)).shifted(KElem(1), -g);
  const HahnSeries lg = m.L(g), u = m.u();
  const std::size_t idx = m.adjoin(g, [&](const KElem& th) { return rest - u * lg.scaled(th); },
                                   "density at gamma = " + to_string(gamma));
  return a + HahnSeries::monomial(KElem::symbol(idx), g);
}

HahnSeries weird_witness(DVModel& m, const GroupElem& gamma) {
  if (gamma.sign() <= 0) throw DomainError("weird witnesses need gamma > 0");
  const GroupElem g = gamma + m.least_unit();
  return solve_density(m, m.zero(), m.t_pow(-g), gamma);
}

HahnSeries cofinal_q_element(const DVModel& m, const HahnSeries& a) {
  const ExtGroupElem va = a.val();
  if (va.is_infinite()) throw DomainError("cofinal element of 0");
  if (va.value().sign() < 0) return m.one();
  const GroupElem v = va.value().sign() > 0 ? va.value() : GroupElem::unit(m.rank(), 0);
  for (long k = 1; k <= 64; ++k) {
    const HahnSeries b = HahnSeries::t_pow(Rational(k) * v);
    if (classify_ring(m, b) == RingTag::InI) return b;
  }
  throw UnsupportedError("no power of t^" + to_string(v) + " up to 64 lies in Q");
}

bool dv_ball_member(const DVModel& m, const HahnSeries& x, const HahnSeries& a, const HahnSeries& b,
                    const GroupElem& gamma) {
  auto above = [&](const HahnSeries& d) {
    if (!d.terms().empty()) return d.terms().front().first > gamma;
    if (d.is_exact() || d.precision().value() > gamma) return true;
    throw PrecisionError("cannot compare val(" + d.to_string() + ") with " + to_string(gamma));
  };
  return above(x - a) && above(m.delta(x) - b);
}

TripleRelation reduce_triple(DVModel& m, const HahnSeries& a, const HahnSeries& b, const HahnSeries& c) {
  const std::vector<HahnSeries> e{a, b, c};
  for (const auto& s : e) m.validate(s);
  for (std::size_t i = 0; i < 3; ++i)
    if (e[i].definitely_zero()) {
      const std::size_t j = i == 0 ? 1 : 0, k = i == 2 ? 1 : 2;
      return {i, j, k, m.zero(), m.zero()};
    }
  std::size_t ic = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (e[i].val() < e[ic].val()) ic = i;
  std::size_t ia = ic == 0 ? 1 : 0, ib = ic == 2 ? 1 : 2;
  const GroupElem& target = m.working_precision();
  HahnSeries A = divide(e[ia], e[ic], target), B = divide(e[ib], e[ic], target);
  ExtGroupElem vA = val_partial(m, A), vB = val_partial(m, B);
  if (vB < vA) {
    std::swap(ia, ib);
    std::swap(A, B);
    std::swap(vA, vB);
  }
  auto relation = [&](const HahnSeries& qa, const HahnSeries& qc) -> TripleRelation {
    if (ia < ic) return {ib, ia, ic, qa, qc};
    return {ib, ic, ia, qc, qa};
  };
  // b/c in Q already.
  if (vB.is_infinite() || vB.value().sign() > 0) return relation(m.zero(), B);
  // x0 with dB = x0 dA in D, to precision above -val dA.
  const GroupElem need = -vA.value();
  const HahnSeries q = divide(m.partial(B).rep(), m.partial(A).rep(), need + m.least_unit());
  if (q.precision() <= ExtGroupElem(need))
    throw PrecisionError("quotient of derivatives not determined above " + to_string(need));
  const HahnSeries x0(m.rank(), q.terms());
  const HahnSeries x = in_Q(classify_ring(m, x0)) ? x0 : solve_density(m, x0, m.zero(), need);
  return relation(x, B - x * A);
}

VTopologyRefutation refute_vtopology(DVModel& m, const HahnSeries& a) {
  m.validate(a);
  if (a.is_zero_at_precision()) throw DomainError("the neighborhood aR needs a != 0");
  HahnSeries shrink = m.one();
  if (a.val().value().sign() < 0) shrink = cofinal_q_element(m, m.t_pow(-a.val().value()));
  HahnSeries shrunk = a * shrink;
  if (classify_ring(m, shrunk) == RingTag::InOnotR) {
    const HahnSeries n = neutralizer(m, shrunk);
    shrink = shrink * n;
    shrunk = shrunk * n;
  }
  const GroupElem lu = m.least_unit();
  const HahnSeries x = solve_density(m, m.zero(), m.t_pow(-lu), shrunk.val().value());
  const HahnSeries y = divide(shrunk, x, m.working_precision());
  return {shrink, shrunk, x, y};
}

}  // namespace dvf
