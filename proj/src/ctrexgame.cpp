#include "dvf/ctrexgame.hpp"

namespace dvf {

GameModel::GameModel() : GameModel(HahnSeries(2, {{GroupElem({0, 0}), KElem(1)}, {GroupElem({0, 1}), KElem(1)}})) {}

GameModel::GameModel(HahnSeries u)
    : u_(std::move(u)),
      d0_(DerivationSpec::partial0(HahnSeries::constant(2, 1))),
      d1_(DerivationSpec::partial0(u_)) {}

namespace {

const Rational& major(const GroupElem& g) { return g[0]; }

}  // namespace

bool in_p(const GameModel& m, const HahnSeries& x) {
  if (x.rank() != m.u().rank()) throw StructuralError("game series must have rank 2");
  if (!x.terms().empty()) return sgn(major(x.terms().front().first)) > 0;
  if (x.is_exact() || sgn(major(x.precision().value())) > 0) return true;
  throw PrecisionError("cannot decide whether " + x.to_string() + " lies in p");
}

Slice slice(const GameModel& m, const HahnSeries& x) {
  if (x.rank() != m.u().rank()) throw StructuralError("game series must have rank 2");
  if (!x.terms().empty() && sgn(major(x.terms().front().first)) < 0)
    throw DomainError("slice needs val'(x) >= 0; val(x) = " + to_string(x.terms().front().first));
  const GroupElem zero = GroupElem::zero(2);
  if (x.precision() <= ExtGroupElem(zero)) throw PrecisionError("slice needs the precision above 0");
  std::vector<Term> head;
  for (const auto& [g, c] : x.terms())
    if (g <= zero) head.emplace_back(g, c);
  HahnSeries h(2, std::move(head));
  return {h, x - h};
}

GameTranscript sigma_refute(const GameModel& m, const HahnSeries& a_prime) {
  GameTranscript t;
  t.a = HahnSeries::t_pow(GroupElem({1, 0}));
  t.a_prime = a_prime;
  const HahnSeries diff = a_prime - m.u();
  if (in_p(m, diff)) {
    t.matched_u = true;
    return t;
  }
  const GroupElem v = diff.val().value();
  t.val_diff = v;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v[1].get_num_mpz_t(), v[1].get_den_mpz_t());
  t.n = std::max(1L, fl.get_si() + 1);
  t.b = HahnSeries::t_pow(GroupElem({0, t.n}));
  t.c = HahnSeries::t_pow(GroupElem({1, -t.n}));
  if (!definitely_equal(t.b * t.c, t.a)) throw SoundnessAlarm("reply violates a = b c");
  return t;
}

int sigma_check_triple(const GameModel& m, const GameTranscript& t, const HahnSeries& b_prime,
                       const HahnSeries& c_prime) {
  if (t.matched_u) throw PreconditionError("the transcript carries no refutation certificate");
  if (dclass(b_prime) != dclass(apply_delta(m.d1(), t.b))) return 1;
  if (dclass(c_prime) != dclass(apply_delta(m.d1(), t.c))) return 2;
  const HahnSeries rest = t.a_prime - (t.b * c_prime + t.c * b_prime);
  if (!rest.is_zero_at_precision()) return 3;
  if (!rest.is_exact()) throw PrecisionError("a' - (b c' + c b') vanishes only up to " + rest.to_string());
  throw SoundnessAlarm("all three identities hold for b' = " + b_prime.to_string() + ", c' = " + c_prime.to_string());
}

}  // namespace dvf
