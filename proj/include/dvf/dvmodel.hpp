#pragma once

#include <functional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dvf/deriv.hpp"

namespace dvf {

/// One adjoined transcendental: th_index with its place t^exponent in the
/// construction that created it and its derivative delta_u(th_index).
struct GeneratorRecord {
  std::size_t index;
  GroupElem exponent;
  HahnSeries derivative;
  std::string origin;
};

enum class RingTag { InI, InQnotI, InRnotQ, InOnotR, NotInO, Undecidable };

const char* to_string(RingTag tag);
inline bool in_O(RingTag t) { return t == RingTag::InI || t == RingTag::InQnotI || t == RingTag::InRnotQ || t == RingTag::InOnotR; }
inline bool in_R(RingTag t) { return t == RingTag::InI || t == RingTag::InQnotI || t == RingTag::InRnotQ; }
inline bool in_Q(RingTag t) { return t == RingTag::InI || t == RingTag::InQnotI; }

/// A finite stage of a dense diffeovalued field: value group, derivation and
/// the append-only log of adjoined generators. Readers share a lock; the
/// operations that adjoin take it exclusively for the append only.
class DVModel {
 public:
  /// `log` lists generators adjoined in earlier sessions; each must already
  /// be in the derivation's table.
  DVModel(ValueGroupDesc group, DerivationSpec deriv, GroupElem working_precision,
          std::vector<GeneratorRecord> log = {});
  DVModel(const DVModel& other);
  DVModel& operator=(const DVModel& other);

  /// Z + Z*omega, the omega-derivation, u = 1, th1 with delta(th1) = t^-3.
  static DVModel base();
  /// Rank-1 integers with delta(t) = 1.
  static DVModel dt();

  const ValueGroupDesc& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return group_.rank(); }
  const GroupElem& working_precision() const noexcept { return precision_; }
  void set_working_precision(GroupElem p);
  GroupElem least_unit() const { return group_.least_unit(); }

  /// Snapshot of the derivation, including every adjoined generator.
  DerivationSpec derivation() const;
  std::vector<GeneratorRecord> generator_log() const;
  std::size_t generator_count() const;
  /// Highest theta index known to the model.
  std::size_t max_symbol() const;

  HahnSeries delta(const HahnSeries& x) const;
  ResidueClass partial(const HahnSeries& x) const;
  ResidueClass dlog(const HahnSeries& x) const;
  HahnSeries L(const GroupElem& g) const;
  HahnSeries u() const;

  /// Adjoins a fresh th_new; `derivative` receives th_new and returns
  /// delta_u(th_new). Returns the new index.
  std::size_t adjoin(const GroupElem& exponent, const std::function<HahnSeries(const KElem&)>& derivative,
                     const std::string& origin);

  /// Exponents in the group and every theta declared; StructuralError /
  /// DomainError / UndeclaredGeneratorError otherwise.
  void validate(const HahnSeries& x) const;

  HahnSeries one() const { return HahnSeries::constant(rank(), 1); }
  HahnSeries zero() const { return HahnSeries(rank()); }
  HahnSeries t_pow(const GroupElem& g) const;

 private:
  ValueGroupDesc group_;
  DerivationSpec deriv_;
  GroupElem precision_;
  std::vector<GeneratorRecord> log_;
  mutable std::shared_mutex mutex_;
};

RingTag classify_ring(const DVModel& m, const HahnSeries& x);
/// val_D(dx) for x in O: +inf exactly on Q.
ExtGroupElem val_partial(const DVModel& m, const HahnSeries& x);
/// Some a' in Q with x * a' in R \ Q; DomainError for x in Q or outside O.
HahnSeries neutralizer(DVModel& m, const HahnSeries& x);
/// Adjoins th with exponent g = max(gamma, 0) + least unit and returns
/// x = a + th * t^g with delta_u(x) = b.
HahnSeries solve_density(DVModel& m, const HahnSeries& a, const HahnSeries& b, const GroupElem& gamma);
/// a with val(a) > gamma and val_partial(a) < -gamma, for gamma > 0.
HahnSeries weird_witness(DVModel& m, const GroupElem& gamma);
/// A monomial b in Q with val(b) >= val(a); in I when a lies in O.
HahnSeries cofinal_q_element(const DVModel& m, const HahnSeries& a);

/// elems[index] = q1 * elems[j] + q2 * elems[k] with q1, q2 in Q and j < k.
struct TripleRelation {
  std::size_t index;
  std::size_t j;
  std::size_t k;
  HahnSeries q1;
  HahnSeries q2;
};

TripleRelation reduce_triple(DVModel& m, const HahnSeries& a, const HahnSeries& b, const HahnSeries& c);

/// val(x - a) > gamma and val(delta x - b) > gamma.
bool dv_ball_member(const DVModel& m, const HahnSeries& x, const HahnSeries& a, const HahnSeries& b,
                    const GroupElem& gamma);

/// A failure of the V-topology axiom for U = R inside the neighborhood aR:
/// x * y = shrunk with shrunk = shrink * a, shrink in R, x not in R and y not in O.
struct VTopologyRefutation {
  HahnSeries shrink;
  HahnSeries shrunk;
  HahnSeries x;
  HahnSeries y;
};

VTopologyRefutation refute_vtopology(DVModel& m, const HahnSeries& a);

}  // namespace dvf
