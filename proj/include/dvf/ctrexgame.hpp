#pragma once

#include <optional>

#include "dvf/deriv.hpp"

namespace dvf {

/// Z + Z*omega with the derivation d1 = u * d0, coarsened along the minor
/// coordinate: val'(x) is the major coordinate of val(x).
class GameModel {
 public:
  /// u = 1 + t.
  GameModel();
  explicit GameModel(HahnSeries u);

  const HahnSeries& u() const noexcept { return u_; }
  const DerivationSpec& d0() const noexcept { return d0_; }
  const DerivationSpec& d1() const noexcept { return d1_; }

 private:
  HahnSeries u_;
  DerivationSpec d0_;
  DerivationSpec d1_;
};

/// val'(x) > 0, i.e. val(x) exceeds every integer.
bool in_p(const GameModel& m, const HahnSeries& x);

struct Slice {
  /// Terms with exponent <= 0 and major coordinate 0.
  HahnSeries head;
  HahnSeries tail;
};

/// x = head + tail with val(tail) > 0; DomainError when val'(x) < 0.
Slice slice(const GameModel& m, const HahnSeries& x);

struct GameTranscript {
  HahnSeries a;
  HahnSeries a_prime;
  /// Unset when a' = u mod p.
  std::optional<ExtGroupElem> val_diff;
  long n = 0;
  HahnSeries b;
  HahnSeries c;
  bool matched_u = false;
};

/// Our reply to the adversary's a': n > minor coordinate of val(a' - u),
/// b = t^n, c = t^(omega - n). MatchedU when a' - u lies in p.
GameTranscript sigma_refute(const GameModel& m, const HahnSeries& a_prime);

/// Index (1, 2 or 3) of an identity among b' = db, c' = dc (mod m_K) and
/// a' = b c' + c b' that fails. SoundnessAlarm when all three hold.
int sigma_check_triple(const GameModel& m, const GameTranscript& t, const HahnSeries& b_prime,
                       const HahnSeries& c_prime);

}  // namespace dvf
