#include "dvf/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "dvf/ctrexgame.hpp"
#include "dvf/inflator.hpp"
#include "dvf/newton.hpp"
#include "dvf/parse.hpp"

namespace dvf {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GroupElem G(std::initializer_list<long> c) { return GroupElem(c); }

KElem random_coeff(Rng& rng, bool theta) {
  int num = uniform(rng, 1, 5);
  if (uniform(rng, 0, 1)) num = -num;
  KElem c(Rational(num, uniform(rng, 1, 3)));
  if (theta && uniform(rng, 0, 2) == 0) c += KElem::symbol(1);
  return c;
}

HahnSeries random_series2(Rng& rng, int major_lo, int major_hi, int minor_lo, int minor_hi, bool theta) {
  std::vector<Term> terms;
  for (int i = 0, n = uniform(rng, 1, 4); i < n; ++i)
    terms.emplace_back(G({uniform(rng, major_lo, major_hi), uniform(rng, minor_lo, minor_hi)}),
                       random_coeff(rng, theta));
  return HahnSeries(2, std::move(terms));
}

HahnSeries random_series1(Rng& rng, int lo, int hi, bool theta) {
  std::vector<Term> terms;
  for (int i = 0, n = uniform(rng, 1, 3); i < n; ++i) terms.emplace_back(G({uniform(rng, lo, hi)}), random_coeff(rng, theta));
  return HahnSeries(1, std::move(terms));
}

// Exact element of O in the base model: nonnegative minor exponents at major 0.
HahnSeries random_base_O(Rng& rng) {
  std::vector<Term> terms;
  for (int i = 0, n = uniform(rng, 1, 3); i < n; ++i) {
    const int hi = uniform(rng, 0, 2);
    const int lo = hi == 0 ? uniform(rng, 0, 4) : uniform(rng, -2, 4);
    terms.emplace_back(G({hi, lo}), random_coeff(rng, true));
  }
  return HahnSeries(2, std::move(terms));
}

// Exact element of R in the base model.
HahnSeries random_base_R(Rng& rng) {
  std::vector<Term> terms;
  for (int i = 0, n = uniform(rng, 1, 4); i < n; ++i) {
    switch (uniform(rng, 0, 4)) {
      case 0: terms.emplace_back(G({0, uniform(rng, 0, 4)}), random_coeff(rng, false)); break;
      case 1: terms.emplace_back(G({0, uniform(rng, 3, 7)}), random_coeff(rng, true)); break;
      case 2: terms.emplace_back(G({1, uniform(rng, 0, 4)}), random_coeff(rng, true)); break;
      default: terms.emplace_back(G({2, uniform(rng, -3, 3)}), random_coeff(rng, true)); break;
    }
  }
  return HahnSeries(2, std::move(terms));
}

// Rank 1: d/dt with d(th1) = t^-3.
DVModel dt_theta_model() {
  DerivationSpec d = DerivationSpec::d_dt();
  d.coeff_table.emplace(1, HahnSeries::t_pow(G({-3})));
  return DVModel(ValueGroupDesc::integers(1), d, G({12}));
}

// Rank 1: constant character with d(th1) = t^-3.
DVModel theta_model() {
  return DVModel(ValueGroupDesc::integers(1),
                 DerivationSpec({HahnSeries(1)}, {{1, HahnSeries::t_pow(G({-3}))}}, HahnSeries::constant(1, 1)),
                 G({12}));
}

class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }

  template <class F>
  void check(bool ok, F describe) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_counterexample = describe();
  }

  // Runs one case; an exception counts as a failure.
  template <class Body>
  void run(const std::string& label, Body body) {
    try {
      std::string why;
      const bool ok = body(why);
      check(ok, [&] { return label + (why.empty() ? "" : ": " + why); });
    } catch (const std::exception& e) {
      check(false, [&] { return label + ": threw " + e.what(); });
    }
  }

  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  SuiteResult r_;
  std::chrono::steady_clock::time_point start_;
};

std::string str(const HahnSeries& s) { return s.to_string(); }

SuiteResult field_laws(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("field-laws");
  while (t.finish().cases < 1000) {
    const HahnSeries x = random_series2(rng, -1, 2, -4, 4, true), y = random_series2(rng, -1, 2, -4, 4, true);
    if (x.definitely_zero() || y.definitely_zero()) continue;
    t.run("x = " + str(x) + ", y = " + str(y), [&](std::string& why) {
      const ExtGroupElem vx = x.val(), vy = y.val(), vs = (x + y).val();
      if ((x * y).val() != vx + vy) return why = "val(xy) != val x + val y", false;
      if (vs < min(vx, vy)) return why = "val(x + y) < min", false;
      if (vx != vy && vs != min(vx, vy)) return why = "val(x + y) != min for distinct valuations", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult leibniz(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("leibniz");
  const DerivationSpec base = DVModel::base().derivation();
  const std::vector<DerivationSpec> flat{dt_theta_model().derivation(), theta_model().derivation()};
  while (t.finish().cases < 500) {
    // Leibniz on the rank-2 model; the log axiom on rank 1, where inverses are exact.
    const HahnSeries x = random_base_O(rng), y = random_base_O(rng);
    const HahnSeries p = random_series1(rng, 0, 4, true), q = random_series1(rng, 0, 4, true);
    if (x.definitely_zero() || y.definitely_zero() || p.definitely_zero() || q.definitely_zero() ||
        (p + q).definitely_zero())
      continue;
    const DerivationSpec& d = flat[t.finish().cases % 2];
    t.run("x = " + str(x) + ", y = " + str(y) + "; p = " + str(p) + ", q = " + str(q), [&](std::string& why) {
      if (!definitely_equal(apply_delta(base, x * y), x * apply_delta(base, y) + y * apply_delta(base, x)))
        return why = "Leibniz rule fails on x, y", false;
      if (!definitely_equal(apply_delta(d, p * q), p * apply_delta(d, q) + q * apply_delta(d, p)))
        return why = "Leibniz rule fails on p, q", false;
      if (!check_log_axiom(d, p, q)) return why = "log-derivation axiom fails on p, q", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult diffs(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("diffs");
  const DerivationSpec d = dt_theta_model().derivation();
  for (int attempts = 0; t.finish().cases < 200 && attempts < 5000; ++attempts) {
    const HahnSeries x = random_series1(rng, -2, 4, true), y = random_series1(rng, -2, 4, true);
    const HahnSeries diff = x - y;
    if (x.definitely_zero() || y.definitely_zero() || diff.definitely_zero()) continue;
    if (diff.val() > max(x.val(), y.val())) continue;
    t.run("x = " + str(x) + ", y = " + str(y), [&](std::string& why) {
      const DiffsCertificate c = check_diffs_identity(d, x, y);
      if (!c.equal) why = "lhs " + c.lhs.to_string() + " != rhs " + c.rhs.to_string();
      return c.equal;
    });
  }
  return t.finish();
}

HahnSeries random_root(Rng& rng, int k) {
  KElem lead = random_coeff(rng, true);
  HahnSeries r = HahnSeries::monomial(lead, G({k}));
  if (uniform(rng, 0, 2) == 1) r += HahnSeries::monomial(random_coeff(rng, false), G({k + uniform(rng, 1, 3)}));
  return r;
}

SuiteResult newton_count(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("newton-count");
  for (int i = 0; i < 300; ++i) {
    std::vector<HahnSeries> roots;
    std::size_t expected = 0;
    std::vector<GroupElem> negated;
    for (int j = 0, d = uniform(rng, 1, 6); j < d; ++j) {
      const int v = uniform(rng, -3, 3);
      roots.push_back(random_root(rng, v));
      negated.push_back(G({-v}));
      expected += v >= 0;
    }
    const ValuedPoly p = ValuedPoly::from_roots(roots, HahnSeries::monomial(KElem(2), G({uniform(rng, -2, 2)})));
    t.run("P = " + p.to_string(), [&](std::string& why) {
      const std::size_t got = count_roots_in_O(p);
      if (got != expected) return why = "count " + std::to_string(got) + ", constructed " + std::to_string(expected), false;
      std::vector<GroupElem> slopes;
      for (const auto& s : polygon(p).segments) slopes.insert(slopes.end(), s.length, s.slope);
      std::sort(negated.begin(), negated.end());
      if (slopes != negated) return why = "slopes differ from negated root valuations", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult rolle(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("rolle");
  for (int i = 0; i < 100; ++i) {
    const int rho = uniform(rng, -2, 3);
    const HahnSeries center = random_root(rng, uniform(rng, -2, 3));
    std::vector<HahnSeries> roots{center + HahnSeries::monomial(KElem(uniform(rng, 1, 5)), G({rho})),
                                  center + HahnSeries::monomial(KElem(-uniform(rng, 1, 5)), G({rho + uniform(rng, 0, 3)}))};
    for (int j = 0, e = uniform(rng, 0, 3); j < e; ++j)
      roots.push_back(center + HahnSeries::monomial(random_coeff(rng, false), G({rho - uniform(rng, 1, 3)})));
    const ValuedPoly p = ValuedPoly::from_roots(roots, HahnSeries::constant(1, 1));
    t.run("P = " + p.to_string() + ", center " + str(center) + ", radius " + std::to_string(rho), [&](std::string& why) {
      const RolleVerdict v = rolle_check(p, center, G({rho}));
      if (v.roots_in_ball != 2) return why = "ball count " + std::to_string(v.roots_in_ball), false;
      if (!v.certified) return why = "no derivative root certified", false;
      return true;
    });
  }
  return t.finish();
}

struct Mat2 {
  long a, b, c, d;
};

Mat2 random_unimodular(Rng& rng) {
  Mat2 m{1, 0, 0, 1};
  for (int i = 0; i < 4; ++i) {
    const long s = uniform(rng, -2, 2);
    switch (uniform(rng, 0, 3)) {
      case 0: m = {m.a + s * m.c, m.b + s * m.d, m.c, m.d}; break;
      case 1: m = {m.a, m.b, m.c + s * m.a, m.d + s * m.b}; break;
      case 2: m = {m.c, m.d, m.a, m.b}; break;
      default: m = {-m.a, -m.b, m.c, m.d}; break;
    }
  }
  return m;
}

SuiteResult specialize(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("specialize");
  const DVModel m = dt_theta_model();
  const SearchWindow w = default_window(m);
  std::vector<Mat2> mats;
  for (int i = 0; i < 20; ++i) mats.push_back(random_unimodular(rng));
  EpsSubspace wild_image(2);
  wild_image.add({DualNumber::eps(), DualNumber()});
  wild_image.add({DualNumber(), DualNumber::eps()});
  for (int i = 0; i < 50; ++i) {
    const HahnSeries alpha = random_series1(rng, -2, 3, true);
    if (alpha.definitely_zero()) continue;
    const Line L({HahnSeries::constant(1, 1), alpha});
    t.run("line " + L.to_string(), [&](std::string& why) {
      const Specialization s = specialize_line(m, L, w);
      if (s.space.completeness == Completeness::Complete && s.space.dimension() != 2)
        return why = "complete specialization of dimension " + std::to_string(s.space.dimension()), false;
      if (s.method == "wild" && !(s.space == wild_image)) return why = "wild line not k eps + k eps", false;
      for (std::size_t j = 0; j < mats.size(); ++j) {
        const Mat2& g = mats[j];
        const Line gL({L[0].scaled(KElem(g.a)) + L[1].scaled(KElem(g.b)), L[0].scaled(KElem(g.c)) + L[1].scaled(KElem(g.d))});
        EpsSubspace image(2);
        for (const auto& v : s.space.basis())
          image.add({DualNumber(g.a) * v[0] + DualNumber(g.b) * v[1], DualNumber(g.c) * v[0] + DualNumber(g.d) * v[1]});
        if (!(specialize_line(m, gL, w).space == image))
          return why = "equivariance fails for matrix " + std::to_string(j), false;
      }
      return true;
    });
  }
  return t.finish();
}

SuiteResult wres_hom(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("wres-hom");
  const DVModel m = DVModel::base();
  for (int i = 0; i < 300; ++i) {
    const HahnSeries x = random_base_R(rng), y = random_base_R(rng);
    t.run("x = " + str(x) + ", y = " + str(y), [&](std::string& why) {
      const DualNumber wx = wres(m, x), wy = wres(m, y);
      if (!(wres(m, x + y) == wx + wy)) return why = "not additive", false;
      if (!(wres(m, x * y) == wx * wy)) return why = "not multiplicative", false;
      return true;
    });
  }
  return t.finish();
}

ExtGroupElem capped(const ExtGroupElem& v) { return v.is_finite() && v.value().sign() > 0 ? ExtGroupElem::infinity() : v; }

SuiteResult vp_laws(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("vp-laws");
  const DVModel m = DVModel::base();
  const std::vector<HahnSeries> q_elems{HahnSeries::constant(2, 3), HahnSeries::t_pow(G({0, 3})),
                                        HahnSeries::monomial(KElem(2), G({2, -1})),
                                        HahnSeries::t_pow(G({0, 1})) + HahnSeries::t_pow(G({3, 0}))};
  for (int i = 0; t.finish().cases < 300; ++i) {
    const HahnSeries a = random_base_O(rng), b = random_base_O(rng);
    if (a.definitely_zero() || b.definitely_zero()) continue;
    const HahnSeries& q = q_elems[i % q_elems.size()];
    t.run("a = " + str(a) + ", b = " + str(b), [&](std::string& why) {
      const ExtGroupElem pa = val_partial(m, a), pb = val_partial(m, b);
      if (in_R(classify_ring(m, a)) != (pa.is_infinite() || pa.value().sign() >= 0))
        return why = "R membership disagrees with val_partial", false;
      if (val_partial(m, a + b) < min(pa, pb)) return why = "sum law", false;
      if (val_partial(m, a * b) < min(pa, pb)) return why = "product law", false;
      if (val_partial(m, a * b) < capped(min(a.val() + pb, pa + b.val()))) return why = "refined product law", false;
      if (val_partial(m, a * q) != capped(pa + q.val())) return why = "scalar rule with q = " + str(q), false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult neutralizers(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("neutralizer");
  for (int attempts = 0; t.finish().cases < 100 && attempts < 2000; ++attempts) {
    DVModel m = DVModel::base();
    const HahnSeries x = random_base_O(rng);
    if (x.definitely_zero() || in_Q(classify_ring(m, x))) continue;
    t.run("x = " + str(x), [&](std::string& why) {
      const HahnSeries n = neutralizer(m, x);
      if (!in_Q(classify_ring(m, n))) return why = "neutralizer " + str(n) + " not in Q", false;
      if (classify_ring(m, x * n) != RingTag::InRnotQ) return why = "x * n not in R \\ Q for n = " + str(n), false;
      if (ExtGroupElem(-n.val().value()) != val_partial(m, x)) return why = "-val(n) != val_partial(x)", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult reduce3(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("reduce3");
  const std::vector<DVModel> models{theta_model(), dt_theta_model()};
  for (int i = 0; i < 100; ++i) {
    DVModel m = models[i % 2];
    // A monomial of least valuation keeps every quotient exact.
    const int v = uniform(rng, 0, 2);
    std::vector<HahnSeries> e{HahnSeries::monomial(random_coeff(rng, true), G({v})),
                              random_series1(rng, v + 1, v + 5, true), random_series1(rng, v + 1, v + 5, true)};
    std::shuffle(e.begin(), e.end(), rng);
    t.run("(" + str(e[0]) + ", " + str(e[1]) + ", " + str(e[2]) + ")", [&](std::string& why) {
      const TripleRelation r = reduce_triple(m, e[0], e[1], e[2]);
      const HahnSeries rhs = r.q1 * e[r.j] + r.q2 * e[r.k];
      if (!definitely_equal(e[r.index], rhs)) return why = "relation not exact: rhs = " + str(rhs), false;
      if (!in_Q(classify_ring(m, r.q1)) || !in_Q(classify_ring(m, r.q2)))
        return why = "coefficients " + str(r.q1) + ", " + str(r.q2) + " not in Q", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult density(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("density");
  DVModel m = DVModel::base();
  std::vector<std::pair<HahnSeries, HahnSeries>> answers;
  for (int i = 0; i < 100; ++i) {
    const HahnSeries a = random_base_O(rng);
    const HahnSeries b = random_series2(rng, -2, 1, -4, 4, true);
    const int major = uniform(rng, 0, 5);
    const GroupElem gamma = major == 5 ? G({5, 0}) : G({major, uniform(rng, -3, 6)});
    t.run("a = " + str(a) + ", b = " + str(b) + ", gamma = " + to_string(gamma), [&](std::string& why) {
      const HahnSeries x = solve_density(m, a, b, gamma);
      if (!((x - a).val() > ExtGroupElem(gamma))) return why = "val(x - a) <= gamma", false;
      if (!definitely_equal(m.delta(x), b)) return why = "delta x != b", false;
      answers.emplace_back(x, b);
      for (const auto& [xi, bi] : answers)
        if (!definitely_equal(m.delta(xi), bi)) return why = "earlier witness " + str(xi) + " changed", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult vtopology(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("vtopology");
  while (t.finish().cases < 20) {
    DVModel m = DVModel::base();
    HahnSeries a = random_base_O(rng);
    if (a.definitely_zero()) continue;
    if (t.finish().cases % 3 == 0) a = a.shifted(KElem(1), G({-1, uniform(rng, -2, 2)}));
    t.run("a = " + str(a), [&](std::string& why) {
      const VTopologyRefutation r = refute_vtopology(m, a);
      if (!in_R(classify_ring(m, r.shrink)) || !definitely_equal(r.shrunk, r.shrink * a))
        return why = "shrink factor not in R", false;
      if (!definitely_equal(r.x * r.y, r.shrunk)) return why = "xy != shrunk a", false;
      if (in_R(classify_ring(m, r.x))) return why = "x in R", false;
      if (in_O(classify_ring(m, r.y))) return why = "y in O", false;
      return true;
    });
  }
  return t.finish();
}

SuiteResult double_mutation(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("double-mutation");
  const DVModel m = DVModel::base();
  const SearchWindow w = default_window(m);
  for (int i = 0; i < 20; ++i) {
    const Rational q(uniform(rng, -4, 4));
    const HahnSeries qs = HahnSeries::constant(2, KElem(q));
    const HahnSeries r = i % 2 ? qs + random_base_R(rng).shifted(KElem(1), G({0, 1}))
                               : qs + HahnSeries::monomial(KElem::symbol(1) * random_coeff(rng, false), G({0, uniform(rng, 4, 6)}));
    const HahnSeries a = HahnSeries::t_pow(i % 4 < 2 ? G({1, -2}) : G({1, 0}));
    t.run("r = " + str(r) + ", a = " + str(a), [&](std::string& why) {
      const Specialization s = mutate_line(m, Line({HahnSeries::constant(2, 1), r}), Line({HahnSeries::constant(2, 1), a}), w);
      bool found = false;
      for (const auto& wit : s.witnesses) {
        const DualNumber &u = wit.image[2], &v = wit.image[3];
        if (u.is_zero()) continue;
        const KElem qq = !u.a.is_zero() ? v.a / u.a : v.b / u.b;
        if (!(v == DualNumber(qq) * u)) continue;
        found = true;
        if (r.val() < ExtGroupElem(G({0, 0}))) return why = "val(r) < 0", false;
        if (!(r.res() == qq)) return why = "res(r) != " + qq.to_string(), false;
      }
      if (!found) why = "no (s, t, u, qu) with u != 0 among the witnesses";
      return found;
    });
  }
  return t.finish();
}

std::vector<HahnSeries> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game corpus " + path);
  std::vector<HahnSeries> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_series(line, {2, std::nullopt}));
  }
  return out;
}

// Adversary replies: the forced pair (db, dc lifts plus noise in m_K) and
// random rational combinations of the game monomials.
std::vector<std::pair<HahnSeries, HahnSeries>> adversaries(const GameModel& gm, const GameTranscript& tr, Rng& rng) {
  const HahnSeries db = dclass(apply_delta(gm.d1(), tr.b)).rep(), dc = dclass(apply_delta(gm.d1(), tr.c)).rep();
  const std::vector<GroupElem> basis{G({0, 0}), G({0, 1}), G({1, 0}), G({0, -1}), G({0, -tr.n}), G({0, 1 - tr.n})};
  auto combo = [&] {
    HahnSeries s(2);
    for (int i = 0, n = uniform(rng, 1, 3); i < n; ++i) {
      GroupElem g = G({0, 0});
      for (int j = 0, d = uniform(rng, 1, 3); j < d; ++j) g += basis[uniform(rng, 0, static_cast<int>(basis.size()) - 1)];
      s += HahnSeries::monomial(KElem(Rational(uniform(rng, -3, 3), uniform(rng, 1, 2))), g);
    }
    return s;
  };
  auto small = [&] { return HahnSeries::monomial(KElem(uniform(rng, 1, 3)), G({uniform(rng, 0, 1), uniform(rng, 1, 3)})); };
  std::vector<std::pair<HahnSeries, HahnSeries>> out{{db, dc}, {db + small(), dc + small()}, {db, dc + small()}};
  while (out.size() < 12) out.emplace_back(combo(), out.size() % 2 ? combo() : dc + combo());
  return out;
}

SuiteResult game(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("game");
  const GameModel gm;
  const std::vector<HahnSeries> corpus = read_corpus(data_dir() + "/game_corpus.txt");
  t.check(corpus.size() >= 30, [&] { return "game corpus has only " + std::to_string(corpus.size()) + " plays"; });
  for (const HahnSeries& ap : corpus) {
    const GameTranscript tr = sigma_refute(gm, ap);
    t.check(!tr.matched_u, [&] { return "a' = " + str(ap) + " matched u"; });
    if (tr.matched_u) continue;
    t.check(definitely_equal(tr.b * tr.c, tr.a), [&] { return "a != bc for a' = " + str(ap); });
    for (const auto& [bp, cp] : adversaries(gm, tr, rng)) {
      t.run("a' = " + str(ap) + ", b' = " + str(bp) + ", c' = " + str(cp), [&](std::string&) {
        const int idx = sigma_check_triple(gm, tr, bp, cp);
        return idx >= 1 && idx <= 3;
      });
    }
  }
  return t.finish();
}

SuiteResult split(std::uint64_t seed) {
  Rng rng(seed);
  Tally t("split-radical");
  const ValueGroupDesc q = ValueGroupDesc::rationals(1);
  for (int i = 0; i < 100; ++i) {
    const GroupElem v(std::vector<Rational>{Rational(uniform(rng, 1, 12), uniform(rng, 1, 4))});
    const HahnSeries a = HahnSeries::monomial(random_coeff(rng, i % 3 == 0), v);
    const unsigned n = uniform(rng, 2, 4);
    t.run("a = " + str(a) + ", n = " + std::to_string(n), [&](std::string& why) {
      const RadicalSplit s = split_radical(q, a, n, G({40}));
      if (!definitely_equal(s.b * s.c.pow(n), a)) return why = "b c^n != a", false;
      if (!definitely_equal(s.b * s.c.pow(n - 1), s.e)) return why = "b c^(n-1) != e", false;
      if (!(s.b.val() > ExtGroupElem(G({0}))) || !(s.c.val() > ExtGroupElem(G({0})))) return why = "val <= 0", false;
      return true;
    });
  }
  return t.finish();
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("DVF_DATA_DIR")) return env;
  return DVF_DEFAULT_DATA_DIR;
}

const std::vector<SuiteInfo>& math_suites() {
  static const std::vector<SuiteInfo> suites{
      {"field-laws", "valuation laws on 1000 random pairs", field_laws},
      {"leibniz", "Leibniz rule and log-derivation axiom on 500 pairs in O", leibniz},
      {"diffs", "dlog(x - y) identity on 200 pairs", diffs},
      {"newton-count", "roots in O of 300 polynomials built from roots", newton_count},
      {"rolle", "derivative roots in 100 balls holding two roots", rolle},
      {"specialize", "line specialization: dimension, wild lines, GL2 equivariance", specialize},
      {"wres-hom", "wres is a ring homomorphism on 300 pairs in R", wres_hom},
      {"vp-laws", "val_partial laws on 300 pairs", vp_laws},
      {"neutralizer", "neutralizer contract on 100 elements of O \\ Q", neutralizers},
      {"reduce3", "three-generator relations on 100 triples", reduce3},
      {"density", "100 density queries with gamma up to [5;0]", density},
      {"vtopology", "V-topology refutations for 20 neighborhoods", vtopology},
      {"double-mutation", "double mutation on 20 instances", double_mutation},
      {"game", "game refutations over the shipped corpus", game},
      {"split-radical", "a = b c^n splittings on 100 inputs", split},
  };
  return suites;
}

}  // namespace dvf
