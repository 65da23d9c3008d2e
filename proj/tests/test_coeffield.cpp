#include <gtest/gtest.h>

#include <random>

#include "dvf/coeffield.hpp"

using namespace dvf;

namespace {

const KElem th1 = KElem::symbol(1);
const KElem th2 = KElem::symbol(2);
const KElem th3 = KElem::symbol(3);

Poly random_poly(std::mt19937_64& rng, int max_deg, int nsyms) {
  std::uniform_int_distribution<int> nterms(1, 4), coef(-5, 5), deg(0, max_deg);
  Poly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Mono m(nsyms, 0);
    int budget = deg(rng);
    for (int s = 0; s < nsyms && budget > 0; ++s) {
      std::uniform_int_distribution<int> take(0, budget);
      m[s] = take(rng);
      budget -= m[s];
    }
    Rational q(coef(rng), 1 + static_cast<long>(rng() % 3));
    q.canonicalize();
    p += Poly::monomial(m, q);
  }
  return p;
}

KElem random_k(std::mt19937_64& rng) {
  Poly den = random_poly(rng, 2, 3);
  if (den.is_zero()) den = Poly(1);
  return KElem(random_poly(rng, 4, 3), den);
}

}  // namespace

TEST(Poly, ExactDivisionAndGcd) {
  Poly x = Poly::symbol(1), y = Poly::symbol(2);
  Poly f = (x + y) * (x - y), g = (x + y) * (x + y + Poly(1));
  EXPECT_EQ(common_factor(f * x, g * x * y), x);
  EXPECT_EQ(common_factor(Poly(2) * x * x - Poly(2), x + Poly(1)), x + Poly(1));
  EXPECT_EQ(*Poly::exact_div(f, x - y), x + y);
  EXPECT_FALSE(Poly::exact_div(f, x + Poly(2)).has_value());
  EXPECT_EQ(common_factor(x * y, y * y), y);
  EXPECT_EQ(common_factor(Poly(3), x), Poly(1));
}

TEST(KElem, CancellationAndEquality) {
  KElem a = (th1 * th1 - th2 * th2) / (th1 + th2);
  EXPECT_EQ(a, th1 - th2);
  EXPECT_EQ((th1 / th2) * (th2 / th1), KElem(1));
  EXPECT_EQ(KElem(2) / KElem(4), KElem(Rational(1, 2)));
  EXPECT_EQ(((th1 + 1) / (th1 * 2 + 2)).to_string(), "1/2");
}

TEST(KElem, FieldAxiomsRandomized) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    KElem a = random_k(rng), b = random_k(rng), c = random_k(rng);
    ASSERT_EQ(a + (b + c), (a + b) + c);
    ASSERT_EQ(a * (b * c), (a * b) * c);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), KElem(1));
  }
}

TEST(KElem, PartialDerivativeQuotientRule) {
  KElem f = th1 * th1 / (th2 + 1);
  EXPECT_EQ(f.partial(1), KElem(2) * th1 / (th2 + 1));
  EXPECT_EQ(f.partial(2), -(th1 * th1) / ((th2 + 1) * (th2 + 1)));
  EXPECT_TRUE(f.partial(3).is_zero());
}

TEST(KElem, Printing) {
  EXPECT_EQ((th1 * th1 * th2 * 3 - Rational(1, 2)).to_string(), "3*th1^2*th2 - 1/2");
  EXPECT_EQ((KElem(1) / th1).to_string(), "1/th1");
  EXPECT_EQ(((th1 + 1) / (th2 - 1)).to_string(), "(th1 + 1)/(th2 - 1)");
  EXPECT_EQ((-th1).to_string(), "-th1");
}

TEST(DualNumbers, Invert) {
  EXPECT_EQ(dual_invert(DualNumber(2)), DualNumber(KElem(Rational(1, 2))));
  EXPECT_EQ(dual_invert(DualNumber(1, 3)), DualNumber(1, -3));
  DualNumber x(th1, th2);
  DualNumber inv = dual_invert(x);
  EXPECT_EQ(inv * x, DualNumber(1));
  EXPECT_EQ(inv, DualNumber(th1.inverse(), -(th2 / (th1 * th1))));
  EXPECT_THROW(dual_invert(DualNumber::eps()), DomainError);
}

TEST(DualNumbers, RingLaws) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    DualNumber x(random_k(rng), random_k(rng)), y(random_k(rng), random_k(rng)),
        z(random_k(rng), random_k(rng));
    ASSERT_EQ(x * (y * z), (x * y) * z);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    if (x.is_unit()) ASSERT_EQ(x * dual_invert(x), DualNumber(1));
  }
  EXPECT_TRUE((DualNumber::eps() * DualNumber::eps()).is_zero());
}

TEST(DualNumbers, Printing) {
  EXPECT_EQ(DualNumber(0, 1).to_string(), "0 + 1*eps");
  EXPECT_EQ(DualNumber(1, -3).to_string(), "1 - 3*eps");
  EXPECT_EQ(DualNumber(th1 + 1, th2).to_string(), "(th1 + 1) + th2*eps");
}

TEST(RepeatedEigenvalue, Examples) {
  EXPECT_TRUE(repeated_eigenvalue_check(th1, th2, 0, th1));
  EXPECT_TRUE(repeated_eigenvalue_check(1, 0, 0, 1));
  EXPECT_FALSE(repeated_eigenvalue_check(1, 0, 0, 2));
}

TEST(RepeatedEigenvalue, ConjugationInvariant) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 100; ++i) {
    KElem s = random_k(rng), t = random_k(rng);
    // Multiplication by s + t*eps on the basis {1, eps}.
    KElem m[2][2] = {{s, 0}, {t, s}};
    Rational g[2][2] = {{d(rng), d(rng)}, {d(rng), d(rng)}};
    Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det == 0) continue;
    Rational gi[2][2] = {{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}};
    KElem c[2][2];
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) {
        KElem acc;
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q) acc += KElem(g[r][p]) * m[p][q] * KElem(gi[q][col]);
        c[r][col] = acc;
      }
    EXPECT_TRUE(repeated_eigenvalue_check(m[0][0], m[0][1], m[1][0], m[1][1]));
    EXPECT_TRUE(repeated_eigenvalue_check(c[0][0], c[0][1], c[1][0], c[1][1]));
    KElem n[2][2] = {{s, 0}, {t, s + 1}};
    EXPECT_FALSE(repeated_eigenvalue_check(n[0][0], n[0][1], n[1][0], n[1][1]));
  }
}
