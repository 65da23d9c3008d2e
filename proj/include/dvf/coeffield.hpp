#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dvf/ordgroup.hpp"

namespace dvf {

/// Exponent vector of a monomial in th1, th2, ...; index 0 is th1.
/// Stored without trailing zeros so equal monomials compare equal.
using Mono = std::vector<std::uint32_t>;

/// Polynomial over Q in the symbols th1..thM, lex order with th1 most
/// significant. Terms never carry a zero coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants embed implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly symbol(std::size_t m);  // th_m, m >= 1
  static Poly monomial(Mono exps, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_value() const;
  const std::map<Mono, Rational>& terms() const noexcept { return terms_; }
  /// Greatest term in lex order.
  const std::pair<const Mono, Rational>& leading() const { return *terms_.rbegin(); }

  /// Number of symbol slots in use (highest symbol index).
  std::size_t nvars() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;

  /// d/d(th_{var+1}).
  Poly partial(std::size_t var) const;

  /// f / g when g divides f exactly, else nullopt.
  static std::optional<Poly> exact_div(const Poly& f, const Poly& g);

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Mono& m, const Rational& c);
  std::map<Mono, Rational> terms_;
};

/// A common divisor with leading coefficient 1: the monomial gcd times the
/// exact gcd of the rest when both are univariate in one symbol or one
/// divides the other. Not a full multivariate gcd.
Poly common_factor(const Poly& f, const Poly& g);

/// Element of k = Q(th1, ..., thM) as num/den with a den whose leading
/// coefficient is 1. Common factors are cancelled when cheap; equality is
/// decided by cross-multiplication, never by comparing representations.
class KElem {
 public:
  KElem() = default;
  KElem(const Rational& c) : num_(c) {}  // NOLINT
  KElem(long c) : num_(Rational(c)) {}  // NOLINT
  KElem(Poly num) : num_(std::move(num)) {}  // NOLINT
  KElem(Poly num, Poly den);

  static KElem symbol(std::size_t m) { return KElem(Poly::symbol(m)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const;
  /// True for sums of more than one term and for fractions.
  bool is_compound() const;
  /// Highest symbol index used, 0 for constants.
  std::size_t max_symbol() const;
  std::set<std::size_t> symbols() const;

  KElem operator-() const;
  KElem& operator+=(const KElem& o);
  KElem& operator-=(const KElem& o);
  KElem& operator*=(const KElem& o);
  KElem& operator/=(const KElem& o);
  friend KElem operator+(KElem a, const KElem& b) { return a += b; }
  friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
  friend KElem operator*(KElem a, const KElem& b) { return a *= b; }
  friend KElem operator/(KElem a, const KElem& b) { return a /= b; }
  KElem inverse() const;
  KElem pow(long e) const;

  /// Partial derivative with respect to th_m.
  KElem partial(std::size_t m) const;

  friend bool operator==(const KElem& x, const KElem& y);

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_ = Poly(1);
};

/// a + b*eps with eps^2 = 0.
struct DualNumber {
  KElem a;
  KElem b;

  DualNumber() = default;
  DualNumber(KElem a_, KElem b_ = KElem()) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  static DualNumber eps() { return {KElem(), KElem(1)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_unit() const { return !a.is_zero(); }

  DualNumber operator-() const { return {-a, -b}; }
  friend DualNumber operator+(const DualNumber& x, const DualNumber& y) { return {x.a + y.a, x.b + y.b}; }
  friend DualNumber operator-(const DualNumber& x, const DualNumber& y) { return {x.a - y.a, x.b - y.b}; }
  friend DualNumber operator*(const DualNumber& x, const DualNumber& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const DualNumber&, const DualNumber&) = default;

  std::string to_string() const;
};

/// Inverse in k[eps]; DomainError when the real part vanishes.
DualNumber dual_invert(const DualNumber& x);

/// True iff (m11 + m22)^2 = 4 (m11 m22 - m12 m21).
bool repeated_eigenvalue_check(const KElem& m11, const KElem& m12, const KElem& m21, const KElem& m22);

/// Text form of a coefficient when it multiplies something else.
std::string coeff_factor_string(const KElem& c);

}  // namespace dvf
