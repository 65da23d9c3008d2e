#include "dvf/ordgroup.hpp"

#include <cctype>
#include <ostream>

namespace dvf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "structural";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Precision: return "precision";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::UndeclaredGenerator: return "undeclared-generator";
    case ErrorCode::SoundnessAlarm: return "soundness-alarm";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

GroupElem::GroupElem(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

GroupElem GroupElem::unit(std::size_t rank, std::size_t i) {
  GroupElem e = zero(rank);
  e.coords_.at(i) = 1;
  return e;
}

bool GroupElem::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

int GroupElem::sign() const {
  for (const auto& c : coords_)
    if (int s = sgn(c); s != 0) return s;
  return 0;
}

GroupElem GroupElem::operator-() const {
  GroupElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

static void require_same_rank(const GroupElem& a, const GroupElem& b) {
  if (a.rank() != b.rank())
    throw StructuralError("group elements of rank " + std::to_string(a.rank()) + " and " +
                          std::to_string(b.rank()) + " cannot be combined");
}

GroupElem& GroupElem::operator+=(const GroupElem& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElem& GroupElem::operator-=(const GroupElem& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GroupElem operator*(const Rational& s, const GroupElem& a) {
  GroupElem r = a;
  for (auto& c : r.coords_) c *= s;
  return r;
}

bool operator==(const GroupElem& a, const GroupElem& b) { return compare(a, b) == 0; }

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) { return compare(a, b); }

std::strong_ordering compare(const GroupElem& a, const GroupElem& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

const GroupElem& ExtGroupElem::value() const {
  if (!value_) throw DomainError("+inf has no finite value");
  return *value_;
}

ExtGroupElem operator+(const ExtGroupElem& a, const ExtGroupElem& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtGroupElem::infinity();
  return ExtGroupElem(*a.value_ + *b.value_);
}

bool operator==(const ExtGroupElem& a, const ExtGroupElem& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ExtGroupElem& a, const ExtGroupElem& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return compare(*a.value_, *b.value_);
}

bool ConvexSubgroup::contains(const GroupElem& g) const {
  if (cut > g.rank()) throw StructuralError("convex subgroup cut exceeds rank");
  for (std::size_t i = 0; i < cut; ++i)
    if (sgn(g[i]) != 0) return false;
  return true;
}

ValueGroupDesc::ValueGroupDesc(std::vector<CoordKind> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.empty()) throw StructuralError("value group rank must be at least 1");
}

ValueGroupDesc ValueGroupDesc::integers(std::size_t rank) {
  return ValueGroupDesc(std::vector<CoordKind>(rank, CoordKind::Integers));
}

ValueGroupDesc ValueGroupDesc::rationals(std::size_t rank) {
  return ValueGroupDesc(std::vector<CoordKind>(rank, CoordKind::Rationals));
}

static bool fits(CoordKind kind, const Rational& q) {
  return kind == CoordKind::Rationals || q.get_den() == 1;
}

bool ValueGroupDesc::contains(const GroupElem& g) const {
  if (g.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!fits(kinds_[i], g[i])) return false;
  return true;
}

GroupElem ValueGroupDesc::make(std::vector<Rational> coords) const {
  GroupElem g(std::move(coords));
  if (g.rank() != rank())
    throw StructuralError("expected " + std::to_string(rank()) + " coordinates, got " +
                          std::to_string(g.rank()));
  if (!contains(g)) throw DomainError("element " + to_string(g) + " is not in the value group");
  return g;
}

ValueGroupDesc ValueGroupDesc::quotient(const ConvexSubgroup& delta) const {
  if (delta.cut == 0 || delta.cut > rank())
    throw StructuralError("quotient descriptor needs 1 <= cut <= rank");
  return ValueGroupDesc(std::vector<CoordKind>(kinds_.begin(), kinds_.begin() + delta.cut));
}

bool is_z_less(const ValueGroupDesc& g) { return g.kinds().back() == CoordKind::Rationals; }

GroupElem coarsen(const GroupElem& a, const ConvexSubgroup& delta) {
  if (delta.cut > a.rank()) throw StructuralError("convex subgroup cut exceeds rank");
  return GroupElem(std::vector<Rational>(a.coords().begin(), a.coords().begin() + delta.cut));
}

namespace {

Rational floor_q(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational ceil_q(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

// Search for coordinates i.. of an element strictly inside the lex interval.
// A null bound is inactive (the prefix already left it behind).
std::optional<std::vector<Rational>> between_from(const ValueGroupDesc& g, std::size_t i,
                                                  const std::vector<Rational>* lo,
                                                  const std::vector<Rational>* hi) {
  const std::size_t k = g.rank();
  if (i == k) {
    if (lo || hi) return std::nullopt;
    return std::vector<Rational>{};
  }
  const CoordKind kind = g.kind(i);
  std::optional<Rational> pick;
  if (lo && hi) {
    const Rational& l = (*lo)[i];
    const Rational& h = (*hi)[i];
    if (l > h) return std::nullopt;
    if (l < h) {
      Rational mid = (l + h) / 2;
      if (kind == CoordKind::Rationals) {
        pick = mid;
      } else {
        Rational f = floor_q(mid), c = ceil_q(mid);
        if (l < f && f < h)
          pick = f;
        else if (l < c && c < h)
          pick = c;
      }
    }
  } else if (lo) {
    pick = kind == CoordKind::Rationals ? Rational((*lo)[i] + 1) : Rational(floor_q((*lo)[i]) + 1);
  } else if (hi) {
    pick = kind == CoordKind::Rationals ? Rational((*hi)[i] - 1) : Rational(ceil_q((*hi)[i]) - 1);
  } else {
    pick = Rational(0);
  }
  if (pick) {
    std::vector<Rational> out(k - i);
    out[0] = *pick;
    return out;
  }
  auto prepend = [](Rational head, std::vector<Rational> tail) {
    tail.insert(tail.begin(), std::move(head));
    return tail;
  };
  if (lo && fits(kind, (*lo)[i])) {
    const bool hi_tied = hi && (*hi)[i] == (*lo)[i];
    if (auto rest = between_from(g, i + 1, lo, hi_tied ? hi : nullptr))
      return prepend((*lo)[i], std::move(*rest));
  }
  if (hi && fits(kind, (*hi)[i])) {
    const bool lo_tied = lo && (*lo)[i] == (*hi)[i];
    if (!lo_tied) {
      if (auto rest = between_from(g, i + 1, nullptr, hi)) return prepend((*hi)[i], std::move(*rest));
    }
  }
  return std::nullopt;
}

}  // namespace

GroupElem strict_between(const ValueGroupDesc& g, const GroupElem& a, const Rational& p,
                         const Rational& q) {
  if (a.rank() != g.rank()) throw StructuralError("element rank does not match descriptor");
  if (!is_z_less(g)) throw UnsupportedError("strict_between needs a Z-less value group");
  if (a.sign() <= 0) throw DomainError("strict_between needs a > 0");
  if (sgn(p) < 0 || !(p < q)) throw DomainError("strict_between needs 0 <= p < q");
  const GroupElem lo = p * a;
  const GroupElem hi = q * a;
  auto found = between_from(g, 0, &lo.coords(), &hi.coords());
  if (!found) throw DomainError("open interval (" + to_string(lo) + ", " + to_string(hi) +
                                ") contains no group element");
  return GroupElem(std::move(*found));
}

std::string to_string(const GroupElem& g) {
  if (g.rank() == 1) return g[0].get_str();
  std::string out = "[";
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i) out += ';';
    out += g[i].get_str();
  }
  return out + "]";
}

std::string to_string(const ExtGroupElem& g) {
  return g.is_infinite() ? std::string("inf") : to_string(g.value());
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(i, end - i));
  std::size_t pos = 0;
  if (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) ++pos;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < body.size() && std::isdigit(static_cast<unsigned char>(body[p]))) ++p;
    return p > start;
  };
  if (!digits(pos)) throw ParseError("expected a rational number", i + pos);
  if (pos < body.size() && body[pos] == '/') {
    ++pos;
    if (!digits(pos)) throw ParseError("expected a denominator", i + pos);
  }
  if (pos != body.size()) throw ParseError("trailing characters after rational", i + pos);
  if (body[0] == '+') body.erase(0, 1);
  Rational q(body, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator", i);
  q.canonicalize();
  return q;
}

GroupElem parse_group_elem(std::string_view text, std::size_t rank) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) throw ParseError("unterminated '['", text.size());
    for (std::size_t j = close + 1; j < text.size(); ++j)
      if (!std::isspace(static_cast<unsigned char>(text[j])))
        throw ParseError("trailing characters after ']'", j);
    std::vector<Rational> coords;
    std::size_t start = i + 1;
    while (true) {
      std::size_t sep = text.find(';', start);
      std::size_t stop = (sep == std::string_view::npos || sep > close) ? close : sep;
      try {
        coords.push_back(parse_rational(text.substr(start, stop - start)));
      } catch (const ParseError& e) {
        throw ParseError("bad coordinate", start + (e.offset() < stop - start ? e.offset() : 0));
      }
      if (stop == close) break;
      start = stop + 1;
    }
    if (rank != 0 && coords.size() != rank)
      throw StructuralError("expected " + std::to_string(rank) + " coordinates in " +
                            std::string(text));
    return GroupElem(std::move(coords));
  }
  const std::size_t k = rank == 0 ? 1 : rank;
  GroupElem g = GroupElem::zero(k);
  std::vector<Rational> coords = g.coords();
  coords[k - 1] = parse_rational(text);
  return GroupElem(std::move(coords));
}

std::ostream& operator<<(std::ostream& os, const GroupElem& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, const ExtGroupElem& g) { return os << to_string(g); }

}  // namespace dvf
