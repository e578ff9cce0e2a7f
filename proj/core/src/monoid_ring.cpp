#include "ivkit/monoid_ring.hpp"

#include <algorithm>
#include <sstream>

#include "ivkit/error.hpp"
#include "ivkit/primes.hpp"

namespace ivkit::ring {

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidSpec, "F_p needs a word-size prime p, got " + std::to_string(p));
  }
  return CoefficientRing(RingKind::PrimeField, p);
}

std::string CoefficientRing::tag() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F_" + std::to_string(p_);
  }
  return "?";
}

CoefficientRing CoefficientRing::from_tag(const std::string& tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag.size() > 2 && tag.rfind("F_", 0) == 0) {
    const std::string digits = tag.substr(2);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 11) {
      return prime_field(std::stoull(digits));
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown coefficient ring '" + tag + "'");
}

Rational CoefficientRing::reduce(const Rational& q) const {
  switch (kind_) {
    case RingKind::Rationals:
      return q;
    case RingKind::Integers:
      if (!is_integer(q)) throw Error(ErrorCode::RingMismatch, to_string(q) + " is not an integer");
      return q;
    case RingKind::PrimeField: {
      const Integer p(static_cast<unsigned long>(p_));
      if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()) != 0) {
        throw Error(ErrorCode::RingMismatch, to_string(q) + " has no image in " + tag());
      }
      return Rational(mod_floor(q.get_num() * inverse_mod(mod_floor(q.get_den(), p), p), p));
    }
  }
  return q;
}

bool CoefficientRing::is_unit(const Rational& c) const {
  switch (kind_) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return c != 0;
    case RingKind::Integers:
      return c == 1 || c == -1;
  }
  return false;
}

Element Element::canonicalize(const CoefficientRing& ring, std::vector<Term> raw) {
  for (const auto& t : raw) {
    if (t.exponent < 0) {
      throw Error(ErrorCode::NegativeInput, "negative exponent " + to_string(t.exponent));
    }
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  Element out(ring);
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  for (auto& t : out.terms_) t.coeff = ring.reduce(t.coeff);
  std::erase_if(out.terms_, [](const Term& t) { return t.coeff == 0; });
  return out;
}

Element Element::one(const CoefficientRing& ring) { return monomial(ring, 1, 0); }

Element Element::monomial(const CoefficientRing& ring, const Rational& coeff,
                          const Rational& exponent) {
  return canonicalize(ring, {{coeff, exponent}});
}

std::string Element::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, e] = terms_[i];
    if (i) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Rational mag = abs(c);
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "y";
    if (e != 1) out << "^(" << e.get_str() << ")";
  }
  return out.str();
}

namespace {

void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "coefficient rings differ: " + a.ring().tag() + " vs " + b.ring().tag());
  }
}

}  // namespace

Element add(const Element& a, const Element& b) {
  require_same_ring(a, b);
  std::vector<Term> raw = a.terms();
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return Element::canonicalize(a.ring(), std::move(raw));
}

Element negate(const Element& a) {
  std::vector<Term> raw = a.terms();
  for (auto& t : raw) t.coeff = -t.coeff;
  return Element::canonicalize(a.ring(), std::move(raw));
}

Element mul(const Element& a, const Element& b) {
  require_same_ring(a, b);
  std::vector<Term> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) raw.push_back({s.coeff * t.coeff, s.exponent + t.exponent});
  }
  return Element::canonicalize(a.ring(), std::move(raw));
}

Element pow(const Element& a, unsigned n) {
  Element result = Element::one(a.ring());
  Element base = a;
  while (n) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n) base = mul(base, base);
  }
  return result;
}

bool is_unit(const Element& a, bool monoid_reduced) {
  if (a.terms().size() != 1) return false;
  const auto& t = a.terms().front();
  if (!a.ring().is_unit(t.coeff)) return false;
  return !monoid_reduced || t.exponent == 0;
}

Rational nu_bar(const Element& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "nu_bar of the zero element");
  std::optional<Rational> best;
  for (const auto& t : f.terms()) {
    auto d = puiseux::grams_decompose(t.exponent);
    if (!d) {
      throw Error(ErrorCode::NotAMember,
                  "exponent " + to_string(t.exponent) + " is not in the Grams monoid");
    }
    if (!best || d->nu < *best) best = d->nu;
  }
  return *best;
}

std::optional<Element> pth_root(const Element& f, bool cone_closed) {
  if (f.ring().kind() != RingKind::PrimeField) {
    throw Error(ErrorCode::RingMismatch, "p-th roots need coefficients in F_p, got " + f.ring().tag());
  }
  if (!cone_closed) return std::nullopt;
  const Rational p(static_cast<unsigned long>(f.ring().characteristic()));
  std::vector<Term> raw;
  raw.reserve(f.terms().size());
  // Over the prime field c^p = c, so the coefficient root is c itself.
  for (const auto& t : f.terms()) raw.push_back({t.coeff, t.exponent / p});
  return Element::canonicalize(f.ring(), std::move(raw));
}

bool monomial_divides(const Rational& c, const Element& f, const puiseux::MonoidSpec& spec) {
  if (c < 0) throw Error(ErrorCode::NegativeInput, "negative exponent " + to_string(c));
  for (const auto& t : f.terms()) {
    Rational rest = t.exponent - c;
    if (rest < 0 || !puiseux::membership(spec, rest).is_member()) return false;
  }
  return true;
}

}  // namespace ivkit::ring
