#include "ivkit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ivkit/error.hpp"

namespace ivkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::NegativeInput: return "negative_input";
    case ErrorCode::InvalidSpec: return "invalid_spec";
    case ErrorCode::NotAMember: return "not_a_member";
    case ErrorCode::NotDyadic: return "not_dyadic";
    case ErrorCode::WrongMonoidKind: return "wrong_monoid_kind";
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::ZeroInput: return "zero_input";
    case ErrorCode::UnitInput: return "unit_input";
    case ErrorCode::DuplicateSitePoint: return "duplicate_site_point";
    case ErrorCode::EmptySite: return "empty_site";
    case ErrorCode::UnsupportedSiteDegree: return "unsupported_site_degree";
    case ErrorCode::NoWitness: return "no_witness";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::NotFound: return "not_found";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::MalformedRational, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view digits, Integer& out) {
  if (digits.empty()) return false;
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    return false;
  }
  return out.set_str(std::string(digits), 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  } else if (s.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  }
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, num)
                      : parse_integer(s.substr(0, slash), num) &&
                            parse_integer(s.substr(slash + 1), den);
  if (!ok) {
    throw Error(ErrorCode::MalformedRational,
                "not a rational number: '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw Error(ErrorCode::MalformedRational,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow_int(const Integer& base, unsigned exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, unsigned exp) {
  return make_rational(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::OutOfRange, "no modular inverse");
  }
  return r;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2;
    Integer y = 2;
    Integer d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      return Integer(r % n);
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  Integer rest = n / d;
  factor_into(rest, primes);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1U);
    }
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned two_adic_valuation(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

bool is_dyadic(const Rational& q) {
  const Integer& den = q.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

}  // namespace ivkit
