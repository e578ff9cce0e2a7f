#include "ivkit_cli/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ivkit/cone.hpp"
#include "ivkit/error.hpp"
#include "ivkit/intpoly.hpp"
#include "ivkit/monoid_ring.hpp"
#include "ivkit/primes.hpp"
#include "ivkit/puiseux.hpp"

namespace ivkit::cli {

namespace {

using intpoly::IVPoly;
using intpoly::Site;

// A check either passes or explains itself.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& why) { return ok ? std::string() : why; }

std::string grams_atoms() {
  auto atoms = puiseux::atoms_up_to(puiseux::MonoidSpec::grams(), Integer(100));
  std::vector<Rational> want{make_rational(1, 3), make_rational(1, 10), make_rational(1, 28),
                             make_rational(1, 88)};
  return expect(atoms == want, "unexpected atom list");
}

std::string grams_accp() {
  auto spec = puiseux::MonoidSpec::grams();
  auto steps = puiseux::accp_chain_check(spec, 10);
  if (steps.size() != 11) return "wrong number of steps";
  for (const auto& s : steps) {
    if (!s.ascending || !s.strict) return "step " + std::to_string(s.n) + " fails";
    const Rational half = make_rational(1, pow_int(Integer(2), s.n + 1));
    if (s.certificate.weighted_sum(spec) != half) return "certificate does not sum to 1/2^(n+1)";
    if (s.certificate.combo.size() != 1 || s.certificate.combo.begin()->first != s.n + 1 ||
        s.certificate.combo.begin()->second != Integer(nth_odd_prime(s.n + 1))) {
      return "certificate is not p_{n+1} copies of generator n+1";
    }
  }
  return {};
}

std::string dyadic_valuation() {
  const bool ok = puiseux::dyadic_divides(make_rational(1, 4), make_rational(1, 2)) &&
                  !puiseux::dyadic_divides(make_rational(1, 2), make_rational(1, 4)) &&
                  puiseux::dyadic_divides(Rational(0), make_rational(3, 8));
  return expect(ok, "divisibility is not the order on dyadics");
}

QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), num(-30, 30), den(1, 12);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return QPoly(std::move(c));
}

std::string basis_roundtrip() {
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 1000; ++k) {
    QPoly f = random_poly(rng, 12);
    if (intpoly::from_binomial_basis(intpoly::to_binomial_basis(f)) != f) return "roundtrip changed " + f.pretty();
    bool by_values = true;
    for (int x = 0; x <= std::max(f.degree(), 0); ++x) by_values = by_values && is_integer(f(Rational(x)));
    if (by_values != intpoly::is_member(IVPoly(f))) return "membership disagrees on " + f.pretty();
  }
  return {};
}

std::string hf_identity() {
  const QPoly lhs = QPoly::binomial(6) * Rational(6);
  const QPoly rhs = QPoly::linear_root(Rational(5)) * QPoly::binomial(5);
  return expect(lhs == rhs, "2*3*C(x,6) != (x-5)*C(x,5)");
}

std::string hf_lengths() {
  IVPoly f(QPoly::binomial(6) * Rational(6));
  auto prof = intpoly::length_profile(f);
  if (!prof.lengths.count(2) || !prof.lengths.count(3)) return "lengths 2 and 3 not both present";
  return expect(prof.elasticity >= make_rational(3, 2) && prof.hfd_violation, "elasticity below 3/2");
}

std::string binomial_irreducible() {
  for (unsigned n = 1; n <= 8; ++n) {
    if (!intpoly::is_irreducible(IVPoly(QPoly::binomial(n)))) return "C(x," + std::to_string(n) + ") reducible";
  }
  return {};
}

QPoly lagrange(const std::vector<std::int64_t>& pts, const std::vector<Integer>& vals) {
  QPoly f;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    QPoly basis = QPoly::constant(Rational(vals[j]));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == j) continue;
      basis *= QPoly::linear_root(Rational(pts[i]));
      basis *= make_rational(1, pts[j] - pts[i]);
    }
    f += basis;
  }
  return f;
}

std::string pulling() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(1, 6), pt(-15, 15), val(-40, 40);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::int64_t> pts;
    const int n = size(rng);
    while (static_cast<int>(pts.size()) < n) {
      std::int64_t p = pt(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<Integer> vals;
    for (int i = 0; i < n; ++i) vals.emplace_back(val(rng));
    QPoly f = lagrange(pts, vals);
    if (!intpoly::is_member(IVPoly(f, Site::finite(pts)))) return "interpolant not integer-valued";
    if (f.is_zero()) continue;
    auto seq = intpoly::pulling_sequence(pts);
    if (!(f * Rational(seq.values[static_cast<std::size_t>(f.degree())])).has_integer_coeffs()) {
      return "d_deg * f not integral for " + f.pretty();
    }
  }
  return {};
}

std::string ckd_family() {
  for (int r = 2; r <= 20; ++r) {
    IVPoly f(QPoly{Rational(1), Rational(r)}, Site::finite({0, 1}));
    if (!intpoly::is_irreducible(f)) return std::to_string(r) + "x+1 reducible";
  }
  return {};
}

std::string furstenberg() {
  IVPoly x(QPoly{Rational(0), Rational(1)}, Site::finite({0}));
  auto d = intpoly::find_irreducible_divisor(x);
  return expect(d.poly() == QPoly::constant(Rational(2)), "expected the constant 2, got " + d.poly().pretty());
}

std::string nonatomic() {
  IVPoly x(QPoly{Rational(0), Rational(1)}, Site::finite({0}));
  auto w = intpoly::vanishing_nonatomic_witness(x);
  const bool ok = w.split_constant == 2 && w.cofactor_member &&
                  intpoly::is_member(w.split_cofactor) &&
                  w.split_cofactor.poly() * Rational(2) == x.poly();
  return expect(ok, "split 2*(x/2) invalid");
}

std::string cone_certificate(const cone::TPoly& target, const cone::ConeSpec& spec,
                             const std::vector<std::pair<std::string, Rational>>& want) {
  auto cert = cone::cone_member(target, spec);
  if (!cert) return "infeasible";
  if (cert->combination(spec) != target) return "certificate does not recombine";
  std::vector<std::pair<std::string, Rational>> got;
  for (const auto& [k, w] : cert->weights) got.emplace_back(spec.generators()[k].name(), w);
  std::sort(got.begin(), got.end());
  auto sorted = want;
  std::sort(sorted.begin(), sorted.end());
  return expect(got == sorted, "unexpected certificate");
}

std::string cone_one() {
  return cone_certificate(QPoly::constant(Rational(1)), cone::ConeSpec::truncated(8),
                          {{"a_1", Rational(1)}, {"t^2", Rational(1)}});
}

std::string cone_t() {
  return cone_certificate(cone::power(1), cone::ConeSpec::truncated(8).without("t^1"),
                          {{"b_1", Rational(1)}, {"t^2", Rational(1)}});
}

std::string cone_idf() {
  auto spec = cone::ConeSpec::truncated(8);
  for (unsigned i = 1; i <= 4; ++i) {
    auto rep = cone::idf_family_check(i, spec);
    if (!rep.passed()) return "family check fails at i=" + std::to_string(i);
  }
  return {};
}

std::string frobenius() {
  std::mt19937_64 rng(31337);
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring::CoefficientRing::prime_field(p);
    std::uniform_int_distribution<int> nterms(0, 6), num(0, 40), den(1, 12);
    std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
    for (int k = 0; k < 200; ++k) {
      std::vector<ring::Term> terms;
      const int n = nterms(rng);
      for (int i = 0; i < n; ++i) terms.push_back({Rational(coeff(rng)), make_rational(num(rng), den(rng))});
      auto f = ring::Element::canonicalize(r, terms);
      auto root = ring::pth_root(f, true);
      if (!root || ring::pow(*root, static_cast<unsigned>(p)) != f) return "root^p != f for " + f.pretty();
    }
  }
  return {};
}

struct Fact {
  const char* id;
  const char* statement;
  Check check;
};

const std::vector<Fact>& facts() {
  static const std::vector<Fact> list{
      {"grams-atoms", "Grams monoid atoms with denominator <= 100 are 1/3, 1/10, 1/28, 1/88", grams_atoms},
      {"grams-accp", "principal ideals 1/2^n + M ascend strictly for n = 0..10", grams_accp},
      {"dyadic-valuation", "divisibility among nonnegative dyadics is the usual order", dyadic_valuation},
      {"basis-roundtrip", "binomial-basis roundtrip and membership on 1000 random polynomials", basis_roundtrip},
      {"hf-identity", "2*3*C(x,6) = (x-5)*C(x,5)", hf_identity},
      {"hf-lengths", "6*C(x,6) has factorizations of lengths 2 and 3", hf_lengths},
      {"binomial-irreducible", "C(x,n) is irreducible in Int(Z) for n = 1..8", binomial_irreducible},
      {"pulling-sequence", "d_deg * f is integral for 200 interpolated f in Int(S,Z)", pulling},
      {"ckd-family", "r*x + 1 is irreducible in Int({0,1},Z) for r = 2..20", ckd_family},
      {"furstenberg-divisor", "x over S = {0} has the irreducible divisor 2", furstenberg},
      {"nonatomic-witness", "x over S = {0} splits as 2*(x/2) indefinitely", nonatomic},
      {"cone-1", "1 = a_1 + t^2 in the truncated cone", cone_one},
      {"cone-t", "t = b_1 + t^2 without using t itself", cone_t},
      {"cone-idf", "a_i, b_i have no nonzero common divisor for i = 1..4 (N = 8)", cone_idf},
      {"frobenius-root", "p-th roots over F_2 and F_3 raise back to f", frobenius},
  };
  return list;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

VerifyReport verify_all() {
  VerifyReport rep;
  for (const auto& fact : facts()) {
    VerifyEntry e{fact.id, fact.statement, false, 0, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.detail = fact.check();
    } catch (const std::exception& ex) {
      e.detail = std::string("exception: ") + ex.what();
    }
    e.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
                       .count();
    e.pass = e.detail.empty();
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"id", e.id}, {"statement", e.statement}, {"pass", e.pass}, {"elapsed_us", e.elapsed_us}};
    if (!e.pass) j["detail"] = e.detail;
    entries.push_back(std::move(j));
  }
  return {{"entries", std::move(entries)}, {"pass", r.pass()}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream t;
  for (const auto& e : r.entries) {
    t << (e.pass ? "PASS " : "FAIL ") << e.id << "  " << e.statement << "  (" << e.elapsed_us / 1000 << " ms)";
    if (!e.pass) t << "\n     " << e.detail;
    t << "\n";
  }
  t << (r.pass() ? "all facts verified\n" : "some facts FAILED\n");
  return t.str();
}

}  // namespace ivkit::cli
