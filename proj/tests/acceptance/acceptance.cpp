// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "ivkit/cone.hpp"
#include "ivkit/intpoly.hpp"
#include "ivkit/monoid_ring.hpp"
#include "ivkit/primes.hpp"
#include "ivkit/puiseux.hpp"
#include "oracles.hpp"

using namespace ivkit;
using intpoly::IVPoly;
using intpoly::Site;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> body;
};

Outcome grams_atoms() {
  Outcome o;
  auto atoms = puiseux::atoms_up_to(puiseux::MonoidSpec::grams(), Integer(100));
  if (atoms != std::vector<Rational>{R(1, 3), R(1, 10), R(1, 28), R(1, 88)}) o.fail("atom list differs");
  return o;
}

Outcome grams_accp() {
  Outcome o;
  auto spec = puiseux::MonoidSpec::grams();
  auto steps = puiseux::accp_chain_check(spec, 10);
  if (steps.size() != 11) o.fail("expected steps n = 0..10");
  for (const auto& s : steps) {
    if (!s.ascending || !s.strict) o.fail("step " + std::to_string(s.n));
    const auto& c = s.certificate.combo;
    const bool shape = c.size() == 1 && c.begin()->first == s.n + 1 && c.begin()->second == Integer(nth_odd_prime(s.n + 1));
    const Rational target = make_rational(1, pow_int(Integer(2), static_cast<unsigned>(s.n + 1)));
    if (!shape || s.certificate.weighted_sum(spec) != target) o.fail("certificate at n = " + std::to_string(s.n));
  }
  return o;
}

Outcome basis_roundtrip() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    QPoly f = oracle::random_poly(rng, 12);
    if (intpoly::from_binomial_basis(intpoly::to_binomial_basis(f)) != f) o.fail("roundtrip " + f.pretty());
    if (intpoly::is_member(IVPoly(f)) != oracle::integer_valued_by_sampling(f)) o.fail("membership " + f.pretty());
  }
  // Integer-valued instances, so both verdicts get exercised.
  std::uniform_int_distribution<int> num(-40, 40);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> deltas(static_cast<std::size_t>(i % 13) + 1);
    for (auto& d : deltas) d = num(rng);
    QPoly f = intpoly::from_binomial_basis({deltas});
    if (!intpoly::is_member(IVPoly(f)) || !oracle::integer_valued_by_sampling(f)) o.fail("member " + f.pretty());
  }
  return o;
}

Outcome non_hfd() {
  Outcome o;
  const QPoly six = QPoly::binomial(6) * R(6);
  if (six != QPoly{R(-5), R(1)} * QPoly::binomial(5)) o.fail("identity 2*3*C(x,6) = (x-5)*C(x,5)");
  auto fs = intpoly::factorizations(IVPoly(six));
  bool two = false, three = false;
  for (const auto& f : fs) {
    if (f.parts.size() == 2 && f.parts[0].poly() == QPoly{R(-5), R(1)} && f.parts[1].poly() == QPoly::binomial(5)) two = true;
    if (f.parts.size() == 3 && f.parts[0].poly() == QPoly::constant(R(2)) &&
        f.parts[1].poly() == QPoly::constant(R(3)) && f.parts[2].poly() == QPoly::binomial(6)) {
      three = true;
    }
  }
  if (!two) o.fail("no (x-5)*C(x,5) factorization");
  if (!three) o.fail("no 2*3*C(x,6) factorization");
  auto prof = intpoly::length_profile(IVPoly(six));
  if (prof.elasticity < R(3, 2)) o.fail("elasticity " + to_string(prof.elasticity));
  o.note = std::to_string(fs.size()) + " factorizations, elasticity " + to_string(prof.elasticity);
  return o;
}

Outcome binomial_irreducible() {
  Outcome o;
  for (unsigned n = 1; n <= 8; ++n) {
    if (!intpoly::is_irreducible(IVPoly(QPoly::binomial(n)))) o.fail("C(x," + std::to_string(n) + ")");
  }
  return o;
}

Outcome divisor_oracle() {
  Outcome o;
  auto corpus = oracle::divisor_corpus();
  if (corpus.size() != 50) o.fail("corpus size");
  std::size_t total = 0;
  for (const auto& z : corpus) {
    const QPoly f = QPoly::from_integers(z);
    std::vector<QPoly> got;
    for (const auto& d : intpoly::divisors(IVPoly(f))) got.push_back(d.poly());
    auto want = oracle::int_divisors_brute(z);
    total += want.size();
    if (got != want) o.fail("mismatch on " + f.pretty());
  }
  if (o.ok) o.note = std::to_string(total) + " divisors across 50 polynomials";
  return o;
}

Outcome pulling() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 6), pt(-20, 20), val(-50, 50);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::int64_t> pts;
    const int n = size(rng);
    while (static_cast<int>(pts.size()) < n) {
      std::int64_t p = pt(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<Integer> vals;
    for (int j = 0; j < n; ++j) vals.emplace_back(val(rng));
    QPoly f = oracle::lagrange(pts, vals);
    if (!intpoly::is_member(IVPoly(f, Site::finite(pts)))) o.fail("interpolant not in Int(S,Z)");
    if (f.is_zero()) continue;
    auto seq = intpoly::pulling_sequence(pts);
    if (!(f * Rational(seq.values[static_cast<std::size_t>(f.degree())])).has_integer_coeffs()) o.fail(f.pretty());
  }
  return o;
}

Outcome ckd_family() {
  Outcome o;
  for (long r = 2; r <= 20; ++r) {
    if (!intpoly::is_irreducible(IVPoly(QPoly{R(1), R(r)}, Site::finite({0, 1})))) o.fail("r = " + std::to_string(r));
  }
  return o;
}

Outcome furstenberg() {
  Outcome o;
  IVPoly x(QPoly{R(0), R(1)}, Site::finite({0}));
  if (intpoly::find_irreducible_divisor(x).poly() != QPoly::constant(R(2))) o.fail("irreducible divisor is not 2");
  auto w = intpoly::vanishing_nonatomic_witness(x);
  if (w.split_constant != 2) o.fail("split constant");
  if (w.split_cofactor.poly() * R(2) != x.poly()) o.fail("split does not multiply back");
  if (!w.cofactor_member || !intpoly::is_member(w.split_cofactor)) o.fail("x/2 not in Int({0},Z)");
  return o;
}

Outcome cone_verifier() {
  Outcome o;
  auto spec = cone::ConeSpec::truncated(8);
  auto name_weights = [](const cone::ConeCertificate& c, const cone::ConeSpec& s) {
    std::map<std::string, Rational> m;
    for (const auto& [k, w] : c.weights) m[s.generators()[k].name()] = w;
    return m;
  };
  auto one = cone::cone_member(QPoly::constant(R(1)), spec);
  if (!one || name_weights(*one, spec) != std::map<std::string, Rational>{{"a_1", R(1)}, {"t^2", R(1)}}) {
    o.fail("1 = a_1 + t^2");
  }
  auto no_t = spec.without("t^1");
  auto t = cone::cone_member(cone::power(1), no_t);
  if (!t || name_weights(*t, no_t) != std::map<std::string, Rational>{{"b_1", R(1)}, {"t^2", R(1)}}) {
    o.fail("t = b_1 + t^2");
  }
  if (cone::cone_member_fm(QPoly::constant(R(1)), spec) != one.has_value()) o.fail("FM disagrees on 1");
  if (cone::cone_member_fm(cone::power(1), no_t) != t.has_value()) o.fail("FM disagrees on t");
  for (unsigned i = 1; i <= 4; ++i) {
    if (cone::common_divisor_mass(i, spec) != 0) o.fail("mass at i = " + std::to_string(i));
    auto rep = cone::idf_family_check(i, spec);
    if (!rep.passed()) o.fail("family check at i = " + std::to_string(i));
    if (!rep.fm_agrees) o.fail("FM disagrees at i = " + std::to_string(i));
  }
  return o;
}

Outcome frobenius() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2u, 3u}) {
    auto r = ring::CoefficientRing::prime_field(p);
    std::uniform_int_distribution<int> n(0, 7), num(0, 60), den(1, 24);
    std::uniform_int_distribution<std::uint64_t> c(1, p - 1);
    for (int i = 0; i < 200; ++i) {
      std::vector<ring::Term> terms;
      const int k = n(rng);
      for (int j = 0; j < k; ++j) terms.push_back({Rational(c(rng)), make_rational(num(rng), den(rng))});
      auto f = ring::Element::canonicalize(r, terms);
      auto g = ring::pth_root(f, true);
      if (!g || ring::pow(*g, static_cast<unsigned>(p)) != f) o.fail("root^p != f over F_" + std::to_string(p));
    }
  }
  return o;
}

Outcome ffd_stability() {
  Outcome o;
  for (const auto& z : oracle::divisor_corpus()) {
    IVPoly f(QPoly::from_integers(z));
    const auto d1 = intpoly::divisors(f).size();
    const auto d2 = intpoly::divisors(f, {2}).size();
    if (d1 != d2) o.fail("divisor count changes for " + f.poly().pretty());
    if (f.degree() == 0 && abs(f.poly().leading()) == 1) continue;
    const auto z1 = intpoly::factorizations(f).size();
    const auto z2 = intpoly::factorizations(f, {2}).size();
    if (z1 != z2) o.fail("factorization count changes for " + f.poly().pretty());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Grams atoms up to denominator 100", 1.0, grams_atoms},
      {2, "Grams ACCP chain through n = 10", 1.0, grams_accp},
      {3, "binomial-basis roundtrip on 1000 polynomials", 0, basis_roundtrip},
      {4, "6*C(x,6) has lengths 2 and 3", 30.0, non_hfd},
      {5, "C(x,n) irreducible for n = 1..8", 120.0, binomial_irreducible},
      {6, "divisors agree with brute force on the corpus", 0, divisor_oracle},
      {7, "pulling sequence clears denominators", 0, pulling},
      {8, "r*x + 1 irreducible on {0,1} for r = 2..20", 0, ckd_family},
      {9, "x over S = {0}: divisor 2 and non-atomic split", 0, furstenberg},
      {10, "cone certificates and common-divisor infeasibility", 10.0, cone_verifier},
      {11, "p-th roots over F_2 and F_3", 0, frobenius},
      {12, "divisor and factorization counts stable under doubled bounds", 0, ffd_stability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.fail("runtime over " + std::to_string(c.limit_s) + " s");
    failed += !o.ok;
    std::printf("criterion %2d: %s  %s  (%.3f s%s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
                o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
