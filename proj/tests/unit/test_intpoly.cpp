#include <gtest/gtest.h>

#include <random>

#include "ivkit/error.hpp"
#include "ivkit/intpoly.hpp"
#include "oracles.hpp"

using namespace ivkit;
using namespace ivkit::intpoly;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }
QPoly X() { return QPoly{R(0), R(1)}; }
IVPoly Z(QPoly p) { return IVPoly(std::move(p)); }
IVPoly on(QPoly p, std::vector<std::int64_t> s) { return IVPoly(std::move(p), Site::finite(std::move(s))); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::NotFound;
}

std::vector<QPoly> polys(const std::vector<IVPoly>& v) {
  std::vector<QPoly> out;
  for (const auto& p : v) out.push_back(p.poly());
  return out;
}

QPoly from_z(const std::vector<Integer>& c) { return QPoly::from_integers(c); }

}  // namespace

TEST(Site, Validation) {
  EXPECT_EQ(code_of([] { Site::finite({}); }), ErrorCode::EmptySite);
  EXPECT_EQ(code_of([] { Site::finite({0, 1, 0}); }), ErrorCode::DuplicateSitePoint);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_member(Z(QPoly::binomial(2))));
  EXPECT_FALSE(is_member(Z(X() * R(1, 2))));
  EXPECT_TRUE(is_member(on(X() * R(1, 2), {0, 2})));
  EXPECT_FALSE(is_member(on(X() * R(1, 2), {0, 1})));
  EXPECT_TRUE(is_member(Z(QPoly())));
}

TEST(MembershipProperty, DeltaCriterionMatchesSampling) {
  std::mt19937_64 rng(31);
  const long dens[] = {1, 2, 3, 6, 24, 120, 720, 5040, 40320, 362880, 3628800};
  std::uniform_int_distribution<int> deg(0, 12), pick(0, 10), num(-50, 50);
  int members = 0;
  for (int i = 0; i < 600; ++i) {
    // Mix of binomial-basis combinations (often members) and raw rationals.
    QPoly f;
    const int d = deg(rng);
    if (i % 2 == 0) {
      std::vector<Rational> deltas(static_cast<std::size_t>(d) + 1);
      for (auto& x : deltas) x = make_rational(num(rng), i % 4 == 0 ? 1 : dens[pick(rng) % 3]);
      f = from_binomial_basis({deltas});
    } else {
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = make_rational(num(rng), dens[pick(rng)]);
      f = QPoly(c);
    }
    const bool m = is_member(Z(f));
    members += m;
    bool all = true;
    for (long k = -20; k <= 20; ++k) all = all && is_integer(f(Rational(k)));
    EXPECT_EQ(m, all) << f.pretty();
    EXPECT_EQ(m, oracle::integer_valued_by_sampling(f, -7));
  }
  EXPECT_GT(members, 100);
}

TEST(Basis, Examples) {
  EXPECT_EQ(to_binomial_basis(X() * X()).deltas, (std::vector<Rational>{R(0), R(1), R(2)}));
  EXPECT_EQ(to_binomial_basis(QPoly::constant(R(5, 7))).deltas, std::vector<Rational>{R(5, 7)});
  std::vector<Rational> e6(7, R(0));
  e6[6] = 1;
  EXPECT_EQ(to_binomial_basis(QPoly::binomial(6)).deltas, e6);
}

TEST(BasisProperty, Roundtrip) {
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    QPoly f = oracle::random_poly(rng, 12);
    EXPECT_EQ(from_binomial_basis(to_binomial_basis(f)), f);
    auto e = BinomialExpansion{std::vector<Rational>(static_cast<std::size_t>(i % 13) + 1)};
    for (auto& x : e.deltas) x = oracle::random_rational(rng, -20, 20, 9);
    // from_binomial_basis trims, so compare after stripping trailing zeros.
    auto back = to_binomial_basis(from_binomial_basis(e)).deltas;
    while (!e.deltas.empty() && e.deltas.back() == 0) e.deltas.pop_back();
    EXPECT_EQ(back, e.deltas);
  }
}

TEST(FixedDivisor, Examples) {
  EXPECT_EQ(fixed_divisor(from_z({0, -1, 1})), Integer(2));
  EXPECT_EQ(fixed_divisor(QPoly::binomial(6) * R(720)), Integer(720));
  EXPECT_EQ(fixed_divisor(QPoly::constant(R(7))), Integer(7));
  EXPECT_EQ(code_of([] { fixed_divisor(QPoly()); }), ErrorCode::ZeroInput);
  EXPECT_EQ(code_of([] { fixed_divisor(X() * R(1, 2)); }), ErrorCode::RingMismatch);
}

TEST(FixedDivisorProperty, MatchesWideSampling) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> deg(0, 6), c(-20, 20);
  for (int i = 0; i < 200; ++i) {
    std::vector<Integer> z(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : z) x = c(rng);
    if (z.back() == 0) z.back() = 1;
    QPoly f = from_z(z);
    Integer g = 0;
    for (long k = -30; k <= 30; ++k) g = gcd(g, f(Rational(k)).get_num());
    EXPECT_EQ(fixed_divisor(f), g) << f.pretty();
  }
}

TEST(Pulling, Examples) {
  std::vector<std::int64_t> p{0, 1, 2, 3};
  auto s = pulling_sequence(p);
  EXPECT_EQ(s.values, (std::vector<Integer>{1, 1, 2, 12}));
  EXPECT_EQ(code_of([] {
              std::vector<std::int64_t> d{0, 1, 0};
              pulling_sequence(d);
            }),
            ErrorCode::DuplicateSitePoint);
}

TEST(PullingProperty, ClearsDenominators) {
  std::mt19937_64 rng(200);
  std::uniform_int_distribution<int> size(1, 6), pt(-12, 12), val(-30, 30);
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
    ASSERT_TRUE(is_member(on(f, pts)));
    if (f.is_zero()) continue;
    auto seq = pulling_sequence(pts);
    EXPECT_TRUE((f * Rational(seq.values[static_cast<std::size_t>(f.degree())])).has_integer_coeffs());
  }
}

TEST(Divide, Examples) {
  auto q = divide(Z(QPoly::binomial(6) * R(6)), Z(QPoly{R(-5), R(1)}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->poly(), QPoly::binomial(5));
  auto f = Z(from_z({0, -1, 1}));
  EXPECT_EQ(divide(f, Z(QPoly::constant(R(1))))->poly(), f.poly());
  EXPECT_EQ(divide(f, Z(QPoly::constant(R(2))))->poly(), QPoly::binomial(2));
  EXPECT_FALSE(divide(f, Z(QPoly::constant(R(4)))));
  EXPECT_EQ(code_of([&] { divide(f, Z(QPoly())); }), ErrorCode::ZeroInput);
}

TEST(Divisors, Examples) {
  auto d = divisors(Z(from_z({0, -1, 1})));
  std::vector<QPoly> want{QPoly::constant(R(1)), QPoly::constant(R(2)), QPoly{R(-1), R(1)}, X(),
                          QPoly::binomial(2), from_z({0, -1, 1})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(polys(d), want);
  EXPECT_EQ(polys(divisors(Z(QPoly::constant(R(1))))), std::vector<QPoly>{QPoly::constant(R(1))});
  auto big = polys(divisors(Z(QPoly::binomial(6) * R(6))));
  for (const QPoly& p : {QPoly::constant(R(2)), QPoly::constant(R(3)), QPoly{R(-5), R(1)}, QPoly::binomial(5),
                         QPoly::binomial(6)}) {
    EXPECT_NE(std::find(big.begin(), big.end(), p), big.end()) << p.pretty();
  }
  EXPECT_EQ(code_of([] { divisors(Z(X() * R(1, 2))); }), ErrorCode::NotAMember);
  EXPECT_EQ(code_of([] { divisors(on(X(), {0})); }), ErrorCode::UnsupportedSiteDegree);
}

TEST(DivisorsProperty, SoundAndNonAssociate) {
  for (const auto& z : oracle::divisor_corpus()) {
    IVPoly f = Z(from_z(z));
    auto ds = divisors(f);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      EXPECT_TRUE(divide(f, ds[i])) << ds[i].poly().pretty();
      EXPECT_GT(ds[i].poly().leading(), 0);
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        EXPECT_NE(ds[i].poly(), ds[j].poly());
        EXPECT_NE(ds[i].poly(), -ds[j].poly());
      }
    }
  }
}

TEST(Irreducible, Examples) {
  for (unsigned n = 1; n <= 8; ++n) EXPECT_TRUE(is_irreducible(Z(QPoly::binomial(n)))) << n;
  EXPECT_FALSE(is_irreducible(Z(X() * X())));
  EXPECT_TRUE(is_irreducible(on(QPoly{R(1), R(6)}, {0, 1})));
  EXPECT_TRUE(is_irreducible(Z(QPoly::constant(R(7)))));
  EXPECT_FALSE(is_irreducible(Z(QPoly::constant(R(6)))));
  EXPECT_FALSE(is_irreducible(on(QPoly{R(2), R(2)}, {0, 1})));  // 2(x + 1)
  EXPECT_FALSE(is_irreducible(on(X(), {0})));
  EXPECT_TRUE(is_irreducible(on(X(), {0, 1})));
  EXPECT_EQ(code_of([] { is_irreducible(Z(QPoly::constant(R(-1)))); }), ErrorCode::UnitInput);
  EXPECT_EQ(code_of([] { is_irreducible(Z(QPoly())); }), ErrorCode::ZeroInput);
  EXPECT_EQ(code_of([] { is_irreducible(on(X() * X(), {0, 1})); }), ErrorCode::UnsupportedSiteDegree);
}

TEST(Irreducible, CkdFamily) {
  for (long r = 2; r <= 20; ++r) EXPECT_TRUE(is_irreducible(on(QPoly{R(1), R(r)}, {0, 1}))) << r;
  // shifted variant r x - r s + 1 at s = 1
  EXPECT_TRUE(is_irreducible(on(QPoly{R(-5), R(6)}, {0, 1})));
}

TEST(Factorizations, Examples) {
  auto fs = factorizations(Z(from_z({0, -1, 1})));
  ASSERT_EQ(fs.size(), 2u);
  for (const auto& f : fs) EXPECT_EQ(f.length(), 2u);
  auto hf = factorizations(Z(QPoly::binomial(6) * R(6)));
  std::set<std::size_t> lengths;
  for (const auto& f : hf) lengths.insert(f.length());
  EXPECT_TRUE(lengths.count(2) && lengths.count(3));
  auto irr = factorizations(Z(QPoly::binomial(4)));
  ASSERT_EQ(irr.size(), 1u);
  EXPECT_EQ(irr[0].parts.size(), 1u);
}

TEST(FactorizationsProperty, PartsMultiplyBackAndAreIrreducible) {
  auto corpus = oracle::divisor_corpus();
  for (std::size_t k = 0; k < corpus.size(); k += 3) {
    IVPoly f = Z(from_z(corpus[k]));
    if (f.degree() == 0 && abs(f.poly().leading()) == 1) continue;
    for (const auto& fz : factorizations(f)) {
      QPoly prod = QPoly::constant(R(1));
      for (const auto& p : fz.parts) {
        prod *= p.poly();
        EXPECT_TRUE(is_irreducible(p)) << p.poly().pretty();
      }
      EXPECT_TRUE(prod == f.poly() || prod == -f.poly()) << f.poly().pretty();
    }
  }
}

TEST(LengthProfile, Examples) {
  auto hf = length_profile(Z(QPoly::binomial(6) * R(6)));
  EXPECT_GE(hf.elasticity, R(3, 2));
  EXPECT_TRUE(hf.hfd_violation);
  auto sq = length_profile(Z(from_z({0, -1, 1})));
  EXPECT_EQ(sq.lengths, (std::set<std::size_t>{2}));
  EXPECT_EQ(sq.elasticity, R(1));
  auto seven = length_profile(Z(QPoly::constant(R(7))));
  EXPECT_EQ(seven.lengths, (std::set<std::size_t>{1}));
  EXPECT_FALSE(seven.hfd_violation);
}

TEST(Furstenberg, Examples) {
  EXPECT_EQ(find_irreducible_divisor(on(X(), {0})).poly(), QPoly::constant(R(2)));
  auto d = find_irreducible_divisor(Z(QPoly::binomial(6) * R(6)));
  EXPECT_TRUE(is_irreducible(d));
  EXPECT_TRUE(divide(Z(QPoly::binomial(6) * R(6)), d));
  EXPECT_EQ(find_irreducible_divisor(Z(QPoly::constant(R(7)))).poly(), QPoly::constant(R(7)));
  auto lin = find_irreducible_divisor(on(QPoly{R(1), R(6)}, {0, 1}));
  EXPECT_EQ(lin.poly(), (QPoly{R(1), R(6)}));
  EXPECT_EQ(code_of([] { find_irreducible_divisor(Z(QPoly::constant(R(1)))); }), ErrorCode::UnitInput);
}

TEST(Nonatomic, Examples) {
  auto w = vanishing_nonatomic_witness(on(X(), {0}));
  EXPECT_EQ(w.vanishing_points, std::vector<std::int64_t>{0});
  EXPECT_EQ(w.split_constant, Integer(2));
  EXPECT_EQ(w.split_cofactor.poly(), X() * R(1, 2));
  EXPECT_TRUE(w.cofactor_member);
  EXPECT_TRUE(is_member(w.split_cofactor));
  EXPECT_EQ(code_of([] { vanishing_nonatomic_witness(on(QPoly{R(-1), R(1)}, {0})); }), ErrorCode::NoWitness);
  // x(x-1) = x * (x-1) with both factors irreducible on {0,1}: no witness.
  EXPECT_EQ(code_of([] { vanishing_nonatomic_witness(on(from_z({0, -1, 1}), {0, 1})); }), ErrorCode::NoWitness);
  EXPECT_TRUE(is_irreducible(on(X(), {0, 1})));
  EXPECT_TRUE(is_irreducible(on(QPoly{R(-1), R(1)}, {0, 1})));
  auto w3 = vanishing_nonatomic_witness(on(X() * QPoly{R(3), R(1)}, {0}));
  EXPECT_EQ(w3.blocking_factor.poly(), X());
  EXPECT_TRUE(w3.cofactor_member);
}
