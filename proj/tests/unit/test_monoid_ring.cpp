#include <gtest/gtest.h>

#include <random>

#include "ivkit/error.hpp"
#include "ivkit/monoid_ring.hpp"
#include "oracles.hpp"

using namespace ivkit;
using namespace ivkit::ring;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

Element el(const CoefficientRing& r, std::vector<Term> t) { return Element::canonicalize(r, std::move(t)); }

Element random_element(std::mt19937_64& rng, const CoefficientRing& r, int max_terms, int den_hi) {
  std::uniform_int_distribution<int> n(0, max_terms), c(-9, 9), e(0, 48), d(1, den_hi);
  std::vector<Term> t;
  const int k = n(rng);
  for (int i = 0; i < k; ++i) {
    Rational coeff = r.kind() == RingKind::Rationals ? make_rational(c(rng), d(rng)) : Rational(c(rng));
    t.push_back({coeff, make_rational(e(rng), d(rng))});
  }
  return el(r, t);
}

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

}  // namespace

TEST(Canonical, Examples) {
  EXPECT_TRUE(el(CoefficientRing::prime_field(2), {{R(1), R(1, 2)}, {R(1), R(1, 2)}}).is_zero());
  auto z = el(CoefficientRing::integers(), {{R(2), R(1, 3)}, {R(3), R(1)}});
  EXPECT_EQ(z.terms(), (std::vector<Term>{{R(3), R(1)}, {R(2), R(1, 3)}}));
  EXPECT_TRUE(el(CoefficientRing::rationals(), {{R(1), R(1, 2)}, {R(-1), R(1, 2)}}).is_zero());
  EXPECT_EQ(code_of([] { el(CoefficientRing::rationals(), {{R(1), R(-1, 2)}}); }), ErrorCode::NegativeInput);
  EXPECT_EQ(code_of([] { el(CoefficientRing::integers(), {{R(1, 2), R(1)}}); }), ErrorCode::RingMismatch);
  auto f5 = el(CoefficientRing::prime_field(5), {{R(-1), R(0)}, {R(1, 2), R(1)}});
  EXPECT_EQ(f5.terms(), (std::vector<Term>{{R(3), R(1)}, {R(4), R(0)}}));
}

TEST(Ring, Tags) {
  EXPECT_EQ(CoefficientRing::prime_field(7).tag(), "F_7");
  EXPECT_EQ(CoefficientRing::from_tag("F_7"), CoefficientRing::prime_field(7));
  EXPECT_EQ(CoefficientRing::from_tag("Q"), CoefficientRing::rationals());
  EXPECT_EQ(code_of([] { CoefficientRing::prime_field(8); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { CoefficientRing::from_tag("F_x"); }), ErrorCode::InvalidSpec);
}

TEST(Arithmetic, Examples) {
  auto q = CoefficientRing::rationals();
  auto a = el(q, {{R(1), R(1, 2)}, {R(1), R(0)}});
  auto b = el(q, {{R(1), R(1, 2)}, {R(-1), R(0)}});
  EXPECT_EQ(mul(a, b), el(q, {{R(1), R(1)}, {R(-1), R(0)}}));
  EXPECT_EQ(mul(a, Element::one(q)), a);
  auto f2 = CoefficientRing::prime_field(2);
  auto s = el(f2, {{R(1), R(3, 2)}, {R(1), R(1, 4)}});
  EXPECT_EQ(pow(s, 2), el(f2, {{R(1), R(3)}, {R(1), R(1, 2)}}));
  EXPECT_EQ(code_of([&] { add(a, Element::one(f2)); }), ErrorCode::RingMismatch);
}

TEST(RingProperty, Axioms) {
  std::mt19937_64 rng(2024);
  for (const auto& r : {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::prime_field(5)}) {
    for (int i = 0; i < 150; ++i) {
      auto a = random_element(rng, r, 6, 24);
      auto b = random_element(rng, r, 6, 24);
      auto c = random_element(rng, r, 6, 24);
      EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
      EXPECT_EQ(mul(a, b), mul(b, a));
      EXPECT_EQ(add(a, negate(a)), Element::zero(r));
      EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
    }
  }
}

TEST(RingProperty, Frobenius) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = CoefficientRing::prime_field(p);
    for (int i = 0; i < 80; ++i) {
      auto a = random_element(rng, r, 5, 12);
      auto b = random_element(rng, r, 5, 12);
      EXPECT_EQ(pow(add(a, b), static_cast<unsigned>(p)),
                add(pow(a, static_cast<unsigned>(p)), pow(b, static_cast<unsigned>(p))));
    }
  }
}

TEST(Units, Examples) {
  EXPECT_TRUE(is_unit(Element::monomial(CoefficientRing::rationals(), R(3), R(0))));
  EXPECT_FALSE(is_unit(Element::monomial(CoefficientRing::integers(), R(3), R(0))));
  EXPECT_TRUE(is_unit(Element::monomial(CoefficientRing::integers(), R(-1), R(0))));
  EXPECT_FALSE(is_unit(Element::monomial(CoefficientRing::prime_field(3), R(1), R(1, 2))));
  EXPECT_TRUE(is_unit(Element::monomial(CoefficientRing::prime_field(3), R(1), R(1, 2)), false));
  EXPECT_TRUE(is_unit(Element::monomial(CoefficientRing::prime_field(5), R(2), R(0))));
  EXPECT_FALSE(is_unit(Element::zero(CoefficientRing::rationals())));
}

TEST(NuBar, Examples) {
  auto q = CoefficientRing::rationals();
  EXPECT_EQ(nu_bar(el(q, {{R(1), R(1, 3)}, {R(1), R(3, 5)}})), R(0));
  EXPECT_EQ(nu_bar(Element::monomial(q, R(1), R(1, 2))), R(1, 2));
  EXPECT_EQ(nu_bar(Element::one(q)), R(0));
  EXPECT_EQ(code_of([&] { nu_bar(Element::zero(q)); }), ErrorCode::ZeroInput);
  EXPECT_EQ(code_of([&] { nu_bar(Element::monomial(q, R(1), R(1, 9))); }), ErrorCode::NotAMember);
}

TEST(PthRoot, Examples) {
  auto f2 = CoefficientRing::prime_field(2);
  auto root = pth_root(el(f2, {{R(1), R(3)}, {R(1), R(1, 2)}}), true);
  ASSERT_TRUE(root);
  EXPECT_EQ(*root, el(f2, {{R(1), R(3, 2)}, {R(1), R(1, 4)}}));
  EXPECT_EQ(pth_root(Element::one(f2), true), Element::one(f2));
  auto f3 = CoefficientRing::prime_field(3);
  EXPECT_EQ(pth_root(Element::monomial(f3, R(1), R(2, 3)), true), Element::monomial(f3, R(1), R(2, 9)));
  EXPECT_FALSE(pth_root(Element::one(f3), false));
  EXPECT_EQ(code_of([] { pth_root(Element::one(CoefficientRing::rationals()), true); }), ErrorCode::RingMismatch);
}

TEST(PthRootProperty, RootRaisesBack) {
  std::mt19937_64 rng(555);
  for (std::uint64_t p : {2u, 3u, 7u}) {
    auto r = CoefficientRing::prime_field(p);
    for (int i = 0; i < 200; ++i) {
      auto f = random_element(rng, r, 6, 20);
      auto g = pth_root(f, true);
      ASSERT_TRUE(g);
      EXPECT_EQ(pow(*g, static_cast<unsigned>(p)), f);
      // Every nonzero nonunit is a p-th power, so it is never an atom.
      if (!f.is_zero() && !is_unit(f)) {
        EXPECT_FALSE(is_unit(*g));
      }
    }
  }
}

TEST(MonomialDivides, Examples) {
  auto q = CoefficientRing::rationals();
  auto g = puiseux::MonoidSpec::grams();
  auto f = Element::monomial(q, R(1), R(3, 5));
  EXPECT_TRUE(monomial_divides(R(0), f, g));
  EXPECT_TRUE(monomial_divides(R(1, 10), f, g));
  EXPECT_FALSE(monomial_divides(R(1, 3), Element::monomial(q, R(1), R(1, 10)), g));
}
