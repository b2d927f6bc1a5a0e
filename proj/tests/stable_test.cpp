#include <gtest/gtest.h>

#include "bpw/mforacle.hpp"
#include "bpw/tilting.hpp"
#include "support.hpp"

namespace bpw {
namespace {

using testing::el;

const WeightSystem W34({3, 4});
const WeightSystem W22({2, 2});

StableObject U(const WeightSystem& ws, std::initializer_list<std::int64_t> ell) { return StableObject::U(el(ws, ell)); }

TEST(Reflect, Examples) {
  const StableObject r = reflect(U(W34, {1, 1}), 0);
  EXPECT_EQ(r, StableObject::U(el(W34, {2, 1}), el(W34, {2, 0}), -1));
  const StableObject rk = reflect(StableObject::rho_k(W22, GradeElement::zero(W22)), 0);
  EXPECT_EQ(rk, StableObject::rho_k(W22, GradeElement::x(W22, 0), -1));
  EXPECT_THROW(reflect(StableObject::zero(W34), 0), std::invalid_argument);
}

TEST(Reflect, TwiceFoldsIntoC) {
  std::mt19937 rng(41);
  for (int s = 0; s < 10000; ++s) {
    const StableObject o = testing::random_object(rng, W34);
    const int i = testing::uniform(rng, 0, 1);
    const StableObject rr = reflect(reflect(o, i), i);
    ASSERT_EQ(rr.ell(), o.ell());
    ASSERT_EQ(rr.twist(), o.twist() + GradeElement::c(W34));
    ASSERT_EQ(rr.shift(), o.shift() - 2);
    ASSERT_TRUE(same_object(rr, o));
  }
}

TEST(Canonicalize, Examples) {
  const StableObject rho = StableObject::rho_k(W34, GradeElement::zero(W34));
  EXPECT_EQ(canonicalize(StableObject::U(el(W34, {1, 1}), GradeElement::c(W34), -2)), canonicalize(rho));
  const GradeElement s = specials(W34).s;
  EXPECT_EQ(canonicalize(U(W34, {2, 3})), canonicalize(StableObject::U(s, s, -2)));
  EXPECT_TRUE(canonicalize(StableObject::zero(W34)).is_zero());
}

class StableLaws : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(StableLaws, CanonicalFormPolicy) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(43);
  for (int s = 0; s < 10000; ++s) {
    const StableObject o = testing::random_object(rng, ws);
    const StableObject c = canonicalize(o);
    ASSERT_EQ(c.shift(), 0);
    ASSERT_EQ(canonicalize(c), c);
    const int i = testing::uniform(rng, 0, ws.n() - 1);
    ASSERT_EQ(canonicalize(reflect(o, i)), c);
    ASSERT_EQ(canonicalize(suspend(twist_obj(o, GradeElement::c(ws)), -2)), c);
  }
}

TEST_P(StableLaws, SuspensionAndSerre) {
  const WeightSystem ws(GetParam());
  const Specials sp = specials(ws);
  std::mt19937 rng(47);
  for (int s = 0; s < 10000; ++s) {
    const StableObject o = testing::random_object(rng, ws);
    ASSERT_TRUE(same_object(suspend(o, 0), o));
    ASSERT_TRUE(same_object(suspend(o, 2), twist_obj(o, sp.c)));
    ASSERT_TRUE(same_object(serre(serre_inv(o)), o));
    ASSERT_TRUE(same_object(serre(o), suspend(twist_obj(o, sp.omega), ws.n() - 2)));
    const int a = testing::uniform(rng, -3, 3), b = testing::uniform(rng, -3, 3);
    ASSERT_TRUE(same_object(suspend(suspend(o, a), b), suspend(o, a + b)));
  }
}

TEST_P(StableLaws, NFoldReflection) {
  // U^ell[n] = U^{nc - ell}(nc - ell).
  const WeightSystem ws(GetParam());
  const GradeElement nc = GradeElement::c(ws) * ws.n();
  for (const GradeElement& ell : box(ws, testing::cuboid_lo(ws), testing::cuboid_hi(ws))) {
    // nc - ell as an ell-parameter has coordinates p_i - ell_i and level 0.
    std::vector<std::int64_t> m;
    for (int i = 0; i < ws.n(); ++i) m.push_back(ws.p(i) - ell.coeff(i));
    const GradeElement mirrored = GradeElement::from_raw(ws, std::span<const std::int64_t>(m), 0);
    ASSERT_EQ(mirrored, nc - ell);
    ASSERT_TRUE(same_object(suspend(StableObject::U(ell), ws.n()), StableObject::U(mirrored, nc - ell)));
  }
}

TEST_P(StableLaws, SerreDualityNumerically) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(53);
  for (int s = 0; s < 2000; ++s) {
    const StableObject a = testing::random_object(rng, ws, 1, 2);
    const StableObject b = testing::random_object(rng, ws, 1, 2);
    const HomAnswer lhs = hom_dim(a, b);
    const HomAnswer rhs = hom_dim(b, serre(a));
    ASSERT_TRUE(lhs.known() && rhs.known());
    ASSERT_EQ(lhs, rhs) << a.to_string() << " " << b.to_string();
  }
}

TEST_P(StableLaws, LadderAgreesWithConfigurations) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(59);
  int compared = 0;
  for (int s = 0; s < 3000; ++s) {
    const StableObject a = testing::random_object(rng, ws, 1, 2);
    const StableObject b = testing::uniform(rng, 0, 1) ? testing::random_object(rng, ws, 1, 2)
                                                       : StableObject::U(testing::random_ell(rng, ws));
    const HomAnswer conf = configuration_hom_dim(a, b);
    if (!conf.known()) continue;
    ++compared;
    ASSERT_EQ(ladder_hom_dim(a, b), conf) << a.to_string() << " " << b.to_string();
  }
  EXPECT_GT(compared, 300);
}

INSTANTIATE_TEST_SUITE_P(Types, StableLaws,
                         ::testing::Values(std::vector<int>{2, 2}, std::vector<int>{3, 4}, std::vector<int>{2, 2, 2},
                                           std::vector<int>{2, 3, 4}, std::vector<int>{3, 3, 4}));

TEST(HomDim, Examples) {
  const StableObject rho = U(W34, {1, 1});
  EXPECT_EQ(hom_dim(U(W34, {2, 3}), rho), HomAnswer::of(1));
  EXPECT_EQ(hom_dim(rho, U(W34, {2, 1})), HomAnswer::of(0));
  EXPECT_EQ(hom_dim(rho, rho), HomAnswer::of(1));
  EXPECT_EQ(hom_dim(rho, suspend(rho, 1)), HomAnswer::of(0));
  EXPECT_EQ(hom_dim(rho, serre(rho)), HomAnswer::of(1));
  EXPECT_EQ(hom_dim(StableObject::zero(W34), rho), HomAnswer::of(0));
  EXPECT_THROW(hom_dim(rho, U(W22, {1, 1})), std::invalid_argument);
}

TEST(HomDim, AllWeightsTwoDetectIsomorphism) {
  const WeightSystem ws({2, 2, 2});
  std::mt19937 rng(61);
  for (int s = 0; s < 2000; ++s) {
    const StableObject a = testing::random_object(rng, ws);
    const StableObject b = testing::random_object(rng, ws);
    ASSERT_EQ(*hom_dim(a, b).dim, same_object(a, b) ? 1 : 0);
  }
}

TEST(HomDim, KoszulFamilyMatchesBoxRule) {
  // Hom(U^s(x)[-sigma(x)], U^s(y)[-sigma(y)]) = 1 iff 0 <= x - y <= s.
  for (const WeightSystem& ws : {W34, WeightSystem({2, 3, 3}), WeightSystem({3, 4, 5})}) {
    const Specials sp = specials(ws);
    std::vector<int> lo(static_cast<size_t>(ws.n()), 0), hi;
    for (int i = 0; i < ws.n(); ++i) hi.push_back(ws.p(i) - 2);
    const std::vector<GradeElement> xs = box(ws, lo, hi);
    for (const GradeElement& x : xs) {
      for (const GradeElement& y : xs) {
        const StableObject a = StableObject::U(sp.s, x, -sigma(x));
        const StableObject b = StableObject::U(sp.s, y, -sigma(y));
        const GradeElement d = x - y;
        bool expect = d.level() == 0;
        for (int i = 0; i < ws.n(); ++i) expect = expect && d.coeff(i) <= 1;
        ASSERT_EQ(*hom_dim(a, b).dim, expect ? 1 : 0) << x.to_string() << " " << y.to_string();
      }
    }
  }
}

TEST(Knorrer, Transport) {
  const WeightSystem w3({3});
  const StableObject rho = StableObject::U(el(w3, {1}));
  const StableObject t = knorrer_transport(rho);
  EXPECT_EQ(t.weights(), WeightSystem({2, 3}));
  EXPECT_EQ(t.ell(), el(t.weights(), {1, 1}));
  EXPECT_TRUE(knorrer_transport(StableObject::zero(w3)).is_zero());
  std::vector<StableObject> objs;
  for (const GradeElement& e : box(w3, {1}, {2})) {
    for (int lvl = -1; lvl <= 1; ++lvl) {
      for (int tw = 0; tw < 3; ++tw) {
        for (int sh = -2; sh <= 2; ++sh) objs.push_back(StableObject::U(e, el(w3, {tw}, lvl), sh));
      }
    }
  }
  for (const StableObject& a : objs) {
    for (const StableObject& b : objs) {
      ASSERT_EQ(hom_dim(a, b), hom_dim(knorrer_transport(a), knorrer_transport(b)));
    }
  }
}

TEST(Text, RoundTrip) {
  std::mt19937 rng(67);
  for (int s = 0; s < 1000; ++s) {
    const StableObject o = testing::random_object(rng, W34);
    ASSERT_EQ(StableObject::parse(W34, o.to_string()), o);
  }
  EXPECT_EQ(StableObject::parse(W34, "U[1,2]"), U(W34, {1, 2}));
  EXPECT_TRUE(StableObject::parse(W34, "0").is_zero());
  EXPECT_THROW(StableObject::parse(W34, "U[1,4]"), std::invalid_argument);
  EXPECT_THROW(StableObject::parse(W34, "V[1,1]"), std::invalid_argument);
}

TEST(Rewriting, SoundAgainstOracle) {
  // Every reflection move preserves the oracle Hom-profile.
  for (const WeightSystem& ws : {W34, WeightSystem({2, 2, 2})}) {
    std::mt19937 rng(71);
    for (int s = 0; s < 4; ++s) {
      const StableObject o = testing::random_object(rng, ws, 1, 2);
      const HomProfile base = hom_profile(mf_of(o));
      for (int i = 0; i < ws.n(); ++i) ASSERT_EQ(hom_profile(mf_of(reflect(o, i))), base) << o.to_string();
      ASSERT_EQ(hom_profile(mf_of(canonicalize(o))), base);
    }
  }
}

}  // namespace
}  // namespace bpw
