#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

namespace bpw {
namespace {

using testing::el;

const WeightSystem W34({3, 4});
const WeightSystem W345({3, 4, 5});
const WeightSystem W222({2, 2, 2});

TEST(WeightSystem, RejectsBadWeights) {
  EXPECT_THROW(WeightSystem({}), std::invalid_argument);
  EXPECT_THROW(WeightSystem({3, 1}), std::invalid_argument);
  EXPECT_THROW(WeightSystem::parse("3,x"), std::invalid_argument);
  EXPECT_EQ(WeightSystem::parse("3,4"), W34);
}

TEST(Normalize, Examples) {
  GradeElement a = GradeElement::x(W34, 0) * 3;
  EXPECT_EQ(a.coeffs(), (std::vector<int>{0, 0}));
  EXPECT_EQ(a.level(), 1);
  GradeElement b = GradeElement::x(W34, 0) - GradeElement::x(W34, 1);
  EXPECT_EQ(b.coeffs(), (std::vector<int>{1, 3}));
  EXPECT_EQ(b.level(), -1);
  EXPECT_TRUE(GradeElement::zero(W34).is_zero());
}

TEST(Arithmetic, Examples) {
  const GradeElement x1 = GradeElement::x(W34, 0);
  EXPECT_EQ((x1 + x1).coeffs(), (std::vector<int>{2, 0}));
  EXPECT_EQ(x1 + x1 * 2, GradeElement::c(W34));
  const GradeElement n2 = -GradeElement::x(W34, 1);
  EXPECT_EQ(n2.coeffs(), (std::vector<int>{0, 3}));
  EXPECT_EQ(n2.level(), -1);
  EXPECT_THROW(x1 + GradeElement::x(W345, 0), std::invalid_argument);
}

TEST(Order, Examples) {
  const Specials sp = specials(W34);
  EXPECT_TRUE(leq(GradeElement::zero(W34), sp.delta));
  EXPECT_FALSE(leq(GradeElement::x(W34, 0), GradeElement::x(W34, 1)));
  EXPECT_TRUE(leq(sp.s, sp.s));
}

TEST(Dichotomy, Examples) {
  EXPECT_EQ(dichotomy(GradeElement::zero(W34)), Side::NonNegative);
  EXPECT_EQ(dichotomy(-GradeElement::x(W34, 0)), Side::BelowBound);
  EXPECT_EQ(dichotomy(GradeElement::c(W34)), Side::NonNegative);
}

TEST(Specials, Examples) {
  const Specials sp = specials(W34);
  EXPECT_EQ(sp.omega, el(W34, {2, 3}, -1));
  EXPECT_EQ(sp.delta, el(W34, {1, 2}));
  EXPECT_EQ(sp.s, el(W34, {1, 1}));
  EXPECT_TRUE(specials(W222).delta.is_zero());
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(GradeElement::zero(W34)), 0);
  EXPECT_EQ(sigma(specials(W34).delta), 3);
  EXPECT_EQ(sigma(el(W345, {1, 0, 1})), 2);
  EXPECT_THROW(sigma(GradeElement::c(W34)), std::invalid_argument);
  EXPECT_THROW(sigma(el(W34, {2, 0})), std::invalid_argument);
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(dim_R(GradeElement::zero(W34)), 1);
  EXPECT_EQ(dim_R(GradeElement::c(W34)), 1);
  EXPECT_EQ(dim_S(GradeElement::c(W34)), 2);
  EXPECT_EQ(dim_R(GradeElement::c(W345)), 2);
  const WeightSystem w5({5});
  EXPECT_EQ(dim_R(GradeElement::zero(w5)), 1);
  EXPECT_EQ(dim_R(GradeElement::c(w5)), 0);
}

TEST(Embedding, Examples) {
  const GroupEmbedding e2 = GroupEmbedding::make(W34, 3, 2);
  EXPECT_EQ(e2.pjn(), 2);
  EXPECT_EQ(e2.theta(GradeElement::x(e2.source(), 1)), GradeElement::x(W34, 1));
  EXPECT_THROW(e2.theta_inv(GradeElement::x(W34, 1) * 3), NotInImage);
  EXPECT_THROW(GroupEmbedding::make(W34, 4, 1), std::invalid_argument);
  EXPECT_THROW(GroupEmbedding::make(WeightSystem({3, 2}), 2, 1), std::invalid_argument);
}

class GradingLaws : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(GradingLaws, GroupLaws) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(7);
  for (int s = 0; s < 10000; ++s) {
    const GradeElement a = testing::random_element(rng, ws);
    const GradeElement b = testing::random_element(rng, ws);
    const GradeElement c = testing::random_element(rng, ws);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a + (-a)).is_zero());
    ASSERT_EQ(a - b, a + (-b));
    for (int i = 0; i < ws.n(); ++i) {
      ASSERT_GE(a.coeff(i), 0);
      ASSERT_LT(a.coeff(i), ws.p(i));
    }
    // Normal form is idempotent under re-normalization of its own coefficients.
    std::vector<std::int64_t> raw(a.coeffs().begin(), a.coeffs().end());
    ASSERT_EQ(GradeElement::from_raw(ws, std::span<const std::int64_t>(raw), a.level()), a);
  }
}

TEST_P(GradingLaws, NormalizeCarriesIntoLevel) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(11);
  for (int s = 0; s < 10000; ++s) {
    std::vector<std::int64_t> raw;
    for (int i = 0; i < ws.n(); ++i) raw.push_back(testing::uniform(rng, -3 * ws.p(i), 3 * ws.p(i)));
    const int lvl = testing::uniform(rng, -3, 3);
    const GradeElement a = GradeElement::from_raw(ws, std::span<const std::int64_t>(raw), lvl);
    std::int64_t expect_level = lvl;
    for (int i = 0; i < ws.n(); ++i) {
      const std::int64_t r = raw[static_cast<size_t>(i)];
      const std::int64_t q = (r - ((r % ws.p(i)) + ws.p(i)) % ws.p(i)) / ws.p(i);
      ASSERT_EQ(a.coeff(i), r - q * ws.p(i));
      expect_level += q;
    }
    ASSERT_EQ(a.level(), expect_level);
  }
}

TEST_P(GradingLaws, OrderLaws) {
  const WeightSystem ws(GetParam());
  std::mt19937 rng(13);
  for (int s = 0; s < 10000; ++s) {
    const GradeElement a = testing::random_element(rng, ws, 1);
    const GradeElement b = testing::random_element(rng, ws, 1);
    const GradeElement c = testing::random_element(rng, ws, 1);
    ASSERT_TRUE(leq(a, a));
    ASSERT_EQ(leq(a, b), (b - a).level() >= 0);
    if (leq(a, b) && leq(b, a)) {
      ASSERT_EQ(a, b);
    }
    if (leq(a, b) && leq(b, c)) {
      ASSERT_TRUE(leq(a, c));
    }
  }
}

TEST_P(GradingLaws, DichotomyExclusive) {
  const WeightSystem ws(GetParam());
  const Specials sp = specials(ws);
  const GradeElement bound = GradeElement::c(ws) * (ws.n() - 2) + sp.omega;
  std::mt19937 rng(17);
  for (int s = 0; s < 10000; ++s) {
    const GradeElement a = testing::random_element(rng, ws);
    const bool nonneg = leq(GradeElement::zero(ws), a);
    const bool below = leq(a, bound);
    ASSERT_NE(nonneg, below) << a.to_string();
    ASSERT_EQ(dichotomy(a), nonneg ? Side::NonNegative : Side::BelowBound);
  }
}

TEST_P(GradingLaws, DimRMatchesMonomialCount) {
  const WeightSystem ws(GetParam());
  const int n = ws.n();
  const int max_level = 4;
  std::map<GradeElement, std::int64_t> count_r, count_s;
  // Exponents e_i <= (max_level + 1) p_i cover every monomial of level <= max_level.
  std::vector<int> e(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<std::int64_t> raw(e.begin(), e.end());
    const GradeElement d = GradeElement::from_raw(ws, std::span<const std::int64_t>(raw), 0);
    if (d.level() <= max_level) {
      ++count_s[d];
      if (e[static_cast<size_t>(n - 1)] < ws.p(n - 1)) ++count_r[d];
    }
    int i = 0;
    while (i < n && e[static_cast<size_t>(i)] == (max_level + 1) * ws.p(i)) e[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    ++e[static_cast<size_t>(i)];
  }
  std::vector<int> lo(static_cast<size_t>(n), 0), hi;
  for (int i = 0; i < n; ++i) hi.push_back(ws.p(i) - 1);
  for (const GradeElement& base : box(ws, lo, hi)) {
    for (int lvl = -max_level; lvl <= max_level; ++lvl) {
      const GradeElement x = base + GradeElement::c(ws) * lvl;
      ASSERT_EQ(dim_R(x), count_r.count(x) ? count_r[x] : 0) << x.to_string();
      ASSERT_EQ(dim_S(x), count_s.count(x) ? count_s[x] : 0) << x.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, GradingLaws,
                         ::testing::Values(std::vector<int>{2}, std::vector<int>{5}, std::vector<int>{3, 4},
                                           std::vector<int>{2, 2, 2}, std::vector<int>{3, 4, 5}));

class EmbeddingLaws : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(EmbeddingLaws, ThetaRoundTrip) {
  const WeightSystem ws(GetParam());
  const int pn = ws.p(ws.n() - 1);
  std::mt19937 rng(19);
  for (int p1n = 2; p1n <= pn - 1; ++p1n) {
    for (int j = 1; j <= 2; ++j) {
      const GroupEmbedding e = GroupEmbedding::make(ws, p1n, j);
      for (int s = 0; s < 2000; ++s) {
        const GradeElement a = testing::random_element(rng, e.source());
        const GradeElement t = e.theta(a);
        ASSERT_TRUE(e.in_image(t));
        ASSERT_EQ(e.theta_inv(t), a);
        ASSERT_EQ(t.level(), a.level());
        const GradeElement b = testing::random_element(rng, ws);
        ASSERT_EQ(e.in_image(b), b.coeff(ws.n() - 1) < e.pjn());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, EmbeddingLaws,
                         ::testing::Values(std::vector<int>{5}, std::vector<int>{3, 4}, std::vector<int>{2, 2, 3},
                                           std::vector<int>{3, 4, 5}));

}  // namespace
}  // namespace bpw
