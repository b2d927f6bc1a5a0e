#include <gtest/gtest.h>

#include "bpw/gmod.hpp"
#include "support.hpp"

namespace bpw {
namespace {

using testing::el;

const WeightSystem W34({3, 4});

GradedModule E(const WeightSystem& ws, std::initializer_list<std::int64_t> ell) {
  return make_E(el(ws, ell), GradeElement::zero(ws));
}

TEST(Simple, Examples) {
  const GradedModule k0 = make_simple(W34, GradeElement::zero(W34));
  EXPECT_EQ(k0.fiber(GradeElement::zero(W34)), 1);
  const GradedModule k1 = make_simple(W34, GradeElement::x(W34, 0));
  EXPECT_EQ(k1.fiber(-GradeElement::x(W34, 0)), 1);
  EXPECT_EQ(k1.total_dim(), 1);
}

TEST(EModule, Examples) {
  EXPECT_EQ(E(W34, {1, 1}).total_dim(), 1);
  const GradedModule top = E(W34, {2, 3});
  EXPECT_EQ(top.total_dim(), 6);
  for (const auto& [x, d] : top.support()) {
    EXPECT_TRUE(top.power(0, x, 2).is_zero());
    EXPECT_TRUE(top.power(1, x, 3).is_zero());
  }
  EXPECT_THROW(E(W34, {3, 1}), std::invalid_argument);
  EXPECT_THROW(E(W34, {0, 1}), std::invalid_argument);
}

TEST(Construction, RejectsBrokenRelations) {
  // X_1 X_1 X_1 = identity on a 3-cycle of fibers violates the hypersurface relation.
  const WeightSystem w({3});
  std::map<GradeElement, int> support;
  std::vector<GradedModule::ActionMap> acts(1);
  for (int i = 0; i < 3; ++i) {
    support.emplace(GradeElement::x(w, 0) * i, 1);
    acts[0].emplace(GradeElement::x(w, 0) * i, IntMatrix::identity(1));
  }
  support.emplace(GradeElement::c(w), 1);
  EXPECT_THROW(GradedModule(w, support, acts), std::logic_error);
}

TEST(Twist, Laws) {
  std::mt19937 rng(3);
  const GradedModule m = E(W34, {2, 2});
  EXPECT_EQ(twist_module(m, GradeElement::zero(W34)).support(), m.support());
  for (int s = 0; s < 200; ++s) {
    const GradeElement a = testing::random_element(rng, W34);
    const GradeElement b = testing::random_element(rng, W34);
    ASSERT_TRUE(graded_equivalent(twist_module(twist_module(m, a), b), twist_module(m, a + b)));
    ASSERT_TRUE(graded_equivalent(twist_module(make_simple(W34, GradeElement::zero(W34)), a), make_simple(W34, a)));
  }
}

TEST(ModuleHom, Examples) {
  const GradedModule k = make_simple(W34, GradeElement::zero(W34));
  EXPECT_EQ(module_hom_dim(k, k), 1);
  EXPECT_EQ(module_hom_dim(k, make_simple(W34, GradeElement::x(W34, 0))), 0);
  EXPECT_EQ(module_hom_dim(E(W34, {2, 1}), E(W34, {1, 1})), 1);
  EXPECT_EQ(module_hom_dim(E(W34, {1, 1}), E(W34, {2, 1})), 0);
  EXPECT_EQ(module_hom_dim(direct_sum(k, k), k), 2);
  EXPECT_EQ(module_hom_dim(E(W34, {2, 3}), E(W34, {2, 3}), WorkingField::rational()), 1);
}

TEST(Phi0, Examples) {
  const GroupEmbedding e2 = GroupEmbedding::make(W34, 3, 2);
  const GradedModule r = phi0_module(e2, E(W34, {2, 3}));
  EXPECT_EQ(r.total_dim(), 2);
  EXPECT_TRUE(graded_equivalent(r, E(e2.source(), {2, 1})));
  EXPECT_EQ(phi0_module(e2, E(W34, {1, 1})).total_dim(), 0);
  const GradedModule a = E(W34, {2, 2}), b = E(W34, {1, 3});
  EXPECT_EQ(phi0_module(e2, direct_sum(a, b)).total_dim(),
            phi0_module(e2, a).total_dim() + phi0_module(e2, b).total_dim());
}

TEST(Psi0, Examples) {
  const GroupEmbedding e2 = GroupEmbedding::make(W34, 3, 2);
  const GradedModule k = make_simple(e2.source(), GradeElement::zero(e2.source()));
  const GradedModule img = psi0_module(e2, k);
  EXPECT_EQ(img.total_dim(), 3);
  EXPECT_TRUE(graded_equivalent(img, E(W34, {1, 3})));
  EXPECT_EQ(psi0_module(e2, GradedModule(e2.source())).total_dim(), 0);
}

TEST(Adjunction, Examples) {
  const GroupEmbedding e2 = GroupEmbedding::make(W34, 3, 2);
  const GroupEmbedding e1 = GroupEmbedding::make(W34, 3, 1);
  EXPECT_TRUE(adjunction_check(e2, E(W34, {2, 3}), make_simple(e2.source(), GradeElement::zero(e2.source()))));
  EXPECT_TRUE(adjunction_check(e2, GradedModule(W34), E(e2.source(), {1, 1})));
  EXPECT_TRUE(adjunction_check(e1, E(W34, {1, 2}), E(e1.source(), {1, 1})));
}

struct Split {
  std::vector<int> p;
  int p1n;
};

class FunctorLaws : public ::testing::TestWithParam<Split> {};

GradedModule random_module(std::mt19937& rng, const WeightSystem& ws) {
  const GradeElement y = testing::random_element(rng, ws, 1);
  if (testing::uniform(rng, 0, 3) == 0) return make_simple(ws, y);
  return make_E(testing::random_ell(rng, ws), y);
}

TEST_P(FunctorLaws, AdjointTripleDimensions) {
  const WeightSystem ws(GetParam().p);
  std::mt19937 rng(23);
  for (int j = 1; j <= 2; ++j) {
    const GroupEmbedding e = GroupEmbedding::make(ws, GetParam().p1n, j);
    for (int s = 0; s < 150; ++s) {
      const GradedModule m = random_module(rng, ws);
      GradedModule nm = random_module(rng, e.source());
      // Half the pairs are aligned so that both sides tend to be nonzero.
      if (s % 2 == 0) {
        const GradeElement y = -m.support().begin()->first;
        if (e.in_image(y)) nm = make_simple(e.source(), e.theta_inv(y));
      }
      ASSERT_TRUE(adjunction_check(e, m, nm));
      ASSERT_EQ(module_hom_dim(psi0_module(e, nm), m), module_hom_dim(nm, phi_module(e, 1, m)));
    }
  }
}

TEST_P(FunctorLaws, InsertionFullyFaithful) {
  const WeightSystem ws(GetParam().p);
  std::mt19937 rng(29);
  for (int j = 1; j <= 2; ++j) {
    const GroupEmbedding e = GroupEmbedding::make(ws, GetParam().p1n, j);
    for (int s = 0; s < 150; ++s) {
      const GradedModule a = random_module(rng, e.source());
      const GradedModule b = s % 2 ? random_module(rng, e.source()) : a;
      ASSERT_EQ(module_hom_dim(psi0_module(e, a), psi0_module(e, b)), module_hom_dim(a, b));
    }
  }
}

TEST_P(FunctorLaws, ExactOnBoxSequences) {
  // 0 -> X_i^a E^ell -> E^ell -> E^{ell with ell_i = a} -> 0, dimensionwise.
  const WeightSystem ws(GetParam().p);
  std::mt19937 rng(31);
  for (int j = 1; j <= 2; ++j) {
    const GroupEmbedding e = GroupEmbedding::make(ws, GetParam().p1n, j);
    for (int s = 0; s < 100; ++s) {
      const GradeElement ell = testing::random_ell(rng, ws);
      const int i = testing::uniform(rng, 0, ws.n() - 1);
      if (ell.coeff(i) < 2) continue;
      const int a = testing::uniform(rng, 1, ell.coeff(i) - 1);
      const GradeElement y = testing::random_element(rng, ws, 1);
      std::vector<int> sub = ell.coeffs(), quot = ell.coeffs();
      sub[static_cast<size_t>(i)] = ell.coeff(i) - a;
      quot[static_cast<size_t>(i)] = a;
      const GradedModule mid = make_box(ws, ell.coeffs(), y);
      const GradedModule left = make_box(ws, sub, y - GradeElement::x(ws, i) * a);
      const GradedModule right = make_box(ws, quot, y);
      ASSERT_EQ(mid.total_dim(), left.total_dim() + right.total_dim());
      ASSERT_EQ(phi0_module(e, mid).total_dim(),
                phi0_module(e, left).total_dim() + phi0_module(e, right).total_dim());
      for (const auto& [x, d] : mid.support()) {
        ASSERT_EQ(d, left.fiber(x) + right.fiber(x));
      }
    }
  }
}

TEST_P(FunctorLaws, ReductionOfCuboidModules) {
  // phi_{j,0}(E^ell) is E^{ell - d x_n} when ell_n > d = p_n - p_{j,n}, else 0.
  const WeightSystem ws(GetParam().p);
  const int last = ws.n() - 1;
  for (int j = 1; j <= 2; ++j) {
    const GroupEmbedding e = GroupEmbedding::make(ws, GetParam().p1n, j);
    const int d = e.gap();
    for (const GradeElement& ell : box(ws, testing::cuboid_lo(ws), testing::cuboid_hi(ws))) {
      const GradedModule r = phi0_module(e, make_E(ell, GradeElement::zero(ws)));
      if (ell.coeff(last) <= d) {
        ASSERT_EQ(r.total_dim(), 0) << ell.to_string();
        continue;
      }
      const GradeElement red = e.theta_inv(ell - GradeElement::x(ws, last) * d);
      ASSERT_TRUE(graded_equivalent(r, make_E(red, GradeElement::zero(e.source())))) << ell.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Splits, FunctorLaws,
                         ::testing::Values(Split{{3, 3}, 2}, Split{{3, 4}, 2}, Split{{3, 4}, 3}, Split{{2, 5}, 3},
                                           Split{{3, 4, 5}, 2}, Split{{3, 4, 5}, 4}));

}  // namespace
}  // namespace bpw
