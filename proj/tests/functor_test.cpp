#include <gtest/gtest.h>

#include "bpw/functor.hpp"
#include "bpw/mforacle.hpp"
#include "support.hpp"

namespace bpw {
namespace {

using testing::el;

const WeightSystem W34({3, 4});

TEST(Ladder, Build) {
  const Ladder a = Ladder::build(W34, 3);
  EXPECT_EQ(a.pjn(1), 3);
  EXPECT_EQ(a.pjn(2), 2);
  EXPECT_EQ(a.q(), 3);
  EXPECT_EQ(a.period(), 4);
  EXPECT_EQ(a.reduced(1), WeightSystem({3, 3}));
  const Ladder b = Ladder::build(W34, 2);
  EXPECT_EQ(b.pjn(2), 3);
  const Ladder c = Ladder::build(WeightSystem({3, 3}), 2);
  EXPECT_EQ(c.pjn(1), 2);
  EXPECT_EQ(c.pjn(2), 2);
  EXPECT_THROW(Ladder::build(W34, 4), std::invalid_argument);
  EXPECT_THROW(Ladder::build(W34, 1), std::invalid_argument);
  EXPECT_THROW(Ladder::build(WeightSystem({3, 2}), 2), std::invalid_argument);
}

TEST(Reduce, Examples) {
  const Ladder l = Ladder::build(W34, 3);
  const WeightSystem& r2 = l.reduced(2);
  EXPECT_TRUE(same_object(reduce(l, 2, 0, StableObject::U(el(W34, {2, 3}))), StableObject::U(el(r2, {2, 1}))));
  EXPECT_TRUE(reduce(l, 2, 0, StableObject::U(el(W34, {1, 1}))).is_zero());
  const GradeElement x2 = GradeElement::x(W34, 1);
  EXPECT_TRUE(same_object(reduce(l, 2, 0, StableObject::U(el(W34, {1, 2}), x2)),
                          StableObject::U(el(r2, {1, 1}), GradeElement::x(r2, 1))));
  EXPECT_TRUE(reduce(l, 1, 0, StableObject::zero(W34)).is_zero());
}

TEST(Insert, Examples) {
  const Ladder l = Ladder::build(W34, 3);
  const WeightSystem& r2 = l.reduced(2);
  EXPECT_TRUE(same_object(insert(l, 2, 0, StableObject::rho_k(r2, GradeElement::zero(r2))),
                          StableObject::U(el(W34, {1, 3}))));
  for (int ln = 1; ln < l.q(); ++ln) {
    const GradeElement ell = el(W34, {2, ln});
    EXPECT_TRUE(same_object(insert(l, 1, l.q() - 1, StableObject::U(l.embedding(1).theta_inv(ell))),
                            StableObject::U(ell)));
  }
  EXPECT_TRUE(insert(l, 1, 0, StableObject::zero(l.reduced(1))).is_zero());
}

TEST(ProjectiveImage, Examples) {
  const Ladder l = Ladder::build(W34, 3);
  const WeightSystem& r2 = l.reduced(2);
  EXPECT_TRUE(predict_projective_image(l, Direction::Reduce, 2, 0, GradeElement::zero(W34)).is_zero());
  EXPECT_EQ(predict_projective_image(l, Direction::Reduce, 2, 0, GradeElement::x(W34, 1) * 3), GradeElement::c(r2));
  EXPECT_EQ(predict_projective_image(l, Direction::Insert, 2, 0, GradeElement::x(r2, 1)), GradeElement::x(W34, 1));
}

TEST(ProjectiveImage, ReductionUndoesInsertion) {
  std::mt19937 rng(73);
  for (const auto& [p, p1n] : std::vector<std::pair<std::vector<int>, int>>{{{3, 4}, 2}, {{3, 4}, 3}, {{2, 3, 5}, 3}}) {
    const Ladder l = Ladder::build(WeightSystem(p), p1n);
    for (int s = 0; s < 2000; ++s) {
      const int j = testing::uniform(rng, 1, 2), k = testing::uniform(rng, -6, 6);
      const GradeElement y = testing::random_element(rng, l.reduced(j));
      const GradeElement up = predict_projective_image(l, Direction::Insert, j, k, y);
      ASSERT_EQ(predict_projective_image(l, Direction::Reduce, j, k, up), y);
    }
  }
}

struct Split {
  std::vector<int> p;
  int p1n;
};

class LadderLaws : public ::testing::TestWithParam<Split> {};

TEST_P(LadderLaws, DecompositionPartitionsCuboid) {
  const Ladder l = Ladder::build(WeightSystem(GetParam().p), GetParam().p1n);
  const int last = l.full().n() - 1;
  for (const StableObject& o : cuboid_objects(l.full())) {
    const Decomposition d = decompose(l, o.ell());
    ASSERT_EQ(d.j, o.ell().coeff(last) < l.q() ? 1 : 2);
    ASSERT_EQ(d.k, d.j == 1 ? l.q() - 1 : 0);
    ASSERT_TRUE(same_object(insert(l, d.j, d.k, d.source), o));
  }
}

TEST_P(LadderLaws, UnitAndCounit) {
  // phi_{j,k} psi_{j,k} = id and phi_{j,k+1} psi_{j,k} = id since psi is fully faithful.
  const Ladder l = Ladder::build(WeightSystem(GetParam().p), GetParam().p1n);
  std::mt19937 rng(79);
  for (int s = 0; s < 3000; ++s) {
    const int j = testing::uniform(rng, 1, 2), k = testing::uniform(rng, -5, 5);
    const StableObject o = testing::random_object(rng, l.reduced(j));
    const StableObject img = insert(l, j, k, o);
    ASSERT_FALSE(img.is_zero());
    ASSERT_TRUE(same_object(reduce(l, j, k, img), o)) << o.to_string() << " k=" << k;
    ASSERT_TRUE(same_object(reduce(l, j, k + 1, img), o)) << o.to_string() << " k=" << k;
  }
}

TEST_P(LadderLaws, CompositeZeroAndPeriodicity) {
  const Ladder l = Ladder::build(WeightSystem(GetParam().p), GetParam().p1n);
  const WeightSystem& r2 = l.reduced(2);
  std::mt19937 rng(83);
  for (int s = 0; s < 3000; ++s) {
    const StableObject o = testing::random_object(rng, r2);
    ASSERT_TRUE(reduce(l, 1, l.q(), insert(l, 2, 0, o)).is_zero()) << o.to_string();
    const StableObject f = testing::random_object(rng, l.full());
    const int j = testing::uniform(rng, 1, 2), k = testing::uniform(rng, -5, 5);
    const GradeElement shift = GradeElement::x(l.reduced(j), l.full().n() - 1) * (l.pjn(j) - l.period());
    ASSERT_TRUE(same_object(reduce(l, j, k + l.period(), f), twist_obj(reduce(l, j, k, f), shift)));
  }
}

TEST_P(LadderLaws, RecollementReportPasses) {
  const Ladder l = Ladder::build(WeightSystem(GetParam().p), GetParam().p1n);
  const RecollementReport r = check_recollement(l);
  EXPECT_TRUE(r.composite_zero);
  EXPECT_TRUE(r.fully_faithful());
  EXPECT_TRUE(r.periodicity);
  EXPECT_TRUE(r.partition);
  EXPECT_TRUE(r.adjunction_ok());
  EXPECT_GE(r.adjunction.size(), 50u);
}

TEST_P(LadderLaws, AdjunctionsAgainstOracle) {
  // Hom(psi_{j,k} A, B) = Hom(A, phi_{j,k+1} B) and Hom(phi_{j,k} B, A) = Hom(B, psi_{j,k} A),
  // both sides computed by the oracle from the functor outputs.
  const Ladder l = Ladder::build(WeightSystem(GetParam().p), GetParam().p1n);
  std::mt19937 rng(89);
  for (int s = 0; s < 120; ++s) {
    const int j = testing::uniform(rng, 1, 2), k = testing::uniform(rng, -2, 2);
    const StableObject a = testing::random_object(rng, l.reduced(j), 0, 1);
    const StableObject b = s % 2 ? testing::random_object(rng, l.full(), 0, 1) : insert(l, j, k, suspend(a, 1));
    const StableObject ia = insert(l, j, k, a);
    const int lhs = stable_hom_dim_oracle(mf_of(ia), mf_of(b), 0);
    const int rhs = stable_hom_dim_oracle(mf_of(a), mf_of(reduce(l, j, k + 1, b)), 0);
    ASSERT_EQ(lhs, rhs) << a.to_string() << " " << b.to_string();
    const int lhs2 = stable_hom_dim_oracle(mf_of(reduce(l, j, k, b)), mf_of(a), 0);
    const int rhs2 = stable_hom_dim_oracle(mf_of(b), mf_of(ia), 0);
    ASSERT_EQ(lhs2, rhs2) << a.to_string() << " " << b.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Splits, LadderLaws,
                         ::testing::Values(Split{{3, 3}, 2}, Split{{3, 4}, 2}, Split{{3, 4}, 3}, Split{{2, 5}, 2},
                                           Split{{2, 5}, 4}, Split{{2, 3, 4}, 2}));

TEST(Recollement, EmptyWindowPassesVacuously) {
  const RecollementReport r = check_recollement(Ladder::build(W34, 3), RecollementWindow::empty());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.fully_faithful_samples.empty());
  EXPECT_TRUE(r.adjunction.empty());
}

}  // namespace
}  // namespace bpw
