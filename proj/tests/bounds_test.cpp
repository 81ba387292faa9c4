#include <gtest/gtest.h>

#include <stdexcept>

#include "plumblat/bounds.hpp"
#include "plumblat/plumbing.hpp"
#include "support.hpp"

using namespace plumblat;

namespace {

std::vector<std::int64_t> small(const NegCF& cf) {
  std::vector<std::int64_t> out;
  for (const auto& a : cf.coeffs()) out.push_back(static_cast<std::int64_t>(a));
  return out;
}

}  // namespace

TEST(Lmn, Validation) {
  EXPECT_THROW(build_lmn({0, 1}), std::invalid_argument);
  EXPECT_THROW(lower_bounds({1, 0}), std::invalid_argument);
}

TEST(Lmn, SmallestMember) {
  const LmnData d = build_lmn({1, 1});
  EXPECT_EQ(small(d.cf), (std::vector<std::int64_t>{9, 3, 2, 2, 2, 2}));
  EXPECT_EQ(small(d.dual_cf), (std::vector<std::int64_t>{2, 2, 2, 2, 2, 2, 2, 3, 6}));
  const auto ref = oracle::eval(small(d.cf));
  EXPECT_EQ(d.fraction, Fraction(ref.p, ref.q));
  const auto dual_ref = oracle::eval(small(d.dual_cf));
  EXPECT_EQ(dual_ref.p, ref.p);
  EXPECT_EQ(dual_ref.q, ref.p - ref.q);
}

TEST(Lmn, TwoBlocks) {
  EXPECT_EQ(small(build_lmn({2, 1}).dual_cf),
            (std::vector<std::int64_t>{2, 2, 2, 2, 2, 2, 2, 3, 7, 6}));
}

TEST(Lmn, ClosedFormDualAndLengths) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      const LmnSpec s{m, n};
      const LmnData d = build_lmn(s);
      ASSERT_EQ(small(d.dual_cf), oracle::point_rule(small(d.cf))) << m << "," << n;
      ASSERT_EQ(d.dual_cf, lmn_dual_closed_form(s));
      ASSERT_EQ(cf_eval(d.dual_cf), d.fraction.complement());
      const BoundReport r = lower_bounds(s);
      ASSERT_EQ(r.b2_canonical, n + 5 * m);
      ASSERT_EQ(r.b2_dual, m + 7 * n + 1);
      ASSERT_EQ(r.p, d.fraction.p());
    }
  }
}

TEST(Lmn, BoundsExamples) {
  const BoundReport a = lower_bounds({1, 1});
  EXPECT_EQ(a.bound_reversed, 1);
  EXPECT_EQ(a.bound_same, 0);
  EXPECT_FALSE(a.k);
  const BoundReport b = lower_bounds({2, 2});
  EXPECT_EQ(b.bound_reversed, 1);
  EXPECT_EQ(b.bound_same, 1);
  EXPECT_EQ(b.k, 1);
  const BoundReport c = lower_bounds({4, 3});
  EXPECT_EQ(c.bound_reversed, 2);
  EXPECT_EQ(c.bound_same, 2);
  EXPECT_EQ(c.k, 2);
}

TEST(Lmn, BalancedFamilyGivesK) {
  for (std::int64_t k = 1; k <= 5; ++k) {
    const BoundReport r = lower_bounds({2 * k, k + 1});
    ASSERT_EQ(r.bound_reversed, k);
    ASSERT_EQ(r.bound_same, k);
    ASSERT_EQ(r.k, k);
  }
}

TEST(Spin, Bound) {
  EXPECT_EQ(spin_b2_lower_bound(1), 0);
  EXPECT_EQ(spin_b2_lower_bound(11), 2);
  EXPECT_EQ(spin_b2_lower_bound(19), 2);
  EXPECT_EQ(spin_b2_lower_bound(21), 3);
  EXPECT_THROW(spin_b2_lower_bound(4), std::invalid_argument);
}

TEST(Subchain, OneBlock) {
  const SubchainCertificate c = rigid_subchain_certificate(1);
  EXPECT_TRUE(c.working_conditions);
  EXPECT_EQ(c.rigidity, Rigidity::rigid);
  EXPECT_EQ(c.minimal_dimension, 7u);
  EXPECT_TRUE(c.ok());

  const Plumbing p({Chain{3, 2, 2, 2, 2}});
  const auto r = enumerate_embeddings(p, 7);
  ASSERT_EQ(r.embeddings.size(), 1u);
  EXPECT_TRUE(is_standard(r.embeddings[0].matrix(), p));
}

TEST(Subchain, TwoBlocks) {
  const SubchainCertificate c = rigid_subchain_certificate(2);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.minimal_dimension, 13u);

  const Plumbing p({Chain{3, 2, 2, 2, 2, 3, 2, 2, 2, 2}});
  EXPECT_TRUE(enumerate_embeddings(p, 12).embeddings.empty());
  EXPECT_EQ(enumerate_embeddings(p, 13).embeddings.size(), 1u);
}

TEST(Subchain, CapIsEnforcedButOverridable) {
  EXPECT_THROW(rigid_subchain_certificate(3), std::invalid_argument);
  EXPECT_TRUE(rigid_subchain_certificate(3, {}, 3).ok());
}

TEST(Subchain, BudgetIsPropagated) {
  EXPECT_EQ(rigid_subchain_certificate(2, {20, 1}).rigidity, Rigidity::budget_exceeded);
}

TEST(NormFloor, SevenTwosInZ8) {
  EXPECT_EQ(complement_norm_floor(1, 3), 8);
  EXPECT_THROW(complement_norm_floor(2, 3), std::invalid_argument);
}
