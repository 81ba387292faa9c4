#include <gtest/gtest.h>

#include <random>

#include "plumblat/complement.hpp"
#include "support.hpp"

using namespace plumblat;

namespace {

std::int64_t dot64(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool in_kernel(const IntMatrix& rows, const IntVector& x) {
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < rows.cols(); ++c) s += rows(r, c) * x[c];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Kernel, Staircase) {
  const auto basis = integer_kernel(standard_embedding(Plumbing({Chain{2, 2, 2}})));
  ASSERT_EQ(basis.size(), 1u);
  const IntVector& v = basis[0];
  EXPECT_EQ(dot64(v, v), 4);
  for (auto x : v) EXPECT_EQ(std::abs(x), 1);
  EXPECT_EQ(determinant(gram_of(basis)), 4);
}

TEST(Kernel, SingleVertex) {
  const auto basis = integer_kernel(IntMatrix::from_rows({{1, -1}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(gram_of(basis)(0, 0), 2);
}

// For standard embeddings of chains the image is primitive, so the complement
// has determinant det(chain) = p as well.
TEST(Kernel, RankAndDeterminant) {
  for (const auto& p : oracle::small_plumbings(5, 12)) {
    const IntMatrix rows = standard_embedding(p);
    const auto basis = integer_kernel(rows);
    ASSERT_EQ(basis.size(), rows.cols() - rows.rows()) << p.str();
    for (const auto& v : basis) ASSERT_TRUE(in_kernel(rows, v)) << p.str();
    if (!basis.empty()) {
      ASSERT_EQ(determinant(gram_of(basis)), determinant(gram(p))) << p.str();
    }
  }
}

TEST(Kernel, SaturatedOnNonPrimitiveImage) {
  // Row (2, 2) has kernel spanned by (1, -1), not a multiple of it.
  const auto basis = integer_kernel(IntMatrix::from_rows({{2, 2}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(dot64(basis[0], basis[0]), 2);
}

TEST(Lll, PreservesLatticeAndShortens) {
  std::vector<IntVector> b{{1, 0, 0}, {7, 1, 0}, {13, 5, 1}};
  const auto det = determinant(gram_of(b));
  const auto r = lll_reduce(b);
  EXPECT_EQ(determinant(gram_of(r)), det);
  for (const auto& v : r) EXPECT_LE(dot64(v, v), 2);
}

TEST(ShortVectors, AgreeWithBoxSearch) {
  const std::vector<IntVector> basis{{2, 1, 0}, {0, 1, 3}, {1, -1, 1}};
  const auto found = short_vectors(basis, 12);
  std::set<IntVector> got(found.begin(), found.end());
  EXPECT_EQ(got.size(), found.size());
  std::set<IntVector> ref;
  for (int a = -6; a <= 6; ++a) {
    for (int b = -6; b <= 6; ++b) {
      for (int c = -6; c <= 6; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        IntVector v(3);
        for (int i = 0; i < 3; ++i) v[i] = a * basis[0][i] + b * basis[1][i] + c * basis[2][i];
        if (dot64(v, v) <= 12) ref.insert(v);
      }
    }
  }
  EXPECT_EQ(got, ref);
}

TEST(Isometry, Examples) {
  const auto four = integer_kernel(standard_embedding(Plumbing({Chain{2, 2, 2}})));
  EXPECT_TRUE(is_isometric_to_chain(four, {4}));
  EXPECT_FALSE(is_isometric_to_chain(four, {5}));

  const auto nine = integer_kernel(standard_embedding(Plumbing({Chain{2, 2, 2, 3}})));
  EXPECT_EQ(nine.size(), 2u);
  EXPECT_TRUE(is_isometric_to_chain(nine, {5, 2}));
  EXPECT_FALSE(is_isometric_to_chain(nine, {3, 3}));
}

TEST(Complement, HandCases) {
  EXPECT_TRUE(orthogonal_complement_check(Fraction(2, 1)));
  EXPECT_TRUE(orthogonal_complement_check(Fraction(4, 1)));
  EXPECT_TRUE(orthogonal_complement_check(Fraction(9, 2)));
  // Later chain vectors come from shifted cosets here.
  EXPECT_TRUE(orthogonal_complement_check(Fraction(31, 13)));
  EXPECT_TRUE(orthogonal_complement_check(Fraction(55, 26)));
  // Long runs of twos with one heavier vertex.
  EXPECT_TRUE(orthogonal_complement_check(Fraction(64, 21)));
  EXPECT_TRUE(orthogonal_complement_check(Fraction(61, 58)));
}

TEST(Complement, AllFractionsUpTo64) {
  for (const auto& [p, q] : oracle::reduced_fractions(64)) {
    ASSERT_TRUE(orthogonal_complement_check(Fraction(p, q))) << p << "/" << q;
  }
}
