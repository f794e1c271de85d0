#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "f2coh/gf2.hpp"

namespace f2coh::gf2 {
namespace {

using Dense = std::vector<std::vector<int>>;

// Unpacked Gauss-Jordan elimination, one int per entry.
std::size_t naive_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, unsigned density = 2) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % density == 0) m.set(r, c);
  return m;
}

Dense unpack(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
  return d;
}

void expect_echelon_invariants(const EchelonBasis& e) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (i) {
      EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
    }
    for (std::size_t c = 0; c < e.pivots[i]; ++c) EXPECT_FALSE(e.matrix.get(i, c));
    for (std::size_t j = 0; j < e.rank(); ++j)
      EXPECT_EQ(e.matrix.get(j, e.pivots[i]), i == j);
  }
  // padding beyond cols stays clear
  const std::size_t tail = e.cols() % kWordBits;
  if (tail && e.rank()) {
    for (std::size_t i = 0; i < e.rank(); ++i) EXPECT_EQ(e.matrix.row(i).back() >> tail, 0u);
  }
}

TEST(Rref, Identity) {
  auto e = rref(BitMatrix::identity(3));
  EXPECT_EQ(e.rank(), 3u);
  EXPECT_EQ(e.matrix, BitMatrix::identity(3));
}

TEST(Rref, DuplicateRowCancels) {
  auto e = rref(BitMatrix::from_strings({"11", "11"}));
  EXPECT_EQ(e.rank(), 1u);
  EXPECT_EQ(e.matrix.to_string(), "11\n");
}

TEST(Rref, AgreesWithNaiveOn64x80) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto m = random_matrix(64, 80, rng);
    auto e = rref(m);
    EXPECT_EQ(e.rank(), naive_rank(unpack(m)));
    expect_echelon_invariants(e);
  }
}

TEST(Rref, PreservesRowSpaceAndIsIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto m = random_matrix(1 + rng() % 40, 1 + rng() % 130, rng, 1 + rng() % 4);
    auto e = rref(m);
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(member(m.row_vector(r), e).member);
    auto again = rref(e.matrix);
    EXPECT_TRUE(same_row_space(e, again));
  }
}

TEST(Kernel, ZeroMatrixAndIdentity) {
  EXPECT_EQ(kernel(BitMatrix(2, 3)).rank(), 3u);
  EXPECT_EQ(kernel(BitMatrix::identity(5)).rank(), 0u);
}

TEST(Kernel, RandomSatisfiesRankNullity) {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto m = random_matrix(40, 60, rng, 1 + rng() % 5);
    auto k = kernel(m);
    EXPECT_EQ(k.rank() + rank(m), m.cols());
    for (std::size_t r = 0; r < k.rank(); ++r) EXPECT_FALSE(m.apply(k.matrix.row_vector(r)).any());
  }
}

TEST(Member, Basics) {
  auto space = rref(BitMatrix::from_strings({"1010", "0110"}));
  EXPECT_TRUE(member(BitVector(4), space).member);
  auto v = BitVector::from_string("1010");
  auto single = rref(BitMatrix::from_strings({"1010"}));
  auto res = member(v, single);
  ASSERT_TRUE(res.member);
  EXPECT_EQ(res.coordinates, std::vector<std::size_t>{0});
  EXPECT_TRUE(member(BitVector::from_string("1100"), space).member);
  EXPECT_FALSE(member(BitVector::from_string("0001"), space).member);
  EXPECT_THROW(member(BitVector(3), space), DimensionError);
}

// Oracle: does v reduce to zero against the naive RREF rows, processing
// pivots one by one?
bool naive_member(const Dense& rows, std::vector<int> v) {
  Dense m = rows;
  m.push_back(v);
  return naive_rank(rows) == naive_rank(m);
}

TEST(Member, AgreesWithOracleAndCoordinatesSum) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t cols = 1 + rng() % 70;
    auto m = random_matrix(1 + rng() % 12, cols, rng, 1 + rng() % 3);
    auto e = rref(m);
    auto v = random_matrix(1, cols, rng, 1 + rng() % 3).row_vector(0);
    if (rng() % 2) v = m.row_vector(0);
    std::vector<int> dense(cols);
    for (std::size_t c = 0; c < cols; ++c) dense[c] = v.test(c);
    auto res = member(v, e);
    EXPECT_EQ(res.member, naive_member(unpack(m), dense));
    if (res.member) {
      BitVector sum(cols);
      for (auto r : res.coordinates) sum ^= e.matrix.row_vector(r);
      EXPECT_EQ(sum, v);
    }
  }
}

TEST(SemiEchelon, MatchesRrefSpaceAndCanonicalReduction) {
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    const std::size_t cols = 1 + rng() % 150;
    auto m = random_matrix(1 + rng() % 60, cols, rng, 1 + rng() % 6);
    SemiEchelon s(cols);
    for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row_vector(r));
    auto e = rref(m);
    EXPECT_EQ(s.rank(), e.rank());
    EXPECT_TRUE(same_row_space(s.to_rref(), e));
    // Two vectors in the same coset reduce to the same representative.
    auto v = random_matrix(1, cols, rng).row_vector(0);
    auto w = v;
    w ^= m.row_vector(rng() % m.rows());
    s.reduce(v);
    s.reduce(w);
    EXPECT_EQ(v, w);
  }
}

// 1,000 random matrices up to 128x128: packed and naive elimination agree.
TEST(Rref, PackedAgreesWithNaiveOnThousandMatrices) {
  std::mt19937 rng(23);
  for (int i = 0; i < 1000; ++i) {
    auto m = random_matrix(1 + rng() % 128, 1 + rng() % 128, rng, 1 + rng() % 8);
    ASSERT_EQ(rank(m), naive_rank(unpack(m))) << "matrix " << i;
  }
}

TEST(BitMatrix, TransposeAndDump) {
  auto m = BitMatrix::from_strings({"110", "001"});
  EXPECT_EQ(m.transpose().to_string(), "10\n10\n01\n");
  EXPECT_EQ(m.transpose().transpose(), m);
}

}  // namespace
}  // namespace f2coh::gf2
