#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "floer/gf2.hpp"
#include "floer/random.hpp"

using floer::Rng;
using floer::gf2::BitMatrix;
using floer::gf2::BitVector;
namespace gf2 = floer::gf2;

namespace {

// Brute-force oracles: enumerate all 2^cols inputs.
BitVector from_mask(std::size_t n, unsigned mask) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) v.set(i, true);
  }
  return v;
}

std::size_t brute_rank(const BitMatrix& m) {
  std::set<std::string> image;
  for (unsigned mask = 0; mask < (1U << m.cols()); ++mask) {
    image.insert((m * from_mask(m.cols(), mask)).to_string());
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < image.size()) ++r;
  return r;
}

std::size_t brute_kernel_size(const BitMatrix& m) {
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1U << m.cols()); ++mask) {
    if ((m * from_mask(m.cols(), mask)).is_zero()) ++count;
  }
  return count;
}

BitMatrix permuted(const BitMatrix& m, const std::vector<std::size_t>& rp,
                   const std::vector<std::size_t>& cp) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(rp[r], cp[c], m.get(r, c));
  }
  return out;
}

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

const BitMatrix kTriangle = BitMatrix::from_rows({"110", "011", "101"});

}  // namespace

TEST(BitVectorTest, BasicOps) {
  BitVector v(70);
  EXPECT_TRUE(v.is_zero());
  v.set(3, true);
  v.set(69, true);
  EXPECT_EQ(v.popcount(), 2u);
  EXPECT_EQ(v.lowest(), 3u);
  v.flip(3);
  EXPECT_EQ(v.lowest(), 69u);
  auto u = BitVector::unit(70, 69);
  EXPECT_TRUE(u.dot(v));
  v ^= u;
  EXPECT_TRUE(v.is_zero());
}

TEST(BitMatrixTest, RowLiteralRoundTrip) {
  EXPECT_EQ(kTriangle.to_rows(), (std::vector<std::string>{"110", "011", "101"}));
  const std::vector<std::string> empty_rows{"", ""};
  const auto e = BitMatrix::from_rows(empty_rows, 0);
  EXPECT_EQ(e.rows(), 2u);
  EXPECT_EQ(e.cols(), 0u);
  EXPECT_EQ(e.to_rows(), empty_rows);
}

TEST(BitMatrixTest, BadLiteralIsParseError) {
  EXPECT_THROW(BitMatrix::from_rows({"10", "1"}), floer::ParseError);
  EXPECT_THROW(BitMatrix::from_rows({"12"}), floer::ParseError);
}

TEST(BitMatrixTest, ProductAndTranspose) {
  const auto sq = kTriangle * kTriangle;
  EXPECT_EQ(sq.to_rows(), (std::vector<std::string>{"101", "110", "011"}));
  EXPECT_EQ(kTriangle.transpose().transpose(), kTriangle);
  EXPECT_THROW(kTriangle * BitMatrix(2, 2), floer::DimensionMismatch);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(gf2::rank(BitMatrix::identity(3)), 3u);
  EXPECT_EQ(gf2::rank(BitMatrix(4, 7)), 0u);
  EXPECT_EQ(gf2::rank(kTriangle), 2u);
  EXPECT_EQ(gf2::rank(BitMatrix(0, 5)), 0u);
  EXPECT_EQ(gf2::rank(BitMatrix(5, 0)), 0u);
}

TEST(KernelTest, Examples) {
  EXPECT_EQ(gf2::kernel_basis(BitMatrix::identity(2)).cols(), 0u);
  EXPECT_EQ(gf2::kernel_basis(BitMatrix(2, 3)).cols(), 3u);
  const auto k = gf2::kernel_basis(kTriangle);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.column(0).to_string(), "111");
}

TEST(ImageTest, Examples) {
  EXPECT_EQ(gf2::image_basis(BitMatrix::identity(3)).cols(), 3u);
  EXPECT_EQ(gf2::image_basis(BitMatrix(4, 7)).cols(), 0u);
  EXPECT_EQ(gf2::image_basis(kTriangle).cols(), 2u);
}

TEST(QuotientTest, Examples) {
  const auto id = BitMatrix::identity(3);
  EXPECT_EQ(gf2::quotient_dim(id, id.block(0, 0, 3, 1)), 2u);
  EXPECT_EQ(gf2::quotient_dim(kTriangle, kTriangle), 0u);
  const auto big = BitMatrix::from_rows({"10", "01", "00"});
  const auto small = BitMatrix::from_rows({"1", "1", "0"});
  EXPECT_EQ(gf2::quotient_dim(big, small), 1u);
  EXPECT_THROW(gf2::quotient_dim(big, BitMatrix(2, 1)), floer::DimensionMismatch);
}

TEST(SolveTest, Examples) {
  const auto b = BitVector::unit(3, 1);
  EXPECT_EQ(*gf2::solve(BitMatrix::identity(3), b), b);
  EXPECT_FALSE(gf2::solve(BitMatrix(3, 3), b).has_value());
  const auto m = BitMatrix::from_rows({"11", "01"});
  BitVector rhs(2);
  rhs.set(0, true);
  rhs.set(1, true);
  EXPECT_EQ(gf2::solve(m, rhs)->to_string(), "01");
}

TEST(Gf2Property, RankMatchesEnumeration) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto m = floer::random_matrix(rng.below(7), rng.below(8), rng);
    EXPECT_EQ(gf2::rank(m), brute_rank(m));
    EXPECT_EQ(std::size_t{1} << gf2::kernel_basis(m).cols(), brute_kernel_size(m));
  }
}

TEST(Gf2Property, RankNullity) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto m = floer::random_matrix(rng.below(9), rng.below(9), rng);
    const auto k = gf2::kernel_basis(m);
    EXPECT_EQ(gf2::rank(m) + k.cols(), m.cols());
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(gf2::rank(k), k.cols());
  }
}

TEST(Gf2Property, ImageColumnsAreSolvable) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto m = floer::random_matrix(rng.below(9), rng.below(9), rng);
    const auto im = gf2::image_basis(m);
    EXPECT_EQ(im.cols(), gf2::rank(m));
    for (std::size_t c = 0; c < im.cols(); ++c) {
      const auto x = gf2::solve(m, im.column(c));
      ASSERT_TRUE(x.has_value());
      EXPECT_EQ(m * *x, im.column(c));
    }
  }
}

TEST(Gf2Property, RankPermutationInvariant) {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto m = floer::random_matrix(rng.below(9), rng.below(9), rng);
    const auto p = permuted(m, shuffled(m.rows(), rng), shuffled(m.cols(), rng));
    EXPECT_EQ(gf2::rank(p), gf2::rank(m));
  }
}

TEST(Gf2Property, QuotientIdentity) {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.below(8);
    const auto big = floer::random_matrix(n, rng.below(6), rng);
    const auto small = floer::random_matrix(n, rng.below(6), rng);
    EXPECT_EQ(gf2::quotient_dim(big, small) + gf2::rank(small),
              gf2::rank(BitMatrix::hstack(big, small)));
  }
}

TEST(Gf2Property, InverseAndMatrixSolve) {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.below(7);
    const auto g = floer::random_invertible(n, rng);
    const auto gi = gf2::inverse(g);
    ASSERT_TRUE(gi.has_value());
    EXPECT_EQ(g * *gi, BitMatrix::identity(n));
    const auto rhs = floer::random_matrix(n, 3, rng);
    EXPECT_EQ(g * *gf2::solve(g, rhs), rhs);
  }
  EXPECT_FALSE(gf2::inverse(kTriangle).has_value());
}

TEST(Gf2Property, ExtendBasis) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.below(8);
    const auto base = gf2::image_basis(floer::random_matrix(n, rng.below(5), rng));
    const auto more = floer::random_matrix(n, rng.below(6), rng);
    const auto ext = gf2::extend_basis(base, more);
    EXPECT_EQ(base.cols() + ext.cols(), gf2::rank(BitMatrix::hstack(base, more)));
    EXPECT_EQ(gf2::rank(BitMatrix::hstack(base, ext)), base.cols() + ext.cols());
    for (std::size_t c = 0; c < more.cols(); ++c) {
      EXPECT_TRUE(gf2::in_span(BitMatrix::hstack(base, ext), more.column(c)));
    }
  }
}
