#include <gtest/gtest.h>

#include "floer/catalog.hpp"
#include "floer/random.hpp"
#include "floer/specseq.hpp"
#include "floer/verify.hpp"

using floer::BitMatrix;
using floer::FloerComplex;
using floer::Page;
using floer::Rng;
using floer::Window;

namespace {

std::shared_ptr<const floer::LaurentComplex> laurent(const FloerComplex& c) {
  return floer::detail::suite_laurent(c);
}

FloerComplex random_valid(Rng& rng) {
  const int n = rng.between(1, 6);
  const int N = rng.between(2, n + 2);
  return floer::random_complex(rng, n, N);
}

// Oracle for E_infinity: the filtration F^p H^l = image of H(F^p) in H^l,
// computed from ker d~ and im d~ alone.
std::size_t filtered_homology(const floer::LaurentComplex& lc, int l, int p) {
  const auto cols = lc.coords_at_least(l, p);
  const auto k = floer::gf2::kernel_basis(lc.dtilde(l).select_columns(cols));
  BitMatrix z(lc.dim(l), k.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t c = 0; c < k.cols(); ++c) z.set(cols[i], c, k.get(i, c));
  }
  const auto b = lc.dtilde(l - 1);
  return floer::gf2::rank(BitMatrix::hstack(z, b)) - floer::gf2::rank(b);
}

std::size_t einf_oracle(const floer::LaurentComplex& lc, int p, int l) {
  return filtered_homology(lc, l, p) - filtered_homology(lc, l, p + 1);
}

}  // namespace

TEST(PageTest, PageZeroIsTheChainComplex) {
  FloerComplex c(3, 2, {1, 2, 2, 1});
  c.set_op(0, 0, BitMatrix::from_rows({"1", "0"}));
  const auto lc = laurent(c);
  const auto pg = floer::page(lc, 0, floer::check_window(c));
  for (const auto& [key, cell] : pg.cells()) {
    EXPECT_EQ(cell.dim(), c.dim_at(cell.l - cell.p * 2));
  }
  // delta_0 is d_0 itself on the p = 0 column.
  EXPECT_EQ(floer::gf2::rank(*pg.delta(0, 0)), 1u);
}

TEST(PageTest, PageOneIsMorseHomology) {
  const auto c = floer::theorem_a_model();
  const auto pg = floer::page(laurent(c), 1, floer::check_window(c));
  for (int q = 0; q <= 4; ++q) EXPECT_EQ(pg.dim(0, q), static_cast<std::size_t>(c.dims()[q]));
}

TEST(PageTest, ZeroHigherOperatorsFreezeAtPageOne) {
  FloerComplex c(4, 2, {1, 1, 2, 1, 1});
  c.set_op(0, 1, BitMatrix::from_rows({"1", "0"}));
  const auto lc = laurent(c);
  const auto w = floer::check_window(c);
  const auto one = floer::page(lc, 1, w);
  for (int r = 1; r <= c.nu() + 1; ++r) {
    const auto pg = floer::page(lc, r, w);
    EXPECT_TRUE(floer::differentials_vanish(pg));
    EXPECT_EQ(floer::cell_dims(pg), floer::cell_dims(one));
  }
}

TEST(PageTest, TurnWithZeroDifferentialKeepsDims) {
  FloerComplex c(3, 2, {1, 0, 2, 1});
  const auto lc = laurent(c);
  const Window w = floer::expand_for_turns(floer::check_window(c), 1);
  const auto pg = floer::page(lc, 1, w);
  const auto next = floer::turn(pg);
  for (const auto& [key, cell] : next.cells()) {
    EXPECT_EQ(cell.dim(), pg.at(key.first, key.second).dim());
  }
}

TEST(PageTest, TheoremAModelCollapsesAtPageTwo) {
  const auto c = floer::theorem_a_model();
  const auto lc = laurent(c);
  const Window w = floer::check_window(c);
  const auto p1 = floer::page(lc, 1, floer::expand_for_turns(w, 1));
  EXPECT_FALSE(floer::differentials_vanish(p1));
  const auto p2 = floer::turn(p1);
  for (const auto& [key, cell] : p2.cells()) EXPECT_EQ(cell.dim(), 0u);
  const auto einf = floer::e_infinity(lc, w);
  for (const auto& [key, cell] : einf.cells()) EXPECT_EQ(cell.dim(), 0u);
}

TEST(PageTest, WindowErrors) {
  const auto c = floer::theorem_a_model();
  const auto lc = laurent(c);
  EXPECT_THROW(floer::page(lc, 1, Window{1, 0, 0, 0}), floer::WindowTooSmall);
  EXPECT_THROW(floer::page(lc, 1, Window{0, 0, lc->lo(), 0}), floer::RangeError);
  EXPECT_THROW(floer::page(lc, -1, floer::check_window(c)), floer::RangeError);
  const auto tiny = floer::page(lc, 1, Window{0, 0, 0, 0});
  EXPECT_THROW(floer::turn(tiny), floer::WindowTooSmall);
  const auto narrow = floer::e_infinity(lc, Window{0, 0, 0, 1});
  EXPECT_THROW(floer::total_degree_sum(narrow, 4), floer::WindowTooSmall);
  EXPECT_THROW(narrow.cell(5, 0), floer::RangeError);
}

TEST(PageTest, StatementFiveTrivialCases) {
  const FloerComplex zero(3, 2, {0, 0, 0, 0});
  EXPECT_TRUE(floer::check_statement5(*laurent(zero), floer::check_window(zero)));
  const FloerComplex flat(3, 2, {1, 2, 0, 1});
  EXPECT_TRUE(floer::check_statement5(*laurent(flat), floer::check_window(flat)));
  const auto einf = floer::e_infinity(laurent(flat), floer::check_window(flat));
  EXPECT_EQ(floer::column_sum(einf, 0), 4u);
}

TEST(SpecSeqProperty, SuiteOnRandomComplexes) {
  floer::SuiteOptions opt;
  opt.seed = 5;
  opt.trials = 150;
  for (const auto& p : floer::run_property_suite(opt)) {
    EXPECT_EQ(p.failed, 0) << p.name << " first failure: "
                           << (p.first_failure ? p.first_failure->dump() : "");
    EXPECT_EQ(p.passed, 150) << p.name;
  }
}

TEST(SpecSeqProperty, EInfinityMatchesFilteredHomology) {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    const auto c = random_valid(rng);
    const auto lc = laurent(c);
    const auto einf = floer::e_infinity(lc, floer::check_window(c));
    for (const auto& [key, cell] : einf.cells()) {
      EXPECT_EQ(cell.dim(), einf_oracle(*lc, key.first, key.second));
    }
  }
}

TEST(SpecSeqProperty, TurnedPagesCarryMatchingDifferentials) {
  // The page differentials from the two routes have equal ranks cell by cell.
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_valid(rng);
    const auto lc = laurent(c);
    const auto w = floer::check_window(c);
    for (int r = 1; r <= c.nu(); ++r) {
      const auto direct = floer::page(lc, r, w);
      const auto turned = floer::page_by_turns(lc, r, w);
      for (const auto& [key, cell] : direct.cells()) {
        const auto& twin = turned.at(key.first, key.second);
        ASSERT_EQ(cell.delta.has_value(), twin.delta.has_value());
        if (cell.delta) {
          EXPECT_EQ(floer::gf2::rank(*cell.delta), floer::gf2::rank(*twin.delta));
        }
      }
    }
  }
}

TEST(SpecSeqProperty, TurnRecursionOnDims) {
  // dim V_{r+1} = dim V_r - rank out - rank in.
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_valid(rng);
    const auto lc = laurent(c);
    const auto w = floer::check_window(c);
    for (int r = 0; r <= c.nu(); ++r) {
      const int dp = std::max(r, 1);
      const auto pg = floer::page(lc, r, Window{w.p_lo - dp, w.p_hi + dp, w.l_lo - 1, w.l_hi + 1});
      const auto next = floer::page(lc, r + 1, floer::shrink(pg.window(), r));
      for (const auto& [key, cell] : next.cells()) {
        const auto& here = pg.at(key.first, key.second);
        const auto& from = pg.at(key.first - r, key.second - 1);
        const std::size_t out = here.delta ? floer::gf2::rank(*here.delta) : 0;
        const std::size_t in = from.delta ? floer::gf2::rank(*from.delta) : 0;
        EXPECT_EQ(cell.dim(), here.dim() - out - in);
      }
    }
  }
}
