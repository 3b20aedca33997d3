#pragma once

// The spectral sequence of the filtered complex (F^p C~, d~), where F^p C~ is
// spanned by the summands with index >= p.
//
// Cells are indexed by (p, l) internally, l = p + q the total degree, and by
// (p, q) on the public surface. For a page r:
//   Z_r^p(l) = { x in F^p C~^l : d~x in F^{p+r} }
//   B_r^p(l) = d~ Z_r^{p-r}(l-1)
//   E_r^p(l) = Z_r^p(l) / (Z_{r-1}^{p+1}(l) + B_{r-1}^p(l))
// and the page differential goes (p, q) -> (p+r, q-r+1).
//
// Two constructions are provided. page() evaluates the quotient directly from
// the Z/B definitions. turn() builds page r+1 from page r alone by taking
// ker/im of the page differential and lifting kernel classes through a
// zig-zag. They share nothing except the final classification of d~(rep).

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/errors.hpp"
#include "floer/gf2.hpp"

namespace floer {

// A rectangle of cells: filtration indices [p_lo, p_hi] by total degrees
// [l_lo, l_hi].
struct Window {
  int p_lo = 0;
  int p_hi = 0;
  int l_lo = 0;
  int l_hi = 0;

  bool empty() const { return p_lo > p_hi || l_lo > l_hi; }
  bool contains(int p, int l) const {
    return p >= p_lo && p <= p_hi && l >= l_lo && l <= l_hi;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

// Smallest window on which the convergence checks are meaningful: every
// summand of the total degrees 0..N-1 and every q for the p = 0 column.
inline Window check_window(const FloerComplex& c) {
  const int nu = c.nu();
  return {-nu, 0, -nu * c.period(), std::max(c.top(), c.period() - 1)};
}

struct Cell {
  int p = 0;
  int l = 0;
  BitMatrix reps;     // chain representatives of a basis of the cell
  BitMatrix denom;    // basis of Z_{r-1}^{p+1} + B_{r-1}^p
  BitMatrix zpart;    // basis of Z_{r-1}^{p+1}
  BitMatrix bpart_b;  // spans B_{r-1}^p ...
  BitMatrix bpart_y;  // ... with bpart_b = d~ bpart_y column by column
  std::optional<BitMatrix> delta;  // page differential, when the target is materialized

  int q() const { return l - p; }
  std::size_t dim() const { return reps.cols(); }
};

class Page {
 public:
  Page(std::shared_ptr<const LaurentComplex> lc, int r, Window w)
      : lc_(std::move(lc)), r_(r), window_(w) {}

  int r() const { return r_; }
  const Window& window() const { return window_; }
  const LaurentComplex& laurent() const { return *lc_; }
  const std::shared_ptr<const LaurentComplex>& laurent_ptr() const { return lc_; }

  bool contains(int p, int q) const { return window_.contains(p, p + q); }
  const Cell& cell(int p, int q) const { return at(p, p + q); }
  std::size_t dim(int p, int q) const { return cell(p, q).dim(); }
  // The page differential out of (p, q), or nullptr when its target
  // (p+r, q-r+1) lies outside the window.
  const BitMatrix* delta(int p, int q) const {
    const auto& c = cell(p, q);
    return c.delta ? &*c.delta : nullptr;
  }

  // Cells ordered by (p, l).
  const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }

  const Cell& at(int p, int l) const {
    const auto it = cells_.find({p, l});
    if (it == cells_.end()) {
      throw RangeError("cell (p=" + std::to_string(p) + ", q=" + std::to_string(l - p) +
                       ") outside the page window");
    }
    return it->second;
  }
  Cell& at_mut(int p, int l) { return cells_[{p, l}]; }

 private:
  std::shared_ptr<const LaurentComplex> lc_;
  int r_;
  Window window_;
  std::map<std::pair<int, int>, Cell> cells_;
};

namespace detail {

// Lifts a matrix whose rows are indexed by `coords` into the full ambient space.
inline BitMatrix embed(const BitMatrix& k, const std::vector<std::size_t>& coords,
                       std::size_t ambient) {
  BitMatrix out(ambient, k.cols());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t c = 0; c < k.cols(); ++c) {
      if (k.get(i, c)) out.set(coords[i], c, true);
    }
  }
  return out;
}

// Basis of Z_r^p(l).
inline BitMatrix zspace(const LaurentComplex& lc, int r, int p, int l) {
  const auto cols = lc.coords_at_least(l, p);
  const auto rows = lc.coords_below(l + 1, p + r);
  const auto m = lc.dtilde(l).select_rows(rows).select_columns(cols);
  return embed(gf2::kernel_basis(m), cols, lc.dim(l));
}

// Splits the column basis of a stacked [top; bottom] matrix.
inline std::pair<BitMatrix, BitMatrix> reduce_pairs(const BitMatrix& b, const BitMatrix& y) {
  const auto basis = gf2::image_basis(BitMatrix::vstack(b, y));
  return {basis.block(0, 0, b.rows(), basis.cols()),
          basis.block(b.rows(), 0, y.rows(), basis.cols())};
}

// Coordinates of each column of `v` on the reps of `target`, modulo the
// target's denominator.
inline BitMatrix classify(const Cell& target, const BitMatrix& v) {
  const auto basis = BitMatrix::hstack(target.denom, target.reps);
  const auto x = gf2::solve(basis, v);
  if (!x) throw std::logic_error("page differential leaves the target Z-space");
  return x->block(target.denom.cols(), 0, target.reps.cols(), v.cols());
}

inline void fill_deltas(Page& pg) {
  const auto& lc = pg.laurent();
  const int r = pg.r();
  const Window w = pg.window();
  for (int p = w.p_lo; p <= w.p_hi; ++p) {
    for (int l = w.l_lo; l <= w.l_hi; ++l) {
      if (!w.contains(p + r, l + 1)) continue;
      auto& src = pg.at_mut(p, l);
      const auto& dst = pg.at(p + r, l + 1);
      src.delta = classify(dst, lc.dtilde(l) * src.reps);
    }
  }
}

inline void check_materialized(const LaurentComplex& lc, const Window& w) {
  if (w.empty()) throw WindowTooSmall("page window is empty");
  if (w.l_lo - 1 < lc.lo() || w.l_hi + 2 > lc.hi()) {
    throw RangeError("page window degrees [" + std::to_string(w.l_lo) + "," +
                     std::to_string(w.l_hi) + "] need C~ on [" +
                     std::to_string(w.l_lo - 1) + "," + std::to_string(w.l_hi + 2) +
                     "], materialized [" + std::to_string(lc.lo()) + "," +
                     std::to_string(lc.hi()) + "]");
  }
}

}  // namespace detail

// Page r evaluated straight from the Z/B definitions.
inline Page page(std::shared_ptr<const LaurentComplex> lc, int r, const Window& w) {
  if (r < 0) throw RangeError("page index must be >= 0");
  detail::check_materialized(*lc, w);
  Page pg(lc, r, w);
  for (int p = w.p_lo; p <= w.p_hi; ++p) {
    for (int l = w.l_lo; l <= w.l_hi; ++l) {
      auto& cell = pg.at_mut(p, l);
      cell.p = p;
      cell.l = l;
      const auto z = detail::zspace(*lc, r, p, l);
      cell.zpart = gf2::image_basis(detail::zspace(*lc, r - 1, p + 1, l));
      const auto y = detail::zspace(*lc, r - 1, p - r + 1, l - 1);
      std::tie(cell.bpart_b, cell.bpart_y) = detail::reduce_pairs(lc->dtilde(l - 1) * y, y);
      cell.denom = gf2::image_basis(BitMatrix::hstack(cell.zpart, cell.bpart_b));
      cell.reps = gf2::extend_basis(cell.denom, z);
    }
  }
  detail::fill_deltas(pg);
  return pg;
}

inline Page page(const LaurentComplex& lc, int r, const Window& w) {
  return page(std::make_shared<const LaurentComplex>(lc), r, w);
}

// The window left after one turn from page r.
inline Window shrink(const Window& w, int r) {
  const int dp = std::max(r, 1);
  return {w.p_lo + dp, w.p_hi - dp, w.l_lo + 1, w.l_hi - 1};
}

// The window page 0 needs so that `turns` turns leave `w`.
inline Window expand_for_turns(const Window& w, int turns) {
  Window out = w;
  for (int r = 0; r < turns; ++r) {
    const int dp = std::max(r, 1);
    out.p_lo -= dp;
    out.p_hi += dp;
    out.l_lo -= 1;
    out.l_hi += 1;
  }
  return out;
}

// Page r+1 from page r: ker(delta_r)/im(delta_r), carried at chain level.
inline Page turn(const Page& pg) {
  const auto& lc = pg.laurent();
  const int r = pg.r();
  const Window w = shrink(pg.window(), r);
  if (w.empty()) {
    throw WindowTooSmall("turning page " + std::to_string(r) +
                         " leaves no cells; enlarge the window");
  }
  Page next(pg.laurent_ptr(), r + 1, w);
  for (int p = w.p_lo; p <= w.p_hi; ++p) {
    for (int l = w.l_lo; l <= w.l_hi; ++l) {
      const auto& old = pg.at(p, l);
      const auto& target = pg.at(p + r, l + 1);
      const auto& upper = pg.at(p + 1, l);
      const auto& source = pg.at(p - r, l - 1);

      // Kernel classes, moved into Z_{r+1} by subtracting a preimage of the
      // boundary part of d~x.
      const auto x = old.reps * gf2::kernel_basis(*old.delta);
      const auto dx = lc.dtilde(l) * x;
      const auto c = gf2::solve(BitMatrix::hstack(target.zpart, target.bpart_b), dx);
      if (!c) throw std::logic_error("kernel class of the page differential does not lift");
      auto lifted = x;
      lifted += target.bpart_y *
                c->block(target.zpart.cols(), 0, target.bpart_b.cols(), x.cols());

      auto& cell = next.at_mut(p, l);
      cell.p = p;
      cell.l = l;
      // Z_r^{p+1} is everything page r saw at (p+1, l).
      cell.zpart = gf2::image_basis(BitMatrix::hstack(
          BitMatrix::hstack(upper.reps, upper.zpart), upper.bpart_b));
      // B_r^p adds the images of page-r classes r steps below.
      std::tie(cell.bpart_b, cell.bpart_y) = detail::reduce_pairs(
          BitMatrix::hstack(old.bpart_b, lc.dtilde(l - 1) * source.reps),
          BitMatrix::hstack(old.bpart_y, source.reps));
      cell.denom = gf2::image_basis(BitMatrix::hstack(cell.zpart, cell.bpart_b));
      cell.reps = gf2::extend_basis(cell.denom, lifted);
    }
  }
  detail::fill_deltas(next);
  return next;
}

// Page r reached by turning from page 0, arranged to end on window `w`.
inline Page page_by_turns(std::shared_ptr<const LaurentComplex> lc, int r, const Window& w) {
  const Window start = expand_for_turns(w, r);
  detail::check_materialized(*lc, start);
  Page pg = page(lc, 0, start);
  for (int s = 0; s < r; ++s) pg = turn(pg);
  return pg;
}

inline Page page_by_turns(const LaurentComplex& lc, int r, const Window& w) {
  return page_by_turns(std::make_shared<const LaurentComplex>(lc), r, w);
}

// Page nu+1, where the sequence has stopped.
inline Page e_infinity(std::shared_ptr<const LaurentComplex> lc, const Window& w) {
  const int nu = lc->base().nu();
  if (w.l_lo - 1 < lc->lo() || w.l_hi + 2 > lc->hi()) {
    throw WindowTooSmall("E_infinity window is not interior to the materialized degrees");
  }
  return page(std::move(lc), nu + 1, w);
}

inline Page e_infinity(const LaurentComplex& lc, const Window& w) {
  return e_infinity(std::make_shared<const LaurentComplex>(lc), w);
}

// Sum of the cells on the antidiagonal p + q = l.
inline std::size_t total_degree_sum(const Page& pg, int l) {
  const auto& c = pg.laurent().base();
  const int p_min = -floor_div(-(l - c.top()), c.period());
  const int p_max = floor_div(l, c.period());
  std::size_t total = 0;
  for (int p = p_min; p <= p_max; ++p) {
    if (!pg.window().contains(p, l)) {
      throw WindowTooSmall("total degree " + std::to_string(l) +
                           " has a summand outside the page window");
    }
    total += pg.at(p, l).dim();
  }
  return total;
}

// Sum of the cells in the column p; only q with 0 <= p+q-pN <= n can carry
// anything.
inline std::size_t column_sum(const Page& pg, int p) {
  const auto& c = pg.laurent().base();
  std::size_t total = 0;
  for (int l = p * c.period(); l <= p * c.period() + c.top(); ++l) {
    if (!pg.window().contains(p, l)) {
      throw WindowTooSmall("column p=" + std::to_string(p) + " leaves the page window");
    }
    total += pg.at(p, l).dim();
  }
  return total;
}

inline bool sum_rule_holds(const Page& einf) {
  const auto& lc = einf.laurent();
  for (int l = 0; l < lc.base().period(); ++l) {
    if (total_degree_sum(einf, l) != homology(lc, l)) return false;
  }
  return true;
}

// For every p in the window: the column sum of E_infinity equals the total
// Floer homology over one period.
inline bool check_statement5(const LaurentComplex& lc, const Window& w) {
  const auto einf = e_infinity(lc, w);
  std::size_t hf = 0;
  for (auto h : floer_homology(lc)) hf += h;
  for (int p = w.p_lo; p <= w.p_hi; ++p) {
    if (column_sum(einf, p) != hf) return false;
  }
  return true;
}

// No cell outside 0 <= p+q-pN <= n is nonzero.
inline bool support_bound_holds(const Page& pg) {
  const auto& c = pg.laurent().base();
  for (const auto& [key, cell] : pg.cells()) {
    const int deg = cell.l - cell.p * c.period();
    if ((deg < 0 || deg > c.top()) && cell.dim() != 0) return false;
  }
  return true;
}

inline bool differentials_vanish(const Page& pg) {
  for (const auto& [key, cell] : pg.cells()) {
    if (cell.delta && !cell.delta->is_zero()) return false;
  }
  return true;
}

// delta_r o delta_r = 0 wherever both maps are materialized.
inline bool delta_squares_to_zero(const Page& pg) {
  const int r = pg.r();
  for (const auto& [key, cell] : pg.cells()) {
    if (!cell.delta) continue;
    const auto& mid = pg.at(cell.p + r, cell.l + 1);
    if (!mid.delta) continue;
    if (!(*mid.delta * *cell.delta).is_zero()) return false;
  }
  return true;
}

// Dimension grid (p, q) -> dim, in (p, l) order.
inline std::vector<std::tuple<int, int, std::size_t>> cell_dims(const Page& pg) {
  std::vector<std::tuple<int, int, std::size_t>> out;
  for (const auto& [key, cell] : pg.cells()) out.emplace_back(cell.p, cell.q(), cell.dim());
  return out;
}

}  // namespace floer
