#pragma once

// Graded Z2 complexes carrying a Floer-type operator family, and their
// unrolling over the Laurent ring Z2[T, T^-1] (deg T = N).
//
// A FloerComplex has chain groups C^0..C^n and operators
//   d_j^{(i)} : C^i -> C^{i+1-jN},   0 <= j <= nu = floor((n+1)/N).
// The total operator d = d_0 + ... + d_nu squares to zero, which unrolls into
// one identity per T-degree m:  sum_{a+b=m} d_a d_b = 0.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "floer/errors.hpp"
#include "floer/gf2.hpp"

namespace floer {

using gf2::BitMatrix;
using gf2::BitVector;

using BettiVector = std::vector<int>;

// floor((n+1)/N): the number of higher operators.
inline int nu_of(int n, int N) { return (n + 1) / N; }

// Floor division that rounds toward negative infinity.
inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int pos_mod(int a, int b) {
  const int r = a % b;
  return r < 0 ? r + b : r;
}

class FloerComplex {
 public:
  // Operator families keyed by j; each family holds one matrix per source
  // degree 0..n. Missing families are zero.
  using OpFamilies = std::map<int, std::vector<BitMatrix>>;

  FloerComplex(int n, int N, std::vector<std::size_t> dims, OpFamilies ops = {})
      : n_(n), N_(N), dims_(std::move(dims)) {
    if (n_ < 0) throw OutOfRange("complex top degree must be >= 0");
    if (N_ < 2) throw OutOfRange("period N must be >= 2, got " + std::to_string(N_));
    if (dims_.size() != static_cast<std::size_t>(n_ + 1)) {
      throw ShapeMismatch("dims has " + std::to_string(dims_.size()) +
                          " entries, expected n+1 = " + std::to_string(n_ + 1));
    }
    const int nu = nu_of(n_, N_);
    ops_.resize(static_cast<std::size_t>(nu + 1));
    for (int j = 0; j <= nu; ++j) {
      auto& fam = ops_[static_cast<std::size_t>(j)];
      for (int i = 0; i <= n_; ++i) fam.emplace_back(target_dim(j, i), dims_[i]);
    }
    for (auto& [j, family] : ops) {
      if (j < 0 || j > nu) {
        throw ShapeMismatch("operator family j=" + std::to_string(j) +
                            " outside 0..nu=" + std::to_string(nu));
      }
      if (family.size() != dims_.size()) {
        throw ShapeMismatch("operator family j=" + std::to_string(j) + " has " +
                            std::to_string(family.size()) +
                            " matrices, expected n+1");
      }
      for (int i = 0; i <= n_; ++i) set_op(j, i, std::move(family[i]));
    }
  }

  int top() const { return n_; }
  int period() const { return N_; }
  int nu() const { return nu_of(n_, N_); }
  const std::vector<std::size_t>& dims() const { return dims_; }

  std::size_t dim_at(int degree) const {
    return (degree < 0 || degree > n_) ? 0 : dims_[static_cast<std::size_t>(degree)];
  }
  int target_degree(int j, int i) const { return i + 1 - j * N_; }
  std::size_t target_dim(int j, int i) const { return dim_at(target_degree(j, i)); }

  // d_j^{(i)}; a zero matrix of the right shape when the target is outside [0,n].
  const BitMatrix& op(int j, int i) const {
    return ops_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i));
  }
  void set_op(int j, int i, BitMatrix m) {
    if (j < 0 || j > nu() || i < 0 || i > n_) {
      throw ShapeMismatch("no operator slot (j=" + std::to_string(j) +
                          ", i=" + std::to_string(i) + ")");
    }
    if (m.rows() != target_dim(j, i) || m.cols() != dims_[static_cast<std::size_t>(i)]) {
      throw ShapeMismatch("operator (j=" + std::to_string(j) + ", i=" + std::to_string(i) +
                          ") has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " +
                          std::to_string(target_dim(j, i)) + "x" +
                          std::to_string(dims_[static_cast<std::size_t>(i)]));
    }
    ops_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(m);
  }

  friend bool operator==(const FloerComplex&, const FloerComplex&) = default;

 private:
  int n_;
  int N_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<BitMatrix>> ops_;
};

struct Violation {
  int m;       // T-degree of the failing identity
  int degree;  // source degree i
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Sum over a+b=m of d_a^{(i+1-bN)} d_b^{(i)} as a map C^i -> C^{i+2-mN}.
inline BitMatrix square_component(const FloerComplex& c, int m, int i) {
  const int nu = c.nu();
  BitMatrix acc(c.dim_at(i + 2 - m * c.period()), c.dim_at(i));
  for (int b = 0; b <= std::min(m, nu); ++b) {
    const int a = m - b;
    if (a > nu) continue;
    const int mid = c.target_degree(b, i);
    if (mid < 0 || mid > c.top()) continue;
    acc += c.op(a, mid) * c.op(b, i);
  }
  return acc;
}

// Every (m, i) whose identity sum_{a+b=m} d_a d_b = 0 fails. Individual
// d_j d_j for j >= 1 are not required to vanish.
inline std::vector<Violation> validate(const FloerComplex& c) {
  for (int j = 0; j <= c.nu(); ++j) {
    for (int i = 0; i <= c.top(); ++i) {
      const auto& m = c.op(j, i);
      if (m.rows() != c.target_dim(j, i) || m.cols() != c.dim_at(i)) {
        throw ShapeMismatch("operator (j=" + std::to_string(j) + ", i=" +
                            std::to_string(i) + ") has the wrong shape");
      }
    }
  }
  std::vector<Violation> out;
  for (int m = 0; m <= 2 * c.nu(); ++m) {
    for (int i = 0; i <= c.top(); ++i) {
      if (!square_component(c, m, i).is_zero()) out.push_back({m, i});
    }
  }
  return out;
}

inline bool is_valid(const FloerComplex& c) { return validate(c).empty(); }

// Betti numbers of (C, d_0).
inline BettiVector morse_homology(const FloerComplex& c) {
  for (int i = 0; i <= c.top(); ++i) {
    if (!square_component(c, 0, i).is_zero()) {
      throw NotAComplex("d_0 o d_0 != 0 at degree " + std::to_string(i));
    }
  }
  BettiVector beta(static_cast<std::size_t>(c.top() + 1));
  std::vector<std::size_t> rk(static_cast<std::size_t>(c.top() + 1));
  for (int i = 0; i <= c.top(); ++i) rk[i] = gf2::rank(c.op(0, i));
  for (int i = 0; i <= c.top(); ++i) {
    const std::size_t in = i > 0 ? rk[i - 1] : 0;
    beta[i] = static_cast<int>(c.dims()[i] - rk[i] - in);
  }
  return beta;
}

// One summand C^{l-pN} (x) T^p of the unrolled group in total degree l.
struct Summand {
  int p;
  int base_degree;
  std::size_t offset;
  std::size_t dim;
};

// The unrolled complex materialized on total degrees [lo, hi]. Each group is
// finite: its summands are the p with 0 <= l - pN <= n, ordered by p.
// The differential maps summand p to summand p+j by d_j.
class LaurentComplex {
 public:
  LaurentComplex(FloerComplex base, int lo, int hi)
      : base_(std::move(base)), lo_(lo), hi_(hi) {
    if (lo > hi) throw RangeError("degree range is empty");
    const int N = base_.period();
    for (int l = lo; l <= hi; ++l) {
      std::vector<Summand> group;
      std::size_t offset = 0;
      // p ranges over ceil((l-n)/N) .. floor(l/N)
      const int p_min = -floor_div(-(l - base_.top()), N);
      const int p_max = floor_div(l, N);
      for (int p = p_min; p <= p_max; ++p) {
        const int deg = l - p * N;
        group.push_back({p, deg, offset, base_.dim_at(deg)});
        offset += base_.dim_at(deg);
      }
      groups_.push_back(std::move(group));
      dims_.push_back(offset);
    }
    for (int l = lo; l < hi; ++l) {
      BitMatrix d(dim(l + 1), dim(l));
      for (const auto& src : summands(l)) {
        for (int j = 0; j <= base_.nu(); ++j) {
          const int deg = base_.target_degree(j, src.base_degree);
          if (deg < 0 || deg > base_.top()) continue;
          const Summand* dst = find(l + 1, src.p + j);
          if (dst == nullptr) continue;
          d.place(dst->offset, src.offset, base_.op(j, src.base_degree));
        }
      }
      dtilde_.push_back(std::move(d));
    }
  }

  const FloerComplex& base() const { return base_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool has_degree(int l) const { return l >= lo_ && l <= hi_; }

  const std::vector<Summand>& summands(int l) const {
    check(l);
    return groups_[static_cast<std::size_t>(l - lo_)];
  }
  std::size_t dim(int l) const {
    check(l);
    return dims_[static_cast<std::size_t>(l - lo_)];
  }
  // The differential C~^l -> C~^{l+1}.
  const BitMatrix& dtilde(int l) const {
    if (l < lo_ || l >= hi_) {
      throw RangeError("differential out of degree " + std::to_string(l) +
                       " not materialized in [" + std::to_string(lo_) + "," +
                       std::to_string(hi_) + "]");
    }
    return dtilde_[static_cast<std::size_t>(l - lo_)];
  }

  const Summand* find(int l, int p) const {
    for (const auto& s : summands(l)) {
      if (s.p == p) return &s;
    }
    return nullptr;
  }

  // Coordinates of C~^l lying in summands with index >= p (the subspace F^p).
  std::vector<std::size_t> coords_at_least(int l, int p) const {
    std::vector<std::size_t> out;
    for (const auto& s : summands(l)) {
      if (s.p < p) continue;
      for (std::size_t k = 0; k < s.dim; ++k) out.push_back(s.offset + k);
    }
    return out;
  }
  std::vector<std::size_t> coords_below(int l, int p) const {
    std::vector<std::size_t> out;
    for (const auto& s : summands(l)) {
      if (s.p >= p) continue;
      for (std::size_t k = 0; k < s.dim; ++k) out.push_back(s.offset + k);
    }
    return out;
  }

 private:
  void check(int l) const {
    if (!has_degree(l)) {
      throw RangeError("degree " + std::to_string(l) + " not materialized in [" +
                       std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    }
  }

  FloerComplex base_;
  int lo_;
  int hi_;
  std::vector<std::vector<Summand>> groups_;
  std::vector<std::size_t> dims_;
  std::vector<BitMatrix> dtilde_;
};

inline LaurentComplex build_laurent(const FloerComplex& c, int lo, int hi) {
  return LaurentComplex(c, lo, hi);
}

// Default window [-(nu+2)N, n+(nu+2)N].
inline LaurentComplex build_laurent(const FloerComplex& c) {
  const int margin = (c.nu() + 2) * c.period();
  return LaurentComplex(c, -margin, c.top() + margin);
}

// dim H^l(C~, d~), which is the Floer homology in degree l mod N.
inline std::size_t homology(const LaurentComplex& lc, int l) {
  if (!lc.has_degree(l - 1) || !lc.has_degree(l + 1)) {
    throw RangeError("homology at degree " + std::to_string(l) +
                     " needs degrees l-1..l+1 inside [" + std::to_string(lc.lo()) +
                     "," + std::to_string(lc.hi()) + "]");
  }
  return lc.dim(l) - gf2::rank(lc.dtilde(l)) - gf2::rank(lc.dtilde(l - 1));
}

// Floer homology over one period l = 0..N-1.
inline std::vector<std::size_t> floer_homology(const LaurentComplex& lc) {
  std::vector<std::size_t> out;
  for (int l = 0; l < lc.base().period(); ++l) out.push_back(homology(lc, l));
  return out;
}

inline bool homology_vanishes(const FloerComplex& c) {
  const auto lc = build_laurent(c, -1, c.period());
  for (int l = 0; l < c.period(); ++l) {
    if (homology(lc, l) != 0) return false;
  }
  return true;
}

}  // namespace floer
