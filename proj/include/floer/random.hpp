#pragma once

// Seeded generation of valid Floer complexes.
//
// The stream is std::mt19937_64 (whose output sequence is fixed by the C++
// standard); bounded integers are drawn by plain modulo reduction so the
// output is identical across standard libraries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "floer/complex.hpp"
#include "floer/errors.hpp"
#include "floer/gf2.hpp"

namespace floer {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish integer in [0, k); k must be positive.
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng.coin()) m.set(r, c, true);
    }
  }
  return m;
}

inline BitVector random_vector(std::size_t size, Rng& rng) {
  BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (rng.coin()) v.set(i, true);
  }
  return v;
}

inline BitMatrix random_invertible(std::size_t n, Rng& rng) {
  for (;;) {
    auto m = random_matrix(n, n, rng);
    if (gf2::rank(m) == n) return m;
  }
}

// Conjugates every operator by the degree-wise automorphisms g_i:
// d_j^{(i)} -> g_{t} d_j^{(i)} g_i^{-1}. All identities and ranks survive.
inline FloerComplex conjugate(const FloerComplex& c, const std::vector<BitMatrix>& g) {
  std::vector<BitMatrix> ginv;
  for (const auto& m : g) ginv.push_back(*gf2::inverse(m));
  FloerComplex out(c.top(), c.period(), c.dims());
  for (int j = 0; j <= c.nu(); ++j) {
    for (int i = 0; i <= c.top(); ++i) {
      const int t = c.target_degree(j, i);
      if (t < 0 || t > c.top()) continue;
      out.set_op(j, i, g[t] * c.op(j, i) * ginv[i]);
    }
  }
  return out;
}

inline FloerComplex random_conjugate(const FloerComplex& c, Rng& rng) {
  std::vector<BitMatrix> g;
  for (auto d : c.dims()) g.push_back(random_invertible(d, rng));
  return conjugate(c, g);
}

// A random d_0 with d_0^2 = 0: in normal form each degree splits as
// (image of the previous degree) + (homology) + (a complement mapped
// isomorphically onto the next degree); then conjugated.
inline std::vector<BitMatrix> random_morse_differential(
    const std::vector<std::size_t>& dims, Rng& rng) {
  const std::size_t n1 = dims.size();
  std::vector<std::size_t> out_rank(n1, 0);
  std::size_t in_rank = 0;
  for (std::size_t i = 0; i + 1 < n1; ++i) {
    const std::size_t room = dims[i] - in_rank;
    const std::size_t cap = std::min(room, dims[i + 1]);
    out_rank[i] = static_cast<std::size_t>(rng.below(cap + 1));
    in_rank = out_rank[i];
  }
  // Normal form: in degree i the first in_rank(i) coordinates are the image,
  // the last out_rank(i) coordinates map onto the image in degree i+1.
  std::vector<BitMatrix> d;
  for (std::size_t i = 0; i < n1; ++i) {
    const std::size_t rows = i + 1 < n1 ? dims[i + 1] : 0;
    BitMatrix m(rows, dims[i]);
    for (std::size_t k = 0; k < out_rank[i]; ++k) {
      m.set(k, dims[i] - out_rank[i] + k, true);
    }
    d.push_back(std::move(m));
  }
  std::vector<BitMatrix> g, ginv;
  for (auto dim : dims) {
    g.push_back(random_invertible(dim, rng));
    ginv.push_back(*gf2::inverse(g.back()));
  }
  for (std::size_t i = 0; i + 1 < n1; ++i) d[i] = g[i + 1] * d[i] * ginv[i];
  return d;
}

// Direct sum with the acyclic piece Z2 -> Z2 in degrees i, i+1 (joined by
// d_0). Homology of every kind is unchanged; chain dims grow by one.
inline FloerComplex add_acyclic_pair(const FloerComplex& c, int i) {
  if (i < 0 || i >= c.top()) throw OutOfRange("acyclic pair needs 0 <= i < n");
  auto dims = c.dims();
  ++dims[static_cast<std::size_t>(i)];
  ++dims[static_cast<std::size_t>(i + 1)];
  FloerComplex out(c.top(), c.period(), dims);
  for (int j = 0; j <= c.nu(); ++j) {
    for (int deg = 0; deg <= c.top(); ++deg) {
      BitMatrix m(out.target_dim(j, deg), out.dim_at(deg));
      m.place(0, 0, c.op(j, deg));
      if (j == 0 && deg == i) m.set(c.dim_at(i + 1), c.dim_at(i), true);
      out.set_op(j, deg, std::move(m));
    }
  }
  return out;
}

namespace detail {

// Solves for d_m given d_0..d_{m-1}: the unknown enters linearly through
// d_0 X + X d_0 and the remaining terms form the right-hand side. Returns a
// uniformly drawn solution, or false when the system is inconsistent.
inline bool sample_higher_operator(FloerComplex& c, int m, Rng& rng) {
  const int n = c.top();
  const int N = c.period();
  struct Slot {
    int i;
    std::size_t rows, cols, offset;
  };
  std::vector<Slot> unknowns;
  std::size_t n_unknowns = 0;
  for (int i = 0; i <= n; ++i) {
    const std::size_t rows = c.target_dim(m, i);
    const std::size_t cols = c.dim_at(i);
    unknowns.push_back({i, rows, cols, n_unknowns});
    n_unknowns += rows * cols;
  }
  std::vector<Slot> equations;
  std::size_t n_equations = 0;
  for (int i = 0; i <= n; ++i) {
    const std::size_t rows = c.dim_at(i + 2 - m * N);
    const std::size_t cols = c.dim_at(i);
    equations.push_back({i, rows, cols, n_equations});
    n_equations += rows * cols;
  }
  if (n_unknowns == 0) return true;

  auto family_of = [&](const BitVector& x) {
    std::vector<BitMatrix> fam;
    for (const auto& s : unknowns) {
      BitMatrix b(s.rows, s.cols);
      for (std::size_t r = 0; r < s.rows; ++r) {
        for (std::size_t col = 0; col < s.cols; ++col) {
          if (x.get(s.offset + r * s.cols + col)) b.set(r, col, true);
        }
      }
      fam.push_back(std::move(b));
    }
    return fam;
  };
  auto flatten = [&](const std::vector<BitMatrix>& comps) {
    BitVector v(n_equations);
    for (const auto& e : equations) {
      const auto& b = comps[static_cast<std::size_t>(e.i)];
      for (std::size_t r = 0; r < e.rows; ++r) {
        for (std::size_t col = 0; col < e.cols; ++col) {
          if (b.get(r, col)) v.set(e.offset + r * e.cols + col, true);
        }
      }
    }
    return v;
  };
  // Linear part: X |-> d_0 X + X d_0, componentwise on C^i -> C^{i+2-mN}.
  auto linear = [&](const std::vector<BitMatrix>& x) {
    std::vector<BitMatrix> comps;
    for (int i = 0; i <= n; ++i) {
      BitMatrix acc(c.dim_at(i + 2 - m * N), c.dim_at(i));
      const int t = i + 1 - m * N;
      if (t >= 0 && t <= n) acc += c.op(0, t) * x[static_cast<std::size_t>(i)];
      if (i + 1 <= n) acc += x[static_cast<std::size_t>(i + 1)] * c.op(0, i);
      comps.push_back(std::move(acc));
    }
    return comps;
  };

  BitMatrix system(n_equations, n_unknowns);
  for (std::size_t u = 0; u < n_unknowns; ++u) {
    system.set_column(u, flatten(linear(family_of(BitVector::unit(n_unknowns, u)))));
  }
  // Right-hand side: the already-fixed terms, with d_m currently zero.
  for (int i = 0; i <= n; ++i) c.set_op(m, i, BitMatrix(c.target_dim(m, i), c.dim_at(i)));
  std::vector<BitMatrix> rhs_comps;
  for (int i = 0; i <= n; ++i) rhs_comps.push_back(square_component(c, m, i));
  const auto particular = gf2::solve(system, flatten(rhs_comps));
  if (!particular) return false;
  BitVector x = *particular;
  const auto kernel = gf2::kernel_basis(system);
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    if (rng.coin()) x ^= kernel.column(k);
  }
  const auto fam = family_of(x);
  for (int i = 0; i <= n; ++i) c.set_op(m, i, fam[static_cast<std::size_t>(i)]);
  return true;
}

}  // namespace detail

struct RandomComplexOptions {
  int max_dim = 4;  // per-degree chain dimension bound
  int attempts = 64;
};

// A random valid complex. d_0 is drawn from random_morse_differential, then
// d_1..d_nu are drawn in turn from the affine solution space of the identity
// of matching T-degree; the remaining identities (T-degree > nu) are checked
// and the higher operators redrawn on failure. After `attempts` failures the
// higher operators are left zero.
inline FloerComplex random_complex(Rng& rng, int n, int N,
                                   const RandomComplexOptions& opt = {}) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= n; ++i) {
    dims.push_back(static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(opt.max_dim) + 1)));
  }
  FloerComplex base(n, N, dims);
  const auto d0 = random_morse_differential(dims, rng);
  for (int i = 0; i <= n; ++i) base.set_op(0, i, d0[static_cast<std::size_t>(i)]);
  const int nu = base.nu();
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    FloerComplex c = base;
    bool ok = true;
    for (int m = 1; m <= nu && ok; ++m) ok = detail::sample_higher_operator(c, m, rng);
    if (ok && is_valid(c)) return c;
  }
  return base;
}

}  // namespace floer
