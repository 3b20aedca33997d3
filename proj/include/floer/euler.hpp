#pragma once

// Euler-characteristic restrictions for complexes with vanishing Floer
// homology: the modular Betti sums gamma_j, the windows chi_{s,t}, the
// critical-point counts kappa_s, and the inequalities they satisfy.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "floer/complex.hpp"
#include "floer/errors.hpp"
#include "floer/gf2.hpp"

namespace floer {

// Sum of the entries whose index is congruent to j mod N.
inline long long modular_sum(const std::vector<int>& v, int N, int j) {
  long long total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (pos_mod(static_cast<int>(i), N) == pos_mod(j, N)) total += v[i];
  }
  return total;
}

inline long long gamma(const BettiVector& beta, int N, int j) { return modular_sum(beta, N, j); }

inline long long kappa(const std::vector<int>& counts, int N, int s) {
  return modular_sum(counts, N, s);
}

inline long long chi_st(const BettiVector& beta, int N, int s, int t) {
  if (s > t) {
    throw SRange("chi_{s,t} needs s <= t, got s=" + std::to_string(s) + ", t=" +
                 std::to_string(t));
  }
  long long total = 0;
  for (int i = s; i <= t; ++i) total += ((i - s) % 2 == 0 ? 1 : -1) * gamma(beta, N, i);
  return total;
}

// Betti numbers together with an optional vector of critical-point counts.
struct EulerData {
  BettiVector beta;
  int N = 2;
  std::optional<std::vector<int>> morse_counts;

  EulerData(BettiVector b, int n_period, std::optional<std::vector<int>> counts = std::nullopt)
      : beta(std::move(b)), N(n_period), morse_counts(std::move(counts)) {
    if (!morse_counts) return;
    if (morse_counts->size() != beta.size()) {
      throw ShapeMismatch("critical-point counts and Betti numbers differ in length");
    }
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if ((*morse_counts)[i] < beta[i]) {
        throw OutOfRange("critical-point count below the Betti number in degree " +
                         std::to_string(i));
      }
    }
  }

  std::vector<long long> gammas() const {
    std::vector<long long> out;
    for (int j = 0; j < N; ++j) out.push_back(gamma(beta, N, j));
    return out;
  }
};

// A Z-graded complex with one differential, D^lo .. D^{lo+size-1}; maps[i]
// goes from D^{lo+i} to D^{lo+i+1} (the last map targets zero).
struct GradedComplex {
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<BitMatrix> maps;

  std::size_t dim(int i) const {
    const int k = i - lo;
    return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[k];
  }
  std::size_t boundary_rank(int i) const {
    const int k = i - lo;
    return (k < 0 || k >= static_cast<int>(maps.size())) ? 0 : gf2::rank(maps[k]);
  }
};

struct LemmaSides {
  long long lhs;
  long long rhs;
};

// chi_{s,t}(D) against chi_{s,t}(H) + rk d(D^{s-1}) + (-1)^{t-s} rk d(D^t).
inline LemmaSides lemma_sides(const GradedComplex& D, int s, int t) {
  if (s > t) throw SRange("lemma window needs s <= t");
  if (D.maps.size() != D.dims.size()) throw ShapeMismatch("one map per graded piece expected");
  for (std::size_t k = 0; k < D.maps.size(); ++k) {
    const std::size_t rows = k + 1 < D.dims.size() ? D.dims[k + 1] : 0;
    if (D.maps[k].rows() != rows || D.maps[k].cols() != D.dims[k]) {
      throw ShapeMismatch("map out of degree " + std::to_string(D.lo + static_cast<int>(k)) +
                          " has the wrong shape");
    }
    if (k + 1 < D.maps.size() && !(D.maps[k + 1] * D.maps[k]).is_zero()) {
      throw NotAComplex("d o d != 0 out of degree " + std::to_string(D.lo + static_cast<int>(k)));
    }
  }
  long long lhs = 0;
  long long hom = 0;
  for (int i = s; i <= t; ++i) {
    const long long sign = (i - s) % 2 == 0 ? 1 : -1;
    lhs += sign * static_cast<long long>(D.dim(i));
    const long long h = static_cast<long long>(D.dim(i)) -
                        static_cast<long long>(D.boundary_rank(i)) -
                        static_cast<long long>(D.boundary_rank(i - 1));
    hom += sign * h;
  }
  const long long sign_ts = (t - s) % 2 == 0 ? 1 : -1;
  const long long rhs = hom + static_cast<long long>(D.boundary_rank(s - 1)) +
                        sign_ts * static_cast<long long>(D.boundary_rank(t));
  return {lhs, rhs};
}

struct InequalityCheck {
  std::string name;
  long long lower;  // lower bound, or the value itself when unbounded below
  long long value;
  long long upper;
  bool pass;
};

struct EulerReport {
  int s = 0;
  int t = 0;
  int nu = 0;
  long long chi = 0;
  std::vector<long long> gammas;
  std::vector<long long> kappas;
  std::vector<InequalityCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
};

// Evaluates the inequalities for the window [s, t] on a complex whose total
// differential has no homology. The gamma forms use nu and the Betti numbers
// of d_0; the kappa forms use this complex's own chain dimensions as the
// critical-point counts. The identity the bounds come from is checked too.
inline EulerReport verify_inequalities(const FloerComplex& c, int s, int t) {
  if (s > t) throw SRange("window needs s <= t");
  if (!homology_vanishes(c)) throw HFNotZero("the complex has nonzero Floer homology");
  const int N = c.period();
  const auto beta = morse_homology(c);
  std::vector<int> counts(c.dims().begin(), c.dims().end());

  EulerReport rep;
  rep.s = s;
  rep.t = t;
  rep.nu = c.nu();
  rep.chi = chi_st(beta, N, s, t);
  for (int j = 0; j < N; ++j) {
    rep.gammas.push_back(gamma(beta, N, j));
    rep.kappas.push_back(kappa(counts, N, j));
  }
  auto g = [&](int j) { return gamma(beta, N, j); };
  auto kp = [&](int j) { return kappa(counts, N, j); };
  const long long nu = c.nu();
  const long long left_g = nu * std::min(g(s - 1), g(s));
  const long long right_g = nu * std::min(g(t), g(t + 1));
  const long long left_k = std::min(kp(s - 1), kp(s));
  const long long right_k = std::min(kp(t), kp(t + 1));
  const long long x = rep.chi;

  if ((t - s) % 2 == 0) {
    rep.checks.push_back({"1a", 0, x, left_g + right_g, 0 <= x && x <= left_g + right_g});
    rep.checks.push_back({"1b", x, x, left_k + right_k, x <= left_k + right_k});
  } else {
    rep.checks.push_back({"2a", -right_g, x, left_g, -right_g <= x && x <= left_g});
    rep.checks.push_back({"2b", -right_k, x, left_k, -right_k <= x && x <= left_k});
  }

  // chi = rk d(C^{s-1}) - rk d_0(C^{s-1}) + (-1)^{t-s} (rk d(C^t) - rk d_0(C^t)),
  // with C^i the Z/N-graded chain group; rk d on C^i is the rank of d~ out of
  // any total degree congruent to i.
  const auto lc = build_laurent(c, pos_mod(s - 1, N) - 1, pos_mod(s - 1, N) + N + 1);
  auto rank_d = [&](int i) {
    return static_cast<long long>(gf2::rank(lc.dtilde(lc.lo() + 1 + pos_mod(i - lc.lo() - 1, N))));
  };
  auto rank_d0 = [&](int i) {
    long long total = 0;
    for (int deg = 0; deg <= c.top(); ++deg) {
      if (pos_mod(deg, N) == pos_mod(i, N)) total += static_cast<long long>(gf2::rank(c.op(0, deg)));
    }
    return total;
  };
  const long long sign = (t - s) % 2 == 0 ? 1 : -1;
  const long long ident =
      rank_d(s - 1) - rank_d0(s - 1) + sign * (rank_d(t) - rank_d0(t));
  rep.checks.push_back({"identity", ident, x, ident, ident == x});
  return rep;
}

// Upper bounds for lambda_s and lambda_{s,t}: the minima over a finite family
// of critical-point count vectors. The true lambdas minimize over all Morse
// functions, so these only bound them from above.
inline long long lambda_s_bound(const std::vector<std::vector<int>>& family, int N, int s) {
  if (family.empty()) throw OutOfRange("lambda bound needs at least one count vector");
  long long best = -1;
  for (const auto& counts : family) {
    const long long v = std::min(kappa(counts, N, s - 1), kappa(counts, N, s));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

inline long long lambda_st_bound(const std::vector<std::vector<int>>& family, int N, int s,
                                 int t) {
  if (family.empty()) throw OutOfRange("lambda bound needs at least one count vector");
  if (s > t) throw SRange("window needs s <= t");
  long long best = -1;
  for (const auto& counts : family) {
    const long long v = std::min(kappa(counts, N, s - 1), kappa(counts, N, s)) +
                        std::min(kappa(counts, N, t), kappa(counts, N, t + 1));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace floer
