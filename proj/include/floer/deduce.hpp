#pragma once

// Dimension-level deductions: which Betti vectors admit a Floer complex with
// vanishing homology, and what a circle bundle's Gysin sequence forces on
// its base.
//
// Everything here works on integers only, but every positive answer comes
// with an explicit complex built from it (see matching_complex) so the
// arithmetic can be checked against the linear algebra.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/errors.hpp"

namespace floer {

// Ranks of the maps in an exact sequence 0 -> V_0 -> V_1 -> ... -> V_{m-1} -> 0.
// ranks[i] is the rank of V_i -> V_{i+1}; the last entry is always 0.
struct RankProfile {
  std::vector<int> dims;
  std::vector<int> ranks;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

// Over a field exactness at V_i reads dim V_i = r_{i-1} + r_i, so the ranks
// are forced one after another and the answer has at most one element.
inline std::vector<RankProfile> solve_exact_chain(const std::vector<int>& dims) {
  RankProfile prof{dims, std::vector<int>(dims.size(), 0)};
  int in = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) return {};
    const int out = dims[i] - in;
    if (out < 0) return {};
    if (i + 1 == dims.size()) {
      if (out != 0) return {};
    } else if (out > dims[i + 1]) {
      return {};
    }
    prof.ranks[i] = out;
    in = out;
  }
  return {prof};
}

// One matched family of basis vectors: `count` vectors in degree `source`
// are sent by d_r to `count` vectors in degree source+1-rN.
struct Pairing {
  int r;
  int source;
  int count;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// d_0 = 0, chain dims = beta, and each pairing realized on fresh basis
// vectors. Every basis vector sits in at most one pair, so every composite
// d_a d_b vanishes, and the pages of the spectral sequence kill exactly the
// listed pairs on their pages.
inline FloerComplex matching_complex(int k, int N, const BettiVector& beta,
                                     const std::vector<Pairing>& pairs) {
  std::vector<std::size_t> dims(beta.begin(), beta.end());
  FloerComplex c(k, N, dims);
  std::vector<std::size_t> used(dims.size(), 0);
  std::vector<std::vector<BitMatrix>> ops(static_cast<std::size_t>(c.nu() + 1));
  for (int j = 0; j <= c.nu(); ++j) {
    for (int i = 0; i <= k; ++i) ops[j].push_back(c.op(j, i));
  }
  for (const auto& pr : pairs) {
    const int t = pr.source + 1 - pr.r * N;
    if (pr.r < 1 || pr.r > c.nu() || t < 0 || t > k || pr.source < 0 || pr.source > k) {
      throw ShapeMismatch("pairing (r=" + std::to_string(pr.r) + ", source=" +
                          std::to_string(pr.source) + ") has no target degree");
    }
    auto& m = ops[pr.r][pr.source];
    for (int e = 0; e < pr.count; ++e) {
      const std::size_t s = used[pr.source]++;
      const std::size_t d = used[t]++;
      if (s >= dims[pr.source] || d >= dims[t]) {
        throw ShapeMismatch("pairings use more basis vectors than beta provides");
      }
      m.set(d, s, true);
    }
  }
  for (int j = 1; j <= c.nu(); ++j) {
    for (int i = 0; i <= k; ++i) c.set_op(j, i, ops[j][i]);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Single higher differential (nu = 1)

// Degree chains followed by [d_1]: i -> i-(N-1), from the top down.
inline std::vector<std::vector<int>> nu1_chains(int k, int N) {
  std::vector<std::vector<int>> out;
  const int step = N - 1;
  for (int top = k; top > k - step && top >= 0; --top) {
    std::vector<int> chain;
    for (int i = top; i >= 0; i -= step) chain.push_back(i);
    out.push_back(std::move(chain));
  }
  return out;
}

struct ChainSolution {
  std::vector<int> degrees;
  RankProfile profile;
};

struct Nu1Result {
  bool feasible = false;
  std::vector<ChainSolution> chains;  // solved chains; on failure, up to the first bad one
  std::vector<int> failed_chain;      // degrees of the first chain with no exact profile
  std::optional<FloerComplex> witness;
};

inline Nu1Result vanishing_feasible_nu1(const BettiVector& beta, int N) {
  const int k = static_cast<int>(beta.size()) - 1;
  if (k < 0) throw OutOfRange("empty Betti vector");
  if (N < 2) throw OutOfRange("period N must be >= 2");
  const int nu = nu_of(k, N);
  if (nu >= 2) {
    throw NuTooLarge("nu = " + std::to_string(nu) +
                     " has several page differentials; use the page search");
  }
  Nu1Result res;
  if (nu == 0) {
    // d = d_0, so HF is the whole cohomology.
    res.feasible = std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; });
    if (res.feasible) res.witness = matching_complex(k, N, beta, {});
    return res;
  }
  std::vector<Pairing> pairs;
  for (const auto& degrees : nu1_chains(k, N)) {
    std::vector<int> dims;
    for (int d : degrees) dims.push_back(beta[d]);
    const auto sol = solve_exact_chain(dims);
    if (sol.empty()) {
      res.failed_chain = degrees;
      return res;
    }
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
      if (sol[0].ranks[i] > 0) pairs.push_back({1, degrees[i], sol[0].ranks[i]});
    }
    res.chains.push_back({degrees, sol[0]});
  }
  res.feasible = true;
  res.witness = matching_complex(k, N, beta, pairs);
  return res;
}

// ---------------------------------------------------------------------------
// All pages

// The dimension shadow of pages 1..nu+1. By periodicity a cell only depends
// on its underlying degree i = p+q-pN, so dims[r-1][i] is dim V_r at degree
// i and ranks[r-1][i] the rank of the page-r differential out of it (into
// degree i+1-rN).
struct PageProfile {
  int k = 0;
  int N = 2;
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<int>> ranks;

  std::vector<Pairing> pairings() const {
    std::vector<Pairing> out;
    for (std::size_t r = 0; r < ranks.size(); ++r) {
      for (int i = 0; i <= k; ++i) {
        if (ranks[r][i] > 0) out.push_back({static_cast<int>(r) + 1, i, ranks[r][i]});
      }
    }
    return out;
  }
};

struct PagesResult {
  bool feasible = false;
  std::optional<PageProfile> witness;
  std::optional<FloerComplex> complex;
  long long explored = 0;
  int nu = 0;
  // "excluded", or for a feasible profile "exists" when nu <= 1 and
  // "not excluded" otherwise.
  std::string label() const {
    if (!feasible) return "excluded";
    return nu <= 1 ? "exists" : "not excluded";
  }
};

inline constexpr long long kDefaultSearchBudget = 2'000'000;

namespace detail {

class PageSearch {
 public:
  PageSearch(int k, int N, long long budget)
      : k_(k), N_(N), nu_(nu_of(k, N)), budget_(budget) {}

  std::optional<PageProfile> run(const std::vector<int>& beta) {
    PageProfile prof{k_, N_, {}, {}};
    if (search(1, beta, prof)) return prof;
    return std::nullopt;
  }
  long long explored() const { return explored_; }

 private:
  bool search(int r, const std::vector<int>& v, PageProfile& prof) {
    if (++explored_ > budget_) {
      throw SearchBudgetExceeded("page search exceeded its budget of " +
                                     std::to_string(budget_) + " nodes",
                                 explored_);
    }
    if (r > nu_) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) return false;
      prof.dims.push_back(v);
      return true;
    }
    if (failed_.count({r, v})) return false;
    if (!partners_possible(r, v)) {
      failed_.insert({r, v});
      return false;
    }
    std::vector<int> out(v.size(), 0), in(v.size(), 0);
    prof.dims.push_back(v);
    if (assign(r, v, k_, out, in, prof)) return true;
    prof.dims.pop_back();
    failed_.insert({r, v});
    return false;
  }

  // Chooses the page-r rank out of degree i, then i-1, ... The incoming
  // rank at i comes from i-1+rN, which is already fixed.
  bool assign(int r, const std::vector<int>& v, int i, std::vector<int>& out,
              std::vector<int>& in, PageProfile& prof) {
    if (i < 0) {
      std::vector<int> next(v.size());
      for (std::size_t d = 0; d < v.size(); ++d) next[d] = v[d] - out[d] - in[d];
      prof.ranks.push_back(out);
      if (search(r + 1, next, prof)) return true;
      prof.ranks.pop_back();
      return false;
    }
    const int avail = v[i] - in[i];
    const int t = i + 1 - r * N_;
    const bool last = r == nu_;
    int hi = 0;
    if (t >= 0 && t <= k_) hi = std::min(avail, v[t]);
    const int lo = last ? avail : 0;
    if (lo > hi) return false;
    for (int rho = hi; rho >= lo; --rho) {
      out[i] = rho;
      if (t >= 0) in[t] = rho;
      if (assign(r, v, i - 1, out, in, prof)) return true;
    }
    out[i] = 0;
    if (t >= 0) in[t] = 0;
    return false;
  }

  // Every surviving class needs a partner on this page or a later one.
  bool partners_possible(int r, const std::vector<int>& v) const {
    for (int i = 0; i <= k_; ++i) {
      if (v[i] == 0) continue;
      bool ok = false;
      for (int s = r; s <= nu_ && !ok; ++s) {
        const int t = i + 1 - s * N_;
        const int src = i - 1 + s * N_;
        ok = (t >= 0 && t <= k_ && v[t] > 0) || (src >= 0 && src <= k_ && v[src] > 0);
      }
      if (!ok) return false;
    }
    return true;
  }

  int k_;
  int N_;
  int nu_;
  long long budget_;
  long long explored_ = 0;
  std::set<std::pair<int, std::vector<int>>> failed_;
};

}  // namespace detail

inline PagesResult vanishing_feasible_pages(const BettiVector& beta, int N,
                                            long long budget = kDefaultSearchBudget) {
  const int k = static_cast<int>(beta.size()) - 1;
  if (k < 0) throw OutOfRange("empty Betti vector");
  if (N < 2) throw OutOfRange("period N must be >= 2");
  for (int b : beta) {
    if (b < 0) throw OutOfRange("Betti numbers must be nonnegative");
  }
  PagesResult res;
  res.nu = nu_of(k, N);
  detail::PageSearch search(k, N, budget);
  auto prof = search.run(beta);
  res.explored = search.explored();
  if (!prof) return res;
  res.feasible = true;
  res.complex = matching_complex(k, N, beta, prof->pairings());
  res.witness = std::move(prof);
  return res;
}

// ---------------------------------------------------------------------------
// Death analysis and divisibility

inline BettiVector support_betti(const std::vector<int>& support, int k) {
  BettiVector beta(static_cast<std::size_t>(k + 1), 0);
  for (int d : support) {
    if (d < 0 || d > k) {
      throw OutOfRange("support degree " + std::to_string(d) + " outside 0.." +
                       std::to_string(k));
    }
    beta[d] = 1;
  }
  return beta;
}

inline std::vector<int> sphere_support(int k) { return {0, k}; }
inline std::vector<int> circle_bundle_support(int k) {
  std::set<int> s{0, 1, k - 1, k};
  return {s.begin(), s.end()};
}

struct DeathOption {
  int degree;
  int r;
  bool outgoing;  // true: killed by mapping out; false: killed as a target
  int partner;
  friend bool operator==(const DeathOption&, const DeathOption&) = default;
};

// For each supported degree, the pages r <= nu on which some differential
// connects it to another supported degree.
inline std::vector<DeathOption> death_analysis(const std::vector<int>& support, int k, int N) {
  const std::set<int> s(support.begin(), support.end());
  const int nu = nu_of(k, N);
  std::vector<DeathOption> out;
  for (int q : s) {
    for (int r = 1; r <= nu; ++r) {
      const int t = q + 1 - r * N;
      if (s.count(t)) out.push_back({q, r, true, t});
      const int src = q - 1 + r * N;
      if (s.count(src)) out.push_back({q, r, false, src});
    }
  }
  return out;
}

// The periods in [lo, hi] for which the page search does not exclude
// vanishing homology on the given support.
inline std::vector<int> divisibility_set(const std::vector<int>& support, int k, int lo, int hi,
                                         long long budget = kDefaultSearchBudget) {
  const auto beta = support_betti(support, k);
  std::vector<int> out;
  for (int N = std::max(lo, 2); N <= hi; ++N) {
    if (vanishing_feasible_pages(beta, N, budget).feasible) out.push_back(N);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gysin sequences of circle bundles, over Z_2:
//   ... -> H^i(L) -> H^i(G) -> H^{i-1}(L) -(cup w)-> H^{i+1}(L) -> H^{i+1}(G) -> ...

struct GysinConstraints {
  std::map<int, int> fix;       // beta_i(L) = v
  std::map<int, int> at_least;  // beta_i(L) >= v
  bool pd = false;              // beta_i(L) = beta_{k-i}(L)
  int bound = 4;                // largest entry a reported solution may have
  // cup w : H^j(L) -> H^{j+2}(L) is an isomorphism for every j in [first, last].
  std::optional<std::pair<int, int>> cup_iso;
};

struct GysinSolution {
  BettiVector base;
  std::vector<int> pullback;  // rank of H^i(L) -> H^i(G), i = 0..k
  std::vector<int> pushdown;  // rank of H^i(G) -> H^{i-1}(L), i = 0..k+1
  std::vector<int> cup;       // rank of cup w : H^j(L) -> H^{j+2}(L), j = 0..k
  friend bool operator==(const GysinSolution&, const GysinSolution&) = default;
};

namespace detail {

class GysinSearch {
 public:
  GysinSearch(const BettiVector& total, int k, bool w_zero, const GysinConstraints& cons)
      : total_(total), k_(k), w_zero_(w_zero), cons_(cons) {
    cur_.base.assign(static_cast<std::size_t>(k + 1), 0);
    cur_.pullback.assign(static_cast<std::size_t>(k + 1), 0);
    cur_.pushdown.assign(static_cast<std::size_t>(k + 2), 0);
    cur_.cup.assign(static_cast<std::size_t>(k + 1), 0);
  }

  std::vector<GysinSolution> run() {
    step(0, 0);
    return std::move(found_);
  }

 private:
  int base_at(int i) const { return (i < 0 || i > k_) ? 0 : cur_.base[i]; }

  // Position i of the chain: A_i = H^i(L), G_i = H^i(G), C_i = H^{i-1}(L).
  // `in` is the rank of cup w entering A_i.
  void step(int i, int in) {
    if (i > k_ + 1) {
      found_.push_back(cur_);
      return;
    }
    int lo = in;
    int hi = in + total_[i];
    if (i > k_) lo = hi = 0;
    if (i <= k_) {
      if (auto f = cons_.fix.find(i); f != cons_.fix.end()) lo = std::max(lo, f->second), hi = std::min(hi, f->second);
      if (auto a = cons_.at_least.find(i); a != cons_.at_least.end()) lo = std::max(lo, a->second);
      if (cons_.pd && 2 * i > k_) lo = std::max(lo, cur_.base[k_ - i]), hi = std::min(hi, cur_.base[k_ - i]);
      if (cons_.cup_iso && i - 2 >= cons_.cup_iso->first && i - 2 <= cons_.cup_iso->second) {
        lo = std::max(lo, in);
        hi = std::min(hi, in);
      }
    }
    for (int b = lo; b <= hi; ++b) {
      if (i <= k_) cur_.base[i] = b;
      else if (b != 0 || in != 0) continue;
      const int pull = b - in;  // out of A_i
      if (pull < 0) continue;
      const int push = total_[i] - pull;  // out of G_i
      if (push < 0 || push > base_at(i - 1)) continue;
      const int cup = base_at(i - 1) - push;  // out of C_i: H^{i-1} -> H^{i+1}
      if (w_zero_ && cup != 0) continue;
      if (cons_.cup_iso && i - 1 >= cons_.cup_iso->first && i - 1 <= cons_.cup_iso->second &&
          cup != base_at(i - 1)) {
        continue;
      }
      if (i <= k_) cur_.pullback[i] = pull;
      cur_.pushdown[i] = push;
      if (i >= 1) cur_.cup[i - 1] = cup;
      if (i == k_ + 1 && cup != 0) continue;
      step(i + 1, cup);
    }
    if (i <= k_) cur_.base[i] = 0;
  }

  const BettiVector& total_;
  int k_;
  bool w_zero_;
  const GysinConstraints& cons_;
  GysinSolution cur_;
  std::vector<GysinSolution> found_;
};

}  // namespace detail

// Every base Betti vector (with its rank data) making the Gysin sequence of
// a circle bundle with total Betti numbers `total` exact. The search itself
// is finite (beta_i(L) <= cup rank in + beta_i(G)); `bound` only caps what
// may be reported, and a solution above it raises BoundTooSmall.
inline std::vector<GysinSolution> gysin_solve(const BettiVector& total, int k, bool w_zero,
                                              const GysinConstraints& cons = {}) {
  if (k < 0) throw OutOfRange("base dimension must be >= 0");
  if (total.size() != static_cast<std::size_t>(k + 2)) {
    throw ShapeMismatch("total space Betti vector has " + std::to_string(total.size()) +
                        " entries, expected k+2 = " + std::to_string(k + 2));
  }
  auto sols = detail::GysinSearch(total, k, w_zero, cons).run();
  int needed = 0;
  for (const auto& s : sols) {
    for (int b : s.base) needed = std::max(needed, b);
  }
  if (needed > cons.bound) {
    throw BoundTooSmall("a Gysin solution has an entry " + std::to_string(needed) +
                            " above the bound " + std::to_string(cons.bound),
                        needed);
  }
  std::sort(sols.begin(), sols.end(),
            [](const GysinSolution& a, const GysinSolution& b) { return a.base < b.base; });
  return sols;
}

// ---------------------------------------------------------------------------
// Forced Betti vectors

struct BettiConstraints {
  std::map<int, int> fix;
  std::map<int, int> at_least;
  bool pd = false;
  int bound = 4;
  // When set, a solution that needs an entry above `bound` raises
  // BoundTooSmall; otherwise the enumeration is silently capped.
  bool strict = true;
  long long budget = kDefaultSearchBudget;
};

namespace detail {

inline bool entry_allowed(const BettiConstraints& c, int i, int v) {
  if (auto f = c.fix.find(i); f != c.fix.end() && f->second != v) return false;
  if (auto a = c.at_least.find(i); a != c.at_least.end() && v < a->second) return false;
  return v >= 0 && v <= c.bound;
}

inline bool pd_holds(const BettiVector& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != b[b.size() - 1 - i]) return false;
  }
  return true;
}

// nu = 1: the exact chains are independent, so enumerate each chain's
// admissible dims (parametrized by its ranks) and combine.
inline std::vector<BettiVector> forced_nu1(int k, int N, const BettiConstraints& c) {
  const auto chains = nu1_chains(k, N);
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& deg : chains) {
    std::vector<std::vector<int>> opts;
    std::vector<int> dims(deg.size());
    // dims[i] = r_{i-1} + r_i with r_{-1} = r_{m-1} = 0.
    auto rec = [&](auto&& self, std::size_t i, int prev) -> void {
      if (i + 1 == deg.size()) {
        dims[i] = prev;
        if (entry_allowed(c, deg[i], prev)) opts.push_back(dims);
        return;
      }
      for (int r = 0; prev + r <= c.bound; ++r) {
        dims[i] = prev + r;
        if (!entry_allowed(c, deg[i], dims[i])) continue;
        self(self, i + 1, r);
      }
    };
    rec(rec, 0, 0);
    options.push_back(std::move(opts));
  }
  std::vector<BettiVector> out;
  BettiVector beta(static_cast<std::size_t>(k + 1), 0);
  auto combine = [&](auto&& self, std::size_t ci) -> void {
    if (ci == chains.size()) {
      if (!c.pd || pd_holds(beta)) out.push_back(beta);
      return;
    }
    for (const auto& o : options[ci]) {
      for (std::size_t j = 0; j < o.size(); ++j) beta[chains[ci][j]] = o[j];
      self(self, ci + 1);
    }
  };
  combine(combine, 0);
  return out;
}

// General case: every vector under the bound, each checked by the page search.
inline std::vector<BettiVector> forced_general(int k, int N, const BettiConstraints& c) {
  std::vector<BettiVector> out;
  BettiVector beta(static_cast<std::size_t>(k + 1), 0);
  long long visited = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (++visited > c.budget) {
      throw SearchBudgetExceeded("Betti enumeration exceeded its budget", visited);
    }
    if (i > k) {
      if (vanishing_feasible_pages(beta, N, c.budget).feasible) out.push_back(beta);
      return;
    }
    for (int v = 0; v <= c.bound; ++v) {
      if (!entry_allowed(c, i, v)) continue;
      if (c.pd && 2 * i > k && beta[k - i] != v) continue;
      beta[i] = v;
      self(self, i + 1);
    }
    beta[i] = 0;
  };
  rec(rec, 0);
  return out;
}

inline std::vector<BettiVector> forced_capped(int k, int N, const BettiConstraints& c) {
  const int nu = nu_of(k, N);
  std::vector<BettiVector> out;
  if (nu == 0) {
    // d = d_0: HF is the cohomology itself.
    BettiVector zero(static_cast<std::size_t>(k + 1), 0);
    bool ok = true;
    for (int i = 0; i <= k; ++i) ok = ok && entry_allowed(c, i, 0);
    if (ok) out.push_back(zero);
  } else if (nu == 1) {
    out = forced_nu1(k, N, c);
  } else {
    out = forced_general(k, N, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Every Betti vector of a k-dimensional K with N_K = N that the spectral
// sequence does not exclude from HF(K,K) = 0, under the constraints, in
// lexicographic order. In strict mode the bound is probed one step higher;
// a solution appearing there means the family continues past the bound.
inline std::vector<BettiVector> forced_betti(int k, int N, const BettiConstraints& c = {}) {
  if (k < 0) throw OutOfRange("dimension must be >= 0");
  if (N < 2) throw OutOfRange("period N must be >= 2");
  auto out = detail::forced_capped(k, N, c);
  if (c.strict) {
    BettiConstraints wider = c;
    wider.bound = c.bound + 1;
    for (const auto& b : detail::forced_capped(k, N, wider)) {
      if (*std::max_element(b.begin(), b.end()) > c.bound) {
        throw BoundTooSmall("admissible Betti vectors continue past the entry bound " +
                                std::to_string(c.bound),
                            c.bound + 1);
      }
    }
  }
  return out;
}

}  // namespace floer
