// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "floer/floer.hpp"
#include "witness.hpp"

namespace {

using floer::BettiVector;
using floer::Params;

// Sizes and seeds are pinned here.
constexpr std::uint64_t kSuiteSeed = 20240601;
constexpr int kSuiteTrials = 500;
constexpr int kLemmaComplexes = 500;
constexpr int kLemmaMaxGap = 4;
constexpr int kEulerWitnesses = 200;
constexpr std::uint64_t kEulerSeed = 99;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Counts failures and keeps the first few for the report line.
class Tally {
 public:
  // Failures of scenarios whose period is 2, reported separately.
  void note_period_two() { ++period_two_; }
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 4) failures_.push_back(what);
  }
  Verdict verdict(const std::string& prefix = "") const {
    std::ostringstream out;
    if (!prefix.empty()) out << prefix << "; ";
    out << (total_ - failed_) << "/" << total_ << " ok";
    if (failed_ > 0) {
      out << ", failing:";
      for (const auto& f : failures_) out << " " << f;
      if (failed_ > 4) out << " ...";
      if (period_two_ > 0) out << " (" << period_two_ << " of the failures at period N = 2)";
    }
    return {failed_ == 0, out.str()};
  }
  int failed() const { return failed_; }

 private:
  int total_ = 0;
  int failed_ = 0;
  int period_two_ = 0;
  std::vector<std::string> failures_;
};

std::string params_str(const Params& p) {
  std::string s = "(";
  for (const auto& [k, v] : p) {
    if (s.size() > 1) s += ",";
    s += k + "=" + std::to_string(v);
  }
  return s + ")";
}

void scenario(Tally& t, const std::string& name, const Params& p) {
  bool ok = false;
  try {
    const auto r = floer::run(name, p);
    ok = r.reproduced;
    if (!ok && r.details.value("N", 0) == 2) t.note_period_two();
  } catch (const std::exception&) {
    ok = false;
  }
  t.check(ok, name + params_str(p));
}

Verdict criterion1() {
  floer::SuiteOptions opt;
  opt.seed = kSuiteSeed;
  opt.trials = kSuiteTrials;
  opt.max_n = 6;
  opt.max_dim = 4;
  Tally t;
  for (const auto& p : floer::run_property_suite(opt)) {
    for (int i = 0; i < p.passed; ++i) t.check(true, p.name);
    for (int i = 0; i < p.failed; ++i) t.check(false, p.name);
  }
  return t.verdict(std::to_string(kSuiteTrials) + " complexes x 11 properties");
}

Verdict criterion2() {
  floer::Rng rng(kSuiteSeed + 1);
  Tally t;
  for (int c = 0; c < kLemmaComplexes; ++c) {
    floer::GradedComplex d;
    d.lo = rng.between(-3, 3);
    const int len = rng.between(1, 8);
    for (int i = 0; i < len; ++i) d.dims.push_back(rng.below(6));
    d.maps = floer::random_morse_differential(d.dims, rng);
    const int hi = d.lo + len - 1;
    for (int s = d.lo - 1; s <= hi + 1; ++s) {
      for (int e = s; e <= s + kLemmaMaxGap; ++e) {
        const auto sides = floer::lemma_sides(d, s, e);
        t.check(sides.lhs == sides.rhs,
                "complex " + std::to_string(c) + " [" + std::to_string(s) + "," +
                    std::to_string(e) + "]");
      }
    }
  }
  return t.verdict(std::to_string(kLemmaComplexes) + " complexes, all windows t-s<=4");
}

Verdict criterion3() {
  Tally t;
  for (int k = 2; k <= 12; ++k) {
    std::vector<int> divisors;
    for (int N = 2; N <= 12; ++N) {
      if ((k + 1) % N == 0) divisors.push_back(N);
    }
    t.check(floer::divisibility_set(floer::sphere_support(k), k, 2, 12) == divisors,
            "sphere k=" + std::to_string(k));
  }
  for (int k = 3; k <= 10; ++k) {
    for (int N : floer::divisibility_set(floer::circle_bundle_support(k), k, 3, 12)) {
      t.check(k % N == 0, "circle k=" + std::to_string(k) + " N=" + std::to_string(N));
    }
  }
  return t.verdict();
}

Verdict criterion4() {
  Tally t;
  for (int n = 2; n <= 8; ++n) scenario(t, "thm-a", {{"n", n}});
  return t.verdict("n=2..8");
}

Verdict criterion5() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    scenario(t, "thm-b", {{"n", n}});
    scenario(t, "thm-c", {{"n", n}});
  }
  return t.verdict("n=1..6");
}

Verdict criterion6() {
  Tally t;
  for (int n = 3; n <= 8; ++n) scenario(t, "thm-g", {{"n", n}});
  return t.verdict("n=3..8");
}

Verdict criterion7() {
  Tally t;
  scenario(t, "thm-h1", {{"n", 9}, {"d", 3}});
  scenario(t, "thm-h1", {{"n", 11}, {"d", 4}});
  scenario(t, "thm-h2", {{"n", 9}, {"d", 3}});
  for (int n = 3; n <= 10; ++n) {
    for (int d = 3; d <= n + 1; ++d) scenario(t, "thm-h4", {{"n", n}, {"d", d}});
  }
  for (int n = 3; n <= 10; ++n) {
    for (int d = n + 2; d <= 4 * n + 8; ++d) {
      if (2 * d >= 3 * (n + 1)) scenario(t, "thm-h1", {{"n", n}, {"d", d}});
      t.check(floer::strongly_negative(n, d, 1) == (2 * d >= 3 * (n + 1)),
              "threshold n=" + std::to_string(n) + " d=" + std::to_string(d));
      for (int tor = 2; tor <= 4; ++tor) scenario(t, "thm-h5", {{"n", n}, {"d", d}, {"t", tor}});
    }
  }
  return t.verdict();
}

Verdict criterion8() {
  Tally t;
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) scenario(t, "thm-d", {{"n", n}, {"m", m}});
  }
  for (const char* name : {"thm-e", "m-cover-2"}) {
    for (int dm = 1; dm <= 10; ++dm) {
      for (int dx = 1; dx <= 10; ++dx) {
        for (int nm = 1; 2 * nm <= 12; ++nm) {
          scenario(t, name, {{"dimM", dm}, {"dimX", dx}, {"NM", nm}});
        }
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= 10; ++m) {
      if (n + m < 3) continue;
      for (int nm = 1; nm <= 12; ++nm) scenario(t, "thm-f", {{"n", n}, {"m", m}, {"NM", nm}});
    }
  }
  for (int n = 3; n <= 10; ++n) {
    for (int ns = 2; 2 * ns <= 12; ++ns) {
      scenario(t, "hypersurface-sphere", {{"n", n}, {"NS", ns}});
    }
  }
  return t.verdict();
}

Verdict criterion9() {
  Tally t;
  const auto ws = floer::testing::vanishing_witnesses(kEulerSeed, kEulerWitnesses);
  int index = 0;
  for (const auto& c : ws) {
    const int N = c.period();
    for (int s = -N; s <= N; ++s) {
      for (int e = s; e <= s + 2 * N; ++e) {
        const auto rep = floer::verify_inequalities(c, s, e);
        for (const auto& ch : rep.checks) {
          t.check(ch.pass, ch.name + " witness " + std::to_string(index) + " [" +
                               std::to_string(s) + "," + std::to_string(e) + "]");
        }
      }
    }
    ++index;
  }
  return t.verdict(std::to_string(ws.size()) + " witnesses");
}

// Every matrix of the given shape, grouped by rank.
std::vector<std::vector<floer::BitMatrix>> matrices_by_rank(std::size_t rows, std::size_t cols) {
  std::vector<std::vector<floer::BitMatrix>> out(std::min(rows, cols) + 1);
  const std::size_t bits = rows * cols;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    floer::BitMatrix m(rows, cols);
    for (std::size_t b = 0; b < bits; ++b) m.set(b / cols, b % cols, (mask >> b) & 1U);
    out[floer::gf2::rank(m)].push_back(std::move(m));
  }
  return out;
}

// Steps a mixed-radix counter; false once it wraps.
bool advance(std::vector<std::size_t>& pick, const std::vector<std::size_t>& radix) {
  std::size_t pos = 0;
  while (pos < pick.size() && ++pick[pos] == radix[pos]) pick[pos++] = 0;
  return pos < pick.size();
}

// Brute force with d_0 = 0 and dims = beta. The ranks of d_1 out of degrees
// N-1..k are enumerated first (HF vanishes only if beta_i = rk out + rk in);
// for each rank hit every matrix tuple with those ranks is tried, keeping
// one that satisfies the identities and whose homology computes to zero.
bool brute_nu1(const BettiVector& beta, int N) {
  const int k = static_cast<int>(beta.size()) - 1;
  const std::vector<std::size_t> dims(beta.begin(), beta.end());
  std::vector<int> sources;
  for (int i = N - 1; i <= k; ++i) sources.push_back(i);
  std::vector<std::vector<std::vector<floer::BitMatrix>>> mats;
  std::vector<std::size_t> rank_radix;
  for (int i : sources) {
    mats.push_back(matrices_by_rank(dims[i + 1 - N], dims[i]));
    rank_radix.push_back(mats.back().size());
  }
  std::vector<std::size_t> ranks(sources.size(), 0);
  do {
    std::vector<std::size_t> out(beta.size(), 0), in(beta.size(), 0);
    for (std::size_t s = 0; s < sources.size(); ++s) {
      out[sources[s]] += ranks[s];
      in[sources[s] + 1 - N] += ranks[s];
    }
    bool hit = true;
    for (std::size_t i = 0; i < beta.size(); ++i) hit = hit && dims[i] == out[i] + in[i];
    if (!hit) continue;
    std::vector<std::size_t> radix, pick(sources.size(), 0);
    bool empty = false;
    for (std::size_t s = 0; s < sources.size(); ++s) {
      radix.push_back(mats[s][ranks[s]].size());
      empty = empty || radix.back() == 0;
    }
    if (empty) continue;
    do {
      floer::FloerComplex c(k, N, dims);
      for (std::size_t s = 0; s < sources.size(); ++s) {
        c.set_op(1, sources[s], mats[s][ranks[s]][pick[s]]);
      }
      if (floer::validate(c).empty() && floer::homology_vanishes(c)) return true;
    } while (advance(pick, radix));
  } while (advance(ranks, rank_radix));
  return false;
}

Verdict criterion10() {
  Tally t;
  for (int k = 1; k <= 6; ++k) {
    for (int N = 2; N <= k + 1; ++N) {
      if (floer::nu_of(k, N) != 1) continue;
      BettiVector beta(static_cast<std::size_t>(k + 1), 0);
      while (true) {
        const auto oracle = floer::vanishing_feasible_nu1(beta, N);
        const bool brute = brute_nu1(beta, N);
        bool ok = oracle.feasible == brute;
        if (oracle.feasible) {
          ok = ok && oracle.witness && floer::validate(*oracle.witness).empty() &&
               floer::homology_vanishes(*oracle.witness);
        }
        std::string label = "k=" + std::to_string(k) + " N=" + std::to_string(N) + " beta=";
        for (int b : beta) label += std::to_string(b);
        t.check(ok, label);
        std::size_t pos = 0;
        while (pos < beta.size() && ++beta[pos] == 3) beta[pos++] = 0;
        if (pos == beta.size()) break;
      }
    }
  }
  return t.verdict("k<=6, entries<=2");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"spectral sequence suite", criterion1},
      {"lemma exactness", criterion2},
      {"sphere and circle divisibility", criterion3},
      {"RP^n cohomology in CP^n", criterion4},
      {"sphere and CP^n cohomology via circle bundles", criterion5},
      {"quadric profile A_Q", criterion6},
      {"hypersurface statements", criterion7},
      {"divisibility grids", criterion8},
      {"Euler inequalities", criterion9},
      {"nu = 1 oracle against brute force", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failed;
    std::printf("criterion %zu: %s  %s: %s (%.1fs)\n", i + 1, v.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
