#pragma once

// Property suite for the spectral sequence, run on seeded random complexes.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "floer/complex.hpp"
#include "floer/io.hpp"
#include "floer/random.hpp"
#include "floer/specseq.hpp"
#include "json.hpp"

namespace floer {

struct PropertyOutcome {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  std::optional<nlohmann::ordered_json> first_failure;
};

namespace detail {

// A Laurent complex wide enough for pages up to nu+2 built either way on
// check_window(c).
inline std::shared_ptr<const LaurentComplex> suite_laurent(const FloerComplex& c) {
  const Window w = check_window(c);
  const int margin = c.nu() + 4;
  return std::make_shared<const LaurentComplex>(
      build_laurent(c, w.l_lo - margin, w.l_hi + margin));
}

inline bool same_dims(const Page& a, const Page& b) {
  for (const auto& [key, cell] : a.cells()) {
    if (!b.window().contains(key.first, key.second)) continue;
    if (b.at(key.first, key.second).dim() != cell.dim()) return false;
  }
  return true;
}

inline bool page_is_zero(const Page& pg) {
  for (const auto& [key, cell] : pg.cells()) {
    if (cell.dim() != 0) return false;
  }
  return true;
}

}  // namespace detail

using ComplexProperty = std::function<bool(const FloerComplex&, Rng&)>;

// Named properties, in report order. Each takes a valid complex.
inline const std::vector<std::pair<std::string, ComplexProperty>>& ss_properties() {
  using detail::suite_laurent;
  static const std::vector<std::pair<std::string, ComplexProperty>> props = {
      {"page0-chain-dims",
       [](const FloerComplex& c, Rng&) {
         const auto pg = page(suite_laurent(c), 0, check_window(c));
         for (const auto& [key, cell] : pg.cells()) {
           const int deg = cell.l - cell.p * c.period();
           if (cell.dim() != c.dim_at(deg)) return false;
         }
         return true;
       }},
      {"page1-morse-betti",
       [](const FloerComplex& c, Rng&) {
         const auto beta = morse_homology(c);
         const auto pg = page(suite_laurent(c), 1, check_window(c));
         for (const auto& [key, cell] : pg.cells()) {
           const int deg = cell.l - cell.p * c.period();
           const std::size_t want =
               (deg < 0 || deg > c.top()) ? 0 : static_cast<std::size_t>(beta[deg]);
           if (cell.dim() != want) return false;
         }
         return true;
       }},
      {"delta-rank-basis-free",
       [](const FloerComplex& c, Rng& rng) {
         // Isomorphic complexes must give the same page differential ranks.
         const auto other = random_conjugate(c, rng);
         const auto w = check_window(c);
         for (int r = 0; r <= c.nu() + 1; ++r) {
           const auto a = page(suite_laurent(c), r, w);
           const auto b = page(suite_laurent(other), r, w);
           for (const auto& [key, cell] : a.cells()) {
             const auto& twin = b.at(key.first, key.second);
             if (cell.dim() != twin.dim()) return false;
             if (cell.delta.has_value() != twin.delta.has_value()) return false;
             if (cell.delta && gf2::rank(*cell.delta) != gf2::rank(*twin.delta)) return false;
           }
         }
         return true;
       }},
      {"collapse",
       [](const FloerComplex& c, Rng&) {
         const auto lc = suite_laurent(c);
         for (int r = c.nu() + 1; r <= c.nu() + 2; ++r) {
           if (!differentials_vanish(page(lc, r, check_window(c)))) return false;
         }
         return true;
       }},
      {"convergence",
       [](const FloerComplex& c, Rng&) {
         return sum_rule_holds(e_infinity(suite_laurent(c), check_window(c)));
       }},
      {"fixed-p-sum",
       [](const FloerComplex& c, Rng&) {
         return check_statement5(*suite_laurent(c), check_window(c));
       }},
      {"vanishing-criterion",
       [](const FloerComplex& c, Rng&) {
         const bool zero_page = detail::page_is_zero(e_infinity(suite_laurent(c), check_window(c)));
         return zero_page == homology_vanishes(c);
       }},
      {"support-bound",
       [](const FloerComplex& c, Rng&) {
         const auto lc = suite_laurent(c);
         for (int r = 0; r <= c.nu() + 1; ++r) {
           if (!support_bound_holds(page(lc, r, check_window(c)))) return false;
         }
         return true;
       }},
      {"delta-squared",
       [](const FloerComplex& c, Rng&) {
         const auto lc = suite_laurent(c);
         for (int r = 0; r <= c.nu() + 1; ++r) {
           if (!delta_squares_to_zero(page(lc, r, check_window(c)))) return false;
         }
         return true;
       }},
      {"periodicity",
       [](const FloerComplex& c, Rng&) {
         const auto lc = suite_laurent(c);
         for (int r = 0; r <= c.nu() + 1; ++r) {
           const auto pg = page(lc, r, check_window(c));
           for (const auto& [key, cell] : pg.cells()) {
             const int p = key.first + 1;
             const int l = key.second + c.period();
             if (pg.window().contains(p, l) && pg.at(p, l).dim() != cell.dim()) return false;
           }
         }
         return true;
       }},
      {"two-routes",
       [](const FloerComplex& c, Rng&) {
         const auto lc = suite_laurent(c);
         const auto w = check_window(c);
         for (int r = 1; r <= c.nu() + 1; ++r) {
           if (!detail::same_dims(page(lc, r, w), page_by_turns(lc, r, w))) return false;
         }
         return true;
       }},
  };
  return props;
}

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int max_n = 6;
  int max_dim = 4;
};

// Draws n in [1, max_n], N in [2, n+2] and a random valid complex.
inline FloerComplex suite_complex(Rng& rng, const SuiteOptions& opt) {
  const int n = rng.between(1, opt.max_n);
  const int N = rng.between(2, n + 2);
  return random_complex(rng, n, N, {opt.max_dim, 64});
}

inline std::vector<PropertyOutcome> run_property_suite(const SuiteOptions& opt,
                                                       const FloerComplex* only = nullptr) {
  std::vector<PropertyOutcome> out;
  for (const auto& [name, fn] : ss_properties()) out.push_back({name, 0, 0, std::nullopt});
  Rng rng(opt.seed);
  auto check = [&](const FloerComplex& c) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      bool ok = false;
      try {
        ok = ss_properties()[k].second(c, rng);
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) {
        ++out[k].passed;
      } else {
        if (!out[k].first_failure) {
          out[k].first_failure = io::to_json(c);
        }
        ++out[k].failed;
      }
    }
  };
  if (only != nullptr) {
    check(*only);
    return out;
  }
  for (int t = 0; t < opt.trials; ++t) check(suite_complex(rng, opt));
  return out;
}

}  // namespace floer
