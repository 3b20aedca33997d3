// floer: command-line front end for the floer library.
//
// Exit codes: 0 ok / reproduced, 1 mismatch or infeasible, 2 usage or parse
// error, 3 search budget exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floer/floer.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using floer::ParseError;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("'" + s + "' is not an integer");
  }
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::pair<int, int> int_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw ParseError("range '" + s + "' should look like a..b");
  return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

std::map<int, int> assignments(const std::vector<std::string>& items) {
  std::map<int, int> out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw ParseError("'" + it + "' should look like i=v");
    out[to_int(it.substr(0, eq))] = to_int(it.substr(eq + 1));
  }
  return out;
}

floer::Params named_assignments(const std::vector<std::string>& items) {
  floer::Params out;
  for (const auto& group : items) {
    std::stringstream ss(group);
    std::string it;
    while (std::getline(ss, it, ',')) {
      const auto eq = it.find('=');
      if (eq == std::string::npos) throw ParseError("'" + it + "' should look like name=value");
      out[it.substr(0, eq)] = to_int(it.substr(eq + 1));
    }
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json violations_json(const std::vector<floer::Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(Json{{"m", v.m}, {"degree", v.degree}});
  return out;
}

// Loads a complex and refuses one that breaks the identities.
std::optional<floer::FloerComplex> load_valid(const std::string& path) {
  auto c = floer::io::load_complex(path);
  const auto vs = floer::validate(c);
  if (!vs.empty()) {
    emit(Json{{"valid", false}, {"violations", violations_json(vs)}});
    return std::nullopt;
  }
  return c;
}

// --- pages ------------------------------------------------------------------

struct PagesArgs {
  std::string file;
  int r_max = -1;
  bool json = false;
  std::string window;
};

int cmd_pages(const PagesArgs& a) {
  const auto c = load_valid(a.file);
  if (!c) return kMismatch;
  floer::Window w = floer::check_window(*c);
  if (!a.window.empty()) {
    const auto v = int_list(a.window);
    if (v.size() != 4) throw ParseError("--window takes p_lo,p_hi,l_lo,l_hi");
    w = {v[0], v[1], v[2], v[3]};
  }
  if (w.empty()) throw floer::WindowTooSmall("page window is empty");
  const int last = a.r_max < 0 ? c->nu() + 1 : std::min(a.r_max, c->nu() + 1);
  const auto lc = std::make_shared<const floer::LaurentComplex>(
      floer::build_laurent(*c, w.l_lo - 2, w.l_hi + 3));
  Json pages = Json::array();
  for (int r = 0; r <= last; ++r) {
    const auto pg = floer::page(lc, r, w);
    if (a.json) {
      pages.push_back(floer::io::page_json(pg));
    } else {
      std::cout << floer::io::page_grid(pg) << "\n";
    }
  }
  if (a.json) emit(pages);
  return kOk;
}

// --- homology -----------------------------------------------------------------

int cmd_homology(const std::string& file) {
  const auto c = load_valid(file);
  if (!c) return kMismatch;
  const auto lc = floer::build_laurent(*c);
  Json j;
  j["morse"] = floer::morse_homology(*c);
  j["floer"] = floer::floer_homology(lc);
  j["vanishes"] = floer::homology_vanishes(*c);
  emit(j);
  return kOk;
}

// --- verify-ss ----------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 1;
  int trials = 100;
  int max_n = 6;
  int max_dim = 4;
  std::string complex;
};

int cmd_verify(const VerifyArgs& a) {
  floer::SuiteOptions opt{a.seed, a.trials, a.max_n, a.max_dim};
  std::optional<floer::FloerComplex> only;
  if (!a.complex.empty()) {
    only = floer::io::load_complex(a.complex);
    const auto vs = floer::validate(*only);
    if (!vs.empty()) {
      emit(Json{{"complex", a.complex},
                {"valid", false},
                {"violations", violations_json(vs)},
                {"all_pass", false}});
      return kMismatch;
    }
  }
  const auto report = floer::run_property_suite(opt, only ? &*only : nullptr);
  Json props = Json::array();
  bool all = true;
  for (const auto& p : report) {
    Json e{{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}};
    if (p.first_failure) e["first_failure"] = *p.first_failure;
    all = all && p.failed == 0;
    props.push_back(std::move(e));
  }
  Json j;
  if (only) {
    j["complex"] = a.complex;
  } else {
    j["seed"] = a.seed;
    j["trials"] = a.trials;
  }
  j["properties"] = props;
  j["all_pass"] = all;
  emit(j);
  return all ? kOk : kMismatch;
}

// --- betti-search -------------------------------------------------------------

struct BettiArgs {
  int dim = 0;
  int maslov = 2;
  bool pd = false;
  std::vector<std::string> fix;
  std::vector<std::string> at_least;
  int bound = 4;
  bool no_strict = false;
  long long budget = floer::kDefaultSearchBudget;
};

int cmd_betti(const BettiArgs& a) {
  floer::BettiConstraints c;
  c.fix = assignments(a.fix);
  c.at_least = assignments(a.at_least);
  c.pd = a.pd;
  c.bound = a.bound;
  c.strict = !a.no_strict;
  c.budget = a.budget;
  Json j;
  j["dim"] = a.dim;
  j["maslov"] = a.maslov;
  j["nu"] = floer::nu_of(a.dim, a.maslov);
  j["bound"] = a.bound;
  j["pd"] = a.pd;
  try {
    const auto sols = floer::forced_betti(a.dim, a.maslov, c);
    j["solutions"] = sols;
    emit(j);
    return sols.empty() ? kMismatch : kOk;
  } catch (const floer::BoundTooSmall& e) {
    j["outcome"] = "bound-too-small";
    j["needed"] = e.needed();
    emit(j);
    return kMismatch;
  }
}

// --- gysin --------------------------------------------------------------------

struct GysinArgs {
  std::string total;
  int base_dim = 0;
  bool w_zero = false;
  bool pd = false;
  std::vector<std::string> fix;
  std::vector<std::string> at_least;
  int bound = 4;
};

int cmd_gysin(const GysinArgs& a) {
  floer::GysinConstraints c;
  c.fix = assignments(a.fix);
  c.at_least = assignments(a.at_least);
  c.pd = a.pd;
  c.bound = a.bound;
  const auto total = int_list(a.total);
  Json j;
  j["total"] = total;
  j["base_dim"] = a.base_dim;
  j["w_zero"] = a.w_zero;
  try {
    const auto sols = floer::gysin_solve(total, a.base_dim, a.w_zero, c);
    Json arr = Json::array();
    for (const auto& s : sols) {
      arr.push_back(Json{{"base", s.base},
                         {"pullback", s.pullback},
                         {"pushdown", s.pushdown},
                         {"cup", s.cup}});
    }
    j["solutions"] = arr;
    emit(j);
    return sols.empty() ? kMismatch : kOk;
  } catch (const floer::BoundTooSmall& e) {
    j["outcome"] = "bound-too-small";
    j["needed"] = e.needed();
    emit(j);
    return kMismatch;
  }
}

// --- divisibility -------------------------------------------------------------

struct DivArgs {
  std::string support;
  int dim = 0;
  std::string range = "2..12";
  long long budget = floer::kDefaultSearchBudget;
};

int cmd_divisibility(const DivArgs& a) {
  const auto support = int_list(a.support);
  const auto [lo, hi] = int_range(a.range);
  const auto beta = floer::support_betti(support, a.dim);
  Json per = Json::array();
  std::vector<int> feasible;
  for (int N = lo; N <= hi; ++N) {
    const auto res = floer::vanishing_feasible_pages(beta, N, a.budget);
    if (res.feasible) feasible.push_back(N);
    per.push_back(Json{{"N", N}, {"nu", res.nu}, {"verdict", res.label()}});
  }
  Json j;
  j["support"] = support;
  j["dim"] = a.dim;
  j["maslov_range"] = {lo, hi};
  j["feasible"] = feasible;
  j["verdicts"] = per;
  emit(j);
  return kOk;
}

// --- euler --------------------------------------------------------------------

int cmd_euler(const std::string& file, int s, int t) {
  const auto c = load_valid(file);
  if (!c) return kMismatch;
  const auto rep = floer::verify_inequalities(*c, s, t);
  Json checks = Json::object();
  for (const auto& ch : rep.checks) {
    checks[ch.name] =
        Json{{"lower", ch.lower}, {"value", ch.value}, {"upper", ch.upper}, {"pass", ch.pass}};
  }
  Json j;
  j["s"] = rep.s;
  j["t"] = rep.t;
  j["nu"] = rep.nu;
  j["chi"] = rep.chi;
  j["gammas"] = rep.gammas;
  j["kappas"] = rep.kappas;
  j["checks"] = checks;
  emit(j);
  return rep.all_pass() ? kOk : kMismatch;
}

// --- scenario -----------------------------------------------------------------

int cmd_scenario_list() {
  Json arr = Json::array();
  for (const auto& s : floer::scenarios()) {
    arr.push_back(Json{{"name", s.name}, {"summary", s.summary}, {"defaults", s.defaults}});
  }
  emit(arr);
  return kOk;
}

int cmd_scenario_run(const std::string& name, const std::vector<std::string>& params) {
  if (floer::find_scenario(name) == nullptr) throw ParseError("unknown scenario '" + name + "'");
  const auto res = floer::run(name, named_assignments(params));
  emit(floer::to_json(res));
  return res.reproduced ? kOk : kMismatch;
}

// --- random -------------------------------------------------------------------

int cmd_random(std::uint64_t seed, int n, int N, int max_dim) {
  if (N < 2) throw ParseError("--N must be >= 2");
  if (n < 0) throw ParseError("--n must be >= 0");
  if (max_dim < 0) throw ParseError("--max-dim must be >= 0");
  floer::Rng rng(seed);
  emit(floer::io::to_json(floer::random_complex(rng, n, N, {max_dim, 64})));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floer complexes over Z2: spectral sequence pages and cohomological deductions"};
  app.require_subcommand(1);

  PagesArgs pages;
  auto* sc_pages = app.add_subcommand("pages", "render pages E_0 .. E_{nu+1} of a complex");
  sc_pages->add_option("file", pages.file, "complex JSON")->required();
  sc_pages->add_option("--r-max", pages.r_max, "last page to render");
  sc_pages->add_flag("--json", pages.json, "emit JSON instead of text grids");
  sc_pages->add_option("--window", pages.window, "p_lo,p_hi,l_lo,l_hi");

  std::string homology_file;
  auto* sc_hom = app.add_subcommand("homology", "Morse and Floer homology of a complex");
  sc_hom->add_option("file", homology_file, "complex JSON")->required();

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify-ss", "spectral sequence property suite");
  sc_verify->add_option("--seed", verify.seed);
  sc_verify->add_option("--trials", verify.trials)->check(CLI::NonNegativeNumber);
  sc_verify->add_option("--max-n", verify.max_n)->check(CLI::PositiveNumber);
  sc_verify->add_option("--max-dim", verify.max_dim)->check(CLI::NonNegativeNumber);
  sc_verify->add_option("--complex", verify.complex, "check a single complex file instead");

  BettiArgs betti;
  auto* sc_betti = app.add_subcommand("betti-search", "Betti vectors compatible with HF = 0");
  sc_betti->add_option("--dim", betti.dim)->required();
  sc_betti->add_option("--maslov", betti.maslov)->required();
  sc_betti->add_flag("--pd", betti.pd, "Poincare duality");
  sc_betti->add_option("--fix", betti.fix, "i=v");
  sc_betti->add_option("--at-least", betti.at_least, "i=v");
  sc_betti->add_option("--bound", betti.bound)->check(CLI::NonNegativeNumber);
  sc_betti->add_flag("--no-strict", betti.no_strict, "cap silently at the bound");
  sc_betti->add_option("--budget", betti.budget);

  GysinArgs gysin;
  auto* sc_gysin = app.add_subcommand("gysin", "base Betti numbers from a circle bundle");
  sc_gysin->add_option("--total", gysin.total, "Betti numbers of the bundle, comma separated")
      ->required();
  sc_gysin->add_option("--base-dim", gysin.base_dim)->required();
  sc_gysin->add_flag("--w-zero", gysin.w_zero, "Euler class vanishes");
  sc_gysin->add_flag("--pd", gysin.pd, "Poincare duality on the base");
  sc_gysin->add_option("--fix", gysin.fix, "i=v");
  sc_gysin->add_option("--at-least", gysin.at_least, "i=v");
  sc_gysin->add_option("--bound", gysin.bound)->check(CLI::NonNegativeNumber);

  DivArgs div;
  auto* sc_div = app.add_subcommand("divisibility", "Maslov numbers admitting HF = 0");
  sc_div->add_option("--support", div.support, "degrees with beta = 1")->required();
  sc_div->add_option("--dim", div.dim)->required();
  sc_div->add_option("--maslov-range", div.range, "lo..hi");
  sc_div->add_option("--budget", div.budget);

  std::string euler_file;
  int euler_s = 0, euler_t = 0;
  auto* sc_euler = app.add_subcommand("euler", "Euler characteristic inequalities");
  sc_euler->add_option("--complex", euler_file)->required();
  sc_euler->add_option("--s", euler_s)->required();
  sc_euler->add_option("--t", euler_t)->required();

  auto* sc_scen = app.add_subcommand("scenario", "encoded theorems");
  sc_scen->require_subcommand(1);
  auto* sc_list = sc_scen->add_subcommand("list", "list scenarios");
  std::string scen_name;
  std::vector<std::string> scen_params;
  auto* sc_run = sc_scen->add_subcommand("run", "run one scenario");
  sc_run->add_option("name", scen_name)->required();
  sc_run->add_option("--params,--param", scen_params, "name=value[,name=value...]");

  std::uint64_t rnd_seed = 1;
  int rnd_n = 3, rnd_N = 2, rnd_dim = 4;
  auto* sc_rand = app.add_subcommand("random", "a seeded random valid complex");
  sc_rand->add_option("--seed", rnd_seed);
  sc_rand->add_option("--n", rnd_n);
  sc_rand->add_option("--N", rnd_N);
  sc_rand->add_option("--max-dim", rnd_dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sc_pages) return cmd_pages(pages);
    if (*sc_hom) return cmd_homology(homology_file);
    if (*sc_verify) return cmd_verify(verify);
    if (*sc_betti) return cmd_betti(betti);
    if (*sc_gysin) return cmd_gysin(gysin);
    if (*sc_div) return cmd_divisibility(div);
    if (*sc_euler) return cmd_euler(euler_file, euler_s, euler_t);
    if (*sc_list) return cmd_scenario_list();
    if (*sc_run) return cmd_scenario_run(scen_name, scen_params);
    if (*sc_rand) return cmd_random(rnd_seed, rnd_n, rnd_N, rnd_dim);
  } catch (const floer::SearchBudgetExceeded& e) {
    std::cerr << "budget exceeded after " << e.explored() << " steps: " << e.what() << "\n";
    return kBudget;
  } catch (const floer::HFNotZero& e) {
    std::cerr << e.what() << "\n";
    return kMismatch;
  } catch (const floer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
