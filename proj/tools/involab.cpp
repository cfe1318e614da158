#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "involab/bijections.hpp"
#include "involab/catalog.hpp"
#include "involab/errors.hpp"
#include "involab/lattice_word.hpp"
#include "involab/oracle.hpp"
#include "involab/succession.hpp"
#include "involab/verify.hpp"

using namespace involab;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadFlags = 2, kLimit = 3, kDomain = 4, kUnknown = 5 };

struct Config {
  int order = 20;
  Limits limits;
  std::string format;  // empty: per-command default
  int workers = 0;
};

struct BadFlag : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string perm_text(const Permutation& p) { return p.empty() ? "ε" : p.to_string(); }
std::string word_text(const LatticeWord& w) { return w.empty() ? "ε" : w.to_string(); }

PatternSpec pattern_flag(const std::string& s) {
  try {
    return PatternSpec::parse(s);
  } catch (const DomainError& e) {
    throw BadFlag(e.what());
  }
}

json perm_stats(const Permutation& p) {
  const auto s = statistics(p);
  return {{"fixed_points", std::to_string(s.fixed_points)}, {"inversions", std::to_string(s.inversions)},
          {"rises", std::to_string(s.rises)}, {"rtl_maxima", std::to_string(s.rtl_maxima)},
          {"ltr_minima", std::to_string(s.ltr_minima)}, {"length", std::to_string(p.size())}};
}

json word_stats(const LatticeWord& w) {
  json j = {{"length", std::to_string(w.size())}, {"height", std::to_string(w.height())},
            {"ups", std::to_string(w.ups())}, {"downs", std::to_string(w.downs())}};
  if (is_dyck_prefix(w)) {
    j["right_dyck_steps"] = std::to_string(right_dyck_steps(w));
    j["double_steps_of_xi"] = std::to_string(double_step_count(xi(w)));
  }
  if (is_bilateral(w)) j["double_steps"] = std::to_string(double_step_count(w));
  return j;
}

void print_stats(const json& j, const char* label) {
  std::cout << label << ':';
  for (auto& [k, v] : j.items()) std::cout << ' ' << k << '=' << v.get<std::string>();
  std::cout << '\n';
}

// enumerate

struct EnumerateArgs {
  std::string cls = "involutions";
  int n = -1;
  std::vector<std::string> avoid;
  std::vector<std::string> contain;
  std::vector<std::string> stats;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a, const Config& cfg) {
  CountQuery q;
  q.cls = a.cls == "permutations" ? ObjectClass::Permutations : ObjectClass::Involutions;
  q.n = a.n;
  q.limits = cfg.limits;
  for (const auto& s : a.avoid) q.avoid.push_back(pattern_flag(s));
  for (const auto& s : a.contain) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw BadFlag("--contain wants PATTERN=COUNT");
    int c = 0;
    try {
      std::size_t used = 0;
      c = std::stoi(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1 || c < 0) throw BadFlag("");
    } catch (const std::exception&) {
      throw BadFlag("bad count in --contain " + s);
    }
    q.contain.push_back({pattern_flag(s.substr(0, eq)), c});
  }
  for (const auto& s : a.stats) {
    try {
      q.stats.push_back(Statistic::parse(s));
    } catch (const std::invalid_argument& e) {
      throw BadFlag(e.what());
    }
  }
  const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;

  if (q.stats.empty() && !a.count_only) {
    const auto objs = enumerate(q);
    if (fmt == "json") {
      json j = {{"class", a.cls}, {"n", std::to_string(a.n)}, {"count", std::to_string(objs.size())}};
      j["objects"] = json::array();
      for (const auto& p : objs) j["objects"].push_back(p.to_string());
      std::cout << j.dump(2) << '\n';
    } else {
      if (fmt == "csv") std::cout << "object\n";
      for (const auto& p : objs) std::cout << (fmt == "csv" ? p.to_string() : perm_text(p)) << '\n';
    }
    return kOk;
  }

  const auto d = distribution(q, cfg.workers);
  std::uint64_t total = 0;
  for (const auto& [k, c] : d) total += c;
  if (fmt == "json") {
    json j = {{"class", a.cls}, {"n", std::to_string(a.n)}, {"count", std::to_string(total)}};
    json rows = json::array();
    for (const auto& [key, c] : d) {
      if (q.stats.empty()) break;
      json st;
      for (std::size_t i = 0; i < key.size(); ++i) st[q.stats[i].name()] = std::to_string(key[i]);
      rows.push_back({{"stats", st}, {"count", std::to_string(c)}});
    }
    if (!q.stats.empty()) j["distribution"] = rows;
    std::cout << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    for (const auto& s : q.stats) std::cout << s.name() << ',';
    std::cout << "count\n";
    for (const auto& [key, c] : d) {
      for (auto v : key) std::cout << v << ',';
      std::cout << c << '\n';
    }
  } else if (q.stats.empty()) {
    std::cout << total << '\n';
  } else {
    for (const auto& [key, c] : d) {
      for (std::size_t i = 0; i < key.size(); ++i) std::cout << (i ? " " : "") << key[i];
      std::cout << ": " << c << '\n';
    }
  }
  return kOk;
}

// biject

int cmd_biject(const std::string& map, const std::string& input, const Config& cfg) {
  json j = {{"map", map}, {"input", input}};
  std::string out;
  json in_stats, out_stats;
  if (map == "phi" || map == "stack") {
    const auto p = Permutation::parse(input);
    const auto w = map == "phi" ? phi(p) : stack_sort_word(p);
    out = word_text(w);
    in_stats = perm_stats(p);
    out_stats = word_stats(w);
    if (map == "stack") out_stats["primitive_factors"] = std::to_string(primitive_factors(w));
  } else if (map == "phi-inv") {
    const auto w = LatticeWord::parse(input);
    const auto p = phi_inv(w);
    out = perm_text(p);
    in_stats = word_stats(w);
    out_stats = perm_stats(p);
  } else if (map == "xi" || map == "xi-inv") {
    const auto w = LatticeWord::parse(input);
    const auto b = map == "xi" ? xi(w) : xi_inv(w);
    out = word_text(b);
    in_stats = word_stats(w);
    out_stats = word_stats(b);
  } else if (map == "psi" || map == "rtl-lemma" || map == "rtl-lemma-inv") {
    const auto p = Permutation::parse(input);
    Permutation r;
    if (map == "psi") {
      r = psi(p);
    } else {
      const auto res = rtl_lemma_map(p, map == "rtl-lemma" ? Direction::Forward : Direction::Inverse);
      r = res.image;
      j["case"] = to_string(res.which);
    }
    out = perm_text(r);
    in_stats = perm_stats(p);
    out_stats = perm_stats(r);
  } else {
    throw BadFlag("unknown map: " + map);
  }
  j["output"] = out == "ε" ? "" : out;
  j["input_stats"] = in_stats;
  j["output_stats"] = out_stats;

  const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
  if (fmt == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    std::cout << "map,input,output\n" << map << ',' << input << ',' << j["output"].get<std::string>() << '\n';
  } else {
    std::cout << out << '\n';
    if (j.contains("case")) std::cout << "case: " << j["case"].get<std::string>() << '\n';
    print_stats(in_stats, "input");
    print_stats(out_stats, "output");
  }
  return kOk;
}

// series

int cmd_series(const std::string& gf, int k, int d, const std::string& variant, const Config& cfg) {
  GfParams gp{k, d, FormulaVariant::Corrected};
  if (variant == "printed") gp.variant = FormulaVariant::Printed;
  else if (variant == "printed-alt") gp.variant = FormulaVariant::PrintedAlt;
  else if (variant != "corrected") throw BadFlag("unknown variant: " + variant);
  const auto s = gf_catalog(gf, gp, cfg.order);
  const auto c = s.to_strings();
  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt == "json") {
    json j = {{"gf", gf}, {"coefficients", c}};
    j["params"] = {{"order", std::to_string(cfg.order)}};
    if (k) j["params"]["k"] = std::to_string(k);
    if (d) j["params"]["d"] = std::to_string(d);
    if (gp.variant != FormulaVariant::Corrected) j["params"]["variant"] = variant;
    std::cout << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    std::cout << "n,coefficient\n";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << i << ',' << c[i] << '\n';
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
    std::cout << '\n';
  }
  return kOk;
}

// verify

std::string join(const std::vector<mpz_class>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

std::string params_text(const VerifyReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

json report_json(const VerifyReport& r) {
  json j = {{"target", r.target}, {"verdict", r.verdict()}, {"gating", r.gating ? "true" : "false"}};
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = std::to_string(v);
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json e = json::array(), o = json::array();
    for (const auto& x : row.expected) e.push_back(x.get_str());
    for (const auto& x : row.observed) o.push_back(x.get_str());
    j["rows"].push_back({{"n", std::to_string(row.n)}, {"expected", e}, {"observed", o}, {"match", row.match}});
  }
  return j;
}

int cmd_verify(const std::string& target, const VerifyOptions& opt, const Config& cfg) {
  Verifier v(cfg.limits, cfg.workers);
  const auto reps = v.run(target, opt);
  bool ok = true;
  for (const auto& r : reps) ok = ok && (!r.gating || r.all_match());
  const std::string fmt = cfg.format.empty() ? (target == "all" ? "plain" : "json") : cfg.format;
  if (fmt == "json") {
    if (reps.size() == 1) {
      std::cout << report_json(reps[0]).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : reps) arr.push_back(report_json(r));
      std::cout << json{{"reports", arr}, {"verdict", ok ? "all-match" : "mismatch"}}.dump(2) << '\n';
    }
  } else if (fmt == "csv") {
    std::cout << "target,params,n,expected,observed,match\n";
    for (const auto& r : reps)
      for (const auto& row : r.rows)
        std::cout << r.target << ',' << params_text(r) << ',' << row.n << ',' << join(row.expected) << ','
                  << join(row.observed) << ',' << (row.match ? "true" : "false") << '\n';
  } else {
    for (const auto& r : reps) {
      std::cout << r.target;
      if (!r.params.empty()) std::cout << " [" << params_text(r) << ']';
      std::cout << "  " << r.verdict() << (r.gating ? "" : " (not gating)") << '\n';
      for (const auto& row : r.rows)
        if (!row.match)
          std::cout << "    n=" << row.n << " expected " << join(row.expected) << " observed " << join(row.observed)
                    << '\n';
    }
    std::cout << (ok ? "all-match" : "mismatch") << '\n';
  }
  return ok ? kOk : kMismatch;
}

// table

int cmd_table(const std::string& kind, int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (kind == "inversions") std::cout << dp_inversions(n).to_csv();
  else if (kind == "rises") std::cout << dp_rises(n).to_csv();
  else throw BadFlag("unknown table: " + kind);
  return kOk;
}

int env_order() {
  const char* e = std::getenv("INVOLAB_ORDER");
  if (!e || !*e) return 20;
  char* end = nullptr;
  const long v = std::strtol(e, &end, 10);
  if (*end || v <= 0) throw BadFlag("INVOLAB_ORDER must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-restricted involutions: enumeration, bijections, generating functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::optional<int> order;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--max-involutions", cfg.limits.involutions, "Largest involution length enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-permutations", cfg.limits.permutations, "Largest permutation length enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Enumeration threads, 0 = hardware")->check(CLI::NonNegativeNumber);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List objects or tabulate statistics");
  en->add_option("--class", ea.cls)->check(CLI::IsMember({"involutions", "permutations"}));
  en->add_option("--n", ea.n, "Length")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--avoid", ea.avoid, "Pattern to avoid, e.g. 1-3-2")->allow_extra_args(false);
  en->add_option("--contain", ea.contain, "PATTERN=COUNT, exact occurrence count")->allow_extra_args(false);
  en->add_option("--stats", ea.stats, "fixed_points, inversions, parity, rises, rtl_maxima, ltr_minima, "
                                      "occurrences:PATTERN")
      ->delimiter(',');
  en->add_flag("--count", ea.count_only, "Print only the number of objects");

  std::string map, input;
  auto* bj = app.add_subcommand("biject", "Apply a bijection");
  bj->add_option("--map", map)->required()->check(
      CLI::IsMember({"phi", "phi-inv", "xi", "xi-inv", "psi", "stack", "rtl-lemma", "rtl-lemma-inv"}));
  bj->add_option("--input", input)->required();

  std::string gf, variant = "corrected";
  int k = 0, d = 0;
  auto* se = app.add_subcommand("series", "Print a generating function");
  se->add_option("--gf", gf)->required();
  se->add_option("--k", k)->check(CLI::NonNegativeNumber);
  se->add_option("--d", d)->check(CLI::NonNegativeNumber);
  se->add_option("--order", order, "Truncation order (default $INVOLAB_ORDER or 20)")->check(CLI::PositiveNumber);
  se->add_option("--variant", variant, "corrected, printed or printed-alt");

  std::string target;
  VerifyOptions vo;
  std::optional<int> vk, vd;
  auto* ve = app.add_subcommand("verify", "Compare formulas with brute-force counts");
  ve->add_option("--target", target)->required();
  ve->add_option("--n-max", vo.n_max)->check(CLI::NonNegativeNumber);
  ve->add_option("--k", vk)->check(CLI::PositiveNumber);
  ve->add_option("--d", vd)->check(CLI::PositiveNumber);
  ve->add_flag_callback("--list", [] {
    for (const auto& t : verify_targets())
      std::cout << t.name << (t.gating ? "" : " (not gating)") << ": " << t.description << '\n';
    std::exit(kOk);
  }, "List targets");

  std::string kind;
  int tn = 0;
  auto* tb = app.add_subcommand("table", "Dump a dynamic-programming table as CSV");
  tb->add_option("--kind", kind)->required()->check(CLI::IsMember({"inversions", "rises"}));
  tb->add_option("--n", tn)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadFlags;
  }

  try {
    cfg.order = order ? *order : env_order();
    if (*en) return cmd_enumerate(ea, cfg);
    if (*bj) return cmd_biject(map, input, cfg);
    if (*se) return cmd_series(gf, k, d, variant, cfg);
    if (*ve) {
      vo.k = vk;
      vo.d = vd;
      return cmd_verify(target, vo, cfg);
    }
    if (*tb) return cmd_table(kind, tn);
  } catch (const BadFlag& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const UnknownName& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return kUnknown;
  } catch (const DomainError& e) {
    std::cerr << "domain violation: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
