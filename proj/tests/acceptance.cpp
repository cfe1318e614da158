// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when a gating criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "involab/catalog.hpp"
#include "involab/polynomial.hpp"
#include "involab/verify.hpp"

using namespace involab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// run targets, collect the first few mismatching rows
Outcome targets(Verifier& v, const std::vector<std::pair<std::string, int>>& list) {
  Outcome o;
  int reports = 0, rows = 0;
  for (const auto& [name, n_max] : list) {
    VerifyOptions opt;
    opt.n_max = n_max;
    for (const auto& r : v.run(name, opt)) {
      ++reports;
      rows += static_cast<int>(r.rows.size());
      for (const auto& row : r.rows) {
        if (row.match) continue;
        if (o.pass) {
          std::ostringstream s;
          s << r.target << " n=" << row.n << " mismatch; ";
          o.detail += s.str();
        }
        o.pass = false;
      }
    }
  }
  o.detail += std::to_string(reports) + " reports, " + std::to_string(rows) + " rows";
  return o;
}

void merge(Outcome& a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += (a.detail.empty() ? "" : "; ") + b.detail;
}

long as_long(const Rational& q) { return q.get_den() == 1 ? q.get_num().get_si() : -999999; }

Outcome check(bool ok, const std::string& what) { return {ok, what + (ok ? " ok" : " FAILED")}; }

Outcome criterion1(Verifier& v) {
  auto o = targets(v, {{"baseline", 14}});
  // independent row: binom(n, n/2)
  const long want[] = {1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432};
  bool ok = true;
  for (int n = 0; n <= 14; ++n) {
    long c = 0;
    for (const auto& x : v.universe(n)) c += x.c132 == 0;
    ok = ok && c == want[n] && c == brute::binom(n, n / 2);
  }
  merge(o, check(ok, "listed values"));
  return o;
}

Outcome criterion7(Verifier& v) {
  auto o = targets(v, {{"tha1", 12}, {"tha2", 12}, {"tha3", 12}, {"tha4", 12}, {"thb2", 12}, {"thb3", 12},
                       {"thb4", 12}, {"thc1", 12}, {"thc2", 12}, {"thc3", 12}, {"thc4", 12}, {"thd1", 12},
                       {"thd2", 12}});
  const auto ie123 = gf_catalog("Ie_123", {}, 8);
  const std::vector<long> want123 = {1, 1, 1, 0, 2, 4, 4, 0, 8};
  bool ok = true;
  for (int n = 0; n <= 8; ++n) ok = ok && as_long(ie123[n]) == want123[n];
  merge(o, check(ok, "Ie_123 prefix"));

  const auto je = gf_catalog("Je_213_once", {}, 10);
  merge(o, check(as_long(je[6]) == 1 && as_long(je[10]) == 4, "Je_213_once(6), (10)"));

  // stated spot value 2; the catalog and a direct count are printed alongside
  const long stated = 2;
  const long catalog = as_long(gf_catalog("Ie_1234_once", {}, 4)[4]);
  long direct = 0;
  const auto t132 = brute::pat("1-3-2"), t1234 = brute::pat("1-2-3-4");
  brute::for_each_involution(4, [&](const brute::Word& w) {
    direct += brute::occurrences(w, t132) == 0 && brute::occurrences(w, t1234) == 1 && brute::inversions(w) % 2 == 0;
  });
  std::ostringstream s;
  s << "Ie_1234_once(4): stated " << stated << ", catalog " << catalog << ", direct count " << direct;
  merge(o, check(catalog == stated, s.str()));

  VerifyOptions opt;
  opt.n_max = 12;
  bool zero = true;
  for (const auto& r : v.run("thd1", opt))
    for (const auto& row : r.rows)
      for (std::size_t i = 0; i < row.expected.size(); i += 3)
        zero = zero && row.expected[i] == 0 && row.observed[i] == 0;
  merge(o, check(zero, "thd1 identically zero"));
  return o;
}

// the parity-split convolution identity on random polynomials, order 12
Outcome genl_identity() {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-20, 20);
  bool ok = true;
  for (int t = 0; t < 50 && ok; ++t) {
    std::vector<long> y(7), z(7);
    for (auto& x : y) x = d(rng);
    for (auto& x : z) x = d(rng);
    Series Y(14), Z(12);
    for (int i = 0; i < 7; ++i) {
      Y.set(i, y[i]);
      Z.set(i, z[i]);
    }
    const auto Yp = Y.substitute(1, 2), Ym = Y.substitute(-1, 2);
    const auto odd = ((Yp - Ym).divide_by_x_power(2) * Z) * Rational(1, 2);
    const auto even = ((Yp + Ym).truncate(12) * Z) * Rational(1, 2);
    for (int n = 0; n <= 12; ++n) {
      long so = 0, se = 0;
      for (int j = 0; j <= n / 4; ++j) {
        const int zi = n - 4 * j;
        const long zv = zi < 7 ? z[zi] : 0;
        so += (2 * j + 1 < 7 ? y[2 * j + 1] : 0) * zv;
        se += (2 * j < 7 ? y[2 * j] : 0) * zv;
      }
      ok = ok && odd.coefficient(n) == so && even.coefficient(n) == se;
    }
  }
  return check(ok, "parity-split convolution identity (50 random pairs)");
}

Outcome criterion11() {
  Outcome o = genl_identity();
  bool rk = true;
  for (int k = 2; k <= 8; ++k) {
    const auto prev = r_k(k - 1).to_series(20);
    rk = rk && r_k(k).to_series(20) == (Series::constant(1, 20) - Series::x(20) * prev).inverse();
  }
  merge(o, check(rk, "R_k = 1/(1 - x R_{k-1}) to order 20, k <= 8"));

  bool companions = true, counts = true;
  int families = 0, series = 0;
  for (const auto& e : catalog_entries()) {
    const auto us = e.name.find('_');
    const std::string letter = e.name.substr(0, us);
    if (letter == "R") continue;
    GfParams gp;
    for (int k = e.uses_k ? std::max(e.k_min, 1) : 0; k <= (e.uses_k ? 6 : 0); ++k)
      for (int dd = e.uses_d ? 1 : 0; dd <= (e.uses_d ? k / 2 : 0); ++dd) {
        gp.k = k;
        gp.d = dd;
        const auto s = gf_catalog(e.name, gp, 24);
        ++series;
        counts = counts && s.is_nonnegative_integral();
        if (letter.size() == 2 && letter[1] == 'e') {
          const std::string stem = e.name.substr(us + 1), base(1, letter[0]);
          if (!catalog_has(base + "o_" + stem) || !catalog_has(base + "_" + stem)) continue;
          ++families;
          companions = companions && s + gf_catalog(base + "o_" + stem, gp, 24) == gf_catalog(base + "_" + stem, gp, 24);
        }
      }
  }
  merge(o, check(companions, "even + odd = total (" + std::to_string(families) + " family instances)"));
  merge(o, check(counts, "nonnegative integer coefficients (" + std::to_string(series) + " series)"));
  return o;
}

}  // namespace

int main() {
  Limits lim;
  lim.involutions = 14;
  lim.permutations = 9;
  Verifier v(lim);

  struct Criterion {
    int id;
    const char* title;
    bool gating;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "baseline counts, n <= 14", true, [&] { return criterion1(v); }},
      {2, "fixed-point refinement, n <= 12", true, [&] { return targets(v, {{"ballot", 12}}); }},
      {3, "parity split and inversion table, n <= 14", true, [&] { return targets(v, {{"even132", 14}}); }},
      {4, "rises, rise table, left-to-right minima, n <= 14", true,
       [&] { return targets(v, {{"rises", 14}, {"lrm_rises", 14}}); }},
      {5, "Phi transport, n <= 12", true, [&] { return targets(v, {{"phi_transport", 12}}); }},
      {6, "Psi and parity counts, n <= 12", true, [&] { return targets(v, {{"psi", 12}, {"psi_even", 12}}); }},
      {7, "generating function catalog, n <= 12, spot values", true, [&] { return criterion7(v); }},
      {8, "continued fractions, n <= 12", true,
       [&] { return targets(v, {{"cf_ci", 12}, {"cf_di", 12}, {"cf_examples", 12}}); }},
      {9, "right-to-left maxima, n <= 12, lemma maps n <= 11", true,
       [&] { return targets(v, {{"th_ssd", 12}, {"rtl_lemmas", 12}}); }},
      {10, "bounded 12...k sequences, n <= 12", true, [&] { return targets(v, {{"bounded_k", 12}}); }},
      {11, "property suites", true, [&] { return criterion11(); }},
      {12, "exploratory: Motzkin n <= 11, quadruple classes n <= 8", false,
       [&] { return targets(v, {{"motzkin_1432", 11}, {"quad4_classes", 8}}); }},
  };

  bool ok = true;
  for (const auto& c : all) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << (c.gating ? "" : " (non-gating)")
              << "  " << c.title << "  [" << o.detail << "]\n";
    if (c.gating) ok = ok && o.pass;
  }
  std::cout << (ok ? "acceptance: all gating criteria pass\n" : "acceptance: some gating criteria fail\n");
  return ok ? 0 : 1;
}
