#include "involab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "involab/errors.hpp"
#include "involab/pattern.hpp"
#include "involab/polynomial.hpp"

namespace involab {

namespace {

using RF = RationalFunction;

RF X(int e) { return RF::x_power(e); }
RF K(const Rational& c) { return RF::constant(c); }

// R_k(s x^2), zero for k <= 0
RF R(int k, int s) { return k <= 0 ? RF() : r_k(k).substitute(s, 2); }
RF Re(int k, int s) { return k <= 0 ? RF() : r_k_even(k).substitute(s, 2); }
RF Ro(int k, int s) { return k <= 0 ? RF() : r_k_odd(k).substitute(s, 2); }
// U_m(1/(2x))
RF U(int m) { return m < 0 ? RF() : chebyshev_U_reciprocal(m); }

RF prod_R_neg(int from, int to) {
  RF p = K(1);
  for (int i = from; i <= to; ++i) p = p * R(i, -1);
  return p;
}

RF sum_U(int from, int to) {
  RF s;
  for (int j = from; j <= to; ++j) s = s + U(j);
  return s;
}

// ---- totals quoted with the theorems, or recovered and checked against counts

RF I_12k(int k) { return k <= 0 ? RF() : sum_U(0, k - 1) / (X(1) * U(k)); }

RF I_rot(int k, int d) {
  const RF num = K(1) + X(2) * (R(k - d - 1, 1) - R(d - 1, 1)) * I_12k(k - d);
  return num / (K(1) - X(1) - X(2) * R(d - 1, 1));
}

RF I_12k_once(int k) { return K(1) / U(k); }

RF I_2134k_once(int k) {
  if (k == 2) return X(2) / (K(1) - X(1));
  return (K(1) - X(2)) / U(k);
}

RF I_23k1_once(int k) { return X(3) / ((K(1) - X(1)) * U(k - 2)); }

RF J_12k(int m) { return m <= 2 ? RF() : X(1) * sum_U(1, m - 2) / U(m); }

RF J_2134k(int m, FormulaVariant v) {
  if (m <= 2) return RF();
  const RF lead = v == FormulaVariant::Corrected ? X(1) * U(2) : X(2) * U(2);
  return X(1) * (lead + sum_U(2, m - 2)) / U(m);
}

RF J_23k1(int k) { return X(2) * R(k - 2, 1) * (X(1) + J_12k(k - 1)) / (K(1) - X(1)); }

RF J_2134k_once(int k) {
  if (k == 2) return X(3) / (K(1) - X(1));
  return X(1) * (K(1) - X(2)) / U(k);
}

RF J_23k1_once(int k) { return k == 2 ? X(3) / (K(1) - X(1)) : RF(); }

// ---- even parts

RF Ie_12k_term(int k, int j) {
  return X(j) * (K(1) + X(2) * Re(k - 1 - j, 1) * I_12k(k - j)) * prod_R_neg(k - j, k);
}

RF Ie_12k(int k) {
  RF s;
  for (int j = 0; j <= k - 1; ++j) s = s + Ie_12k_term(k, j);
  return s;
}

RF Ie_2134k(int k) {
  RF s;
  for (int j = 0; j <= k - 3; ++j) s = s + Ie_12k_term(k, j);
  return s + X(k - 2) * r_k(2) * prod_R_neg(3, k);
}

RF Ie_rot(int k, int d, FormulaVariant v) {
  if (v == FormulaVariant::Corrected) {
    const RF a = R(d, -1);
    const RF inner = K(1) + X(2) * (R(d - 1, -1) - R(k - d - 1, -1)) * Ie_12k(k - d) +
                     X(2) * (Re(k - d - 1, 1) - Re(d - 1, 1)) * I_12k(k - d) +
                     X(2) * Re(d - 1, 1) * I_rot(k, d);
    return a / (K(1) - X(1) * a) * inner;
  }
  const RF a = R(k - d, -1);
  const RF first = v == FormulaVariant::Printed ? Re(d - 1, -1) : Re(d - 1, 1);
  const RF inner = K(1) + X(2) * (R(k - d - 1, -1) - R(d - 1, -1)) * Ie_12k(k - d) +
                   (first - Re(k - d - 1, -1)) * I_12k(k - d) + Re(k - d - 1, 1) * I_rot(k, d);
  return a / (K(1) - X(1) * a) * inner;
}

RF Ie_12k_once(int k, FormulaVariant v) {
  auto term = [k](int j) { return X(k - j) * Re(j + 1, 1) * prod_R_neg(j + 2, k) / U(j + 2); };
  RF s;
  if (v != FormulaVariant::Corrected) {
    for (int j = 0; j <= k - 1; ++j) s = s + term(j);
    return s;
  }
  if (k == 1) return X(1);
  for (int j = 0; j <= k - 2; ++j) s = s + term(j);
  return s + X(k) * prod_R_neg(2, k);
}

RF Ie_2134k_once(int k) {
  RF s;
  for (int j = 3; j <= k; ++j) s = s + X(k + 2 - j) * Re(j - 1, 1) * prod_R_neg(j, k) / U(j);
  return (K(1) - X(2)) * s;
}

RF Ie_23k1_once(int k) {
  const RF odd = I_12k_once(k - 2) - Ie_12k_once(k - 2, FormulaVariant::Corrected);
  return X(3) / (K(1) - X(1)) * odd;
}

RF Je_12k(int k, FormulaVariant v) {
  const int shift = v == FormulaVariant::Corrected ? 3 : 1;
  RF s;
  for (int j = 3; j <= k; ++j) {
    const RF bracket = Ro(j - 1, 1) + Re(j - 1, 1) * sum_U(1, j - 2) / U(j);
    s = s + X(k + shift - j) * bracket * prod_R_neg(j, k);
  }
  return s;
}

RF Je_2134k(int k, FormulaVariant v) {
  if (k <= 2) return RF();
  RF je = X(5) / (K(1) - K(4) * X(4));
  for (int m = 4; m <= k; ++m)
    je = X(1) * R(m, -1) * (X(2) * Ro(m - 1, 1) + X(1) * Re(m - 1, 1) * J_2134k(m, v) + je);
  return je;
}

RF Je_23k1(int k) {
  const RF bracket = X(1) * Ro(k - 2, 1) + Re(k - 2, 1) * J_12k(k - 1) -
                     R(k - 2, -1) * Je_12k(k - 1, FormulaVariant::Corrected);
  return X(2) / (K(1) - X(1)) * bracket;
}

RF Je_2134k_once(int k) {
  RF s;
  for (int j = 2; j <= k - 1; ++j) s = s + X(k + 2 - j) * Re(j, 1) * prod_R_neg(j + 1, k) / U(j + 1);
  return (K(1) - X(2)) * s;
}

// ---- entries that involve C(x)

Series C_at(int sign, int order) { return catalan_series(order).substitute(sign, 2); }

Series Ie_empty(int order) {
  const Series one = Series::constant(1, order), x = Series::x(order), x2 = Series::monomial(1, 2, order);
  const Series cp = C_at(1, order), cm = C_at(-1, order);
  const Series num = Series::constant(2, order) - x * Rational(2) - x2 * (cp - cm);
  const Series den = (one - x + x2 * cm) * (one - x - x2 * cp) * Rational(2);
  return num / den;
}

Series J_empty(int order) {
  const Series one = Series::constant(1, order), x = Series::x(order), x2 = Series::monomial(1, 2, order);
  const Series cp = C_at(1, order);
  return Series::monomial(1, 3, order) * cp / (one - x - x2 * cp);
}

Series Je_empty(int order) {
  const Series one = Series::constant(1, order), x = Series::x(order);
  const Series s1 = (one - Series::monomial(4, 2, order)).sqrt();
  const Series s2 = (one + Series::monomial(4, 2, order)).sqrt();
  const Series num = x * (one - x * Rational(2) + x * s1 + x * s2 - s1 * s2);
  const Series den = (one - x * Rational(2) + s2) * (one - x * Rational(2) + s1);
  if (den[0] != 4) throw DomainError("unexpected denominator");
  return num / den;
}

// J^e (1 - x + x^2 C(-x^2)) = x^2/2 (C(x^2) + C(-x^2)) J + x^3/2 (C(x^2) - C(-x^2))
Series Je_empty_from_equation(int order) {
  const Series one = Series::constant(1, order), x = Series::x(order), x2 = Series::monomial(1, 2, order);
  const Series cp = C_at(1, order), cm = C_at(-1, order);
  const Series rhs = x2 * (cp + cm) * J_empty(order) * Rational(1, 2) +
                     Series::monomial(Rational(1, 2), 3, order) * (cp - cm);
  return rhs / (one - x + x2 * cm);
}

// ---- name table

struct Family {
  std::string total;  // name of the total GF
  std::function<RF(const GfParams&)> even_rf;
  std::function<RF(const GfParams&)> total_rf;
  int k_min;
  bool uses_d;
  std::string description;
};

void check_k(const GfParams& p, int k_min) {
  if (p.k < k_min) throw DomainError("k must be at least " + std::to_string(k_min));
  if (p.k > 30) throw LimitExceeded("k too large");
}

const std::map<std::string, Family, std::less<>>& families() {
  static const std::map<std::string, Family, std::less<>> f = [] {
    std::map<std::string, Family, std::less<>> m;
    m["12k"] = {"I_12k", [](auto& p) { return Ie_12k(p.k); }, [](auto& p) { return I_12k(p.k); }, 1, false,
                "132-avoiding, avoiding 12...k"};
    m["2134k"] = {"I_2134k", [](auto& p) { return Ie_2134k(p.k); }, [](auto& p) { return I_12k(p.k); }, 2, false,
                  "132-avoiding, avoiding 2134...k"};
    m["rot"] = {"I_rot", [](auto& p) { return Ie_rot(p.k, p.d, p.variant); },
                [](auto& p) { return I_rot(p.k, p.d); }, 2, true,
                "132-avoiding, avoiding (d+1)...k 1...d"};
    m["12k_once"] = {"I_12k_once", [](auto& p) { return Ie_12k_once(p.k, p.variant); },
                     [](auto& p) { return I_12k_once(p.k); }, 1, false,
                     "132-avoiding, containing 12...k once"};
    m["2134k_once"] = {"I_2134k_once", [](auto& p) { return Ie_2134k_once(p.k); },
                       [](auto& p) { return I_2134k_once(p.k); }, 2, false,
                       "132-avoiding, containing 2134...k once"};
    m["23k1_once"] = {"I_23k1_once", [](auto& p) { return Ie_23k1_once(p.k); },
                      [](auto& p) { return I_23k1_once(p.k); }, 3, false,
                      "132-avoiding, containing 23...k1 once"};
    m["J12k"] = {"J_12k", [](auto& p) { return Je_12k(p.k, p.variant); }, [](auto& p) { return J_12k(p.k); }, 2,
                 false, "one 132, avoiding 12...k"};
    m["J2134k"] = {"J_2134k", [](auto& p) { return Je_2134k(p.k, p.variant); },
                   [](auto& p) { return J_2134k(p.k, p.variant); }, 2, false, "one 132, avoiding 2134...k"};
    m["J23k1"] = {"J_23k1", [](auto& p) { return Je_23k1(p.k); }, [](auto& p) { return J_23k1(p.k); }, 2, false,
                  "one 132, avoiding 23...k1"};
    m["J12k_once"] = {"J_12k_once", [](auto&) { return RF(); }, [](auto&) { return RF(); }, 1, false,
                      "one 132, containing 12...k once"};
    m["J23k1_once"] = {"J_23k1_once", [](auto&) { return RF(); }, [](auto& p) { return J_23k1_once(p.k); }, 2,
                       false, "one 132, containing 23...k1 once"};
    m["J2134k_once"] = {"J_2134k_once", [](auto& p) { return Je_2134k_once(p.k); },
                        [](auto& p) { return J_2134k_once(p.k); }, 2, false, "one 132, containing 2134...k once"};
    return m;
  }();
  return f;
}

// public name -> (family key, part) where part is 'e', 'o' or 't'
const std::map<std::string, std::pair<std::string, char>, std::less<>>& aliases() {
  static const std::map<std::string, std::pair<std::string, char>, std::less<>> a = [] {
    std::map<std::string, std::pair<std::string, char>, std::less<>> m;
    const std::pair<const char*, const char*> names[] = {
        {"12k", "I%_12k"},           {"2134k", "I%_2134k"},         {"rot", "I%_rot"},
        {"12k_once", "I%_12k_once"}, {"2134k_once", "I%_2134k_once"}, {"23k1_once", "I%_23k1_once"},
        {"J12k", "J%_12k"},          {"J2134k", "J%_2134k"},        {"J23k1", "J%_23k1"},
        {"J12k_once", "J%_12k_once"}, {"J23k1_once", "J%_23k1_once"}, {"J2134k_once", "J%_2134k_once"},
    };
    for (auto [key, pat] : names) {
      std::string s = pat;
      const auto at = s.find('%');
      for (auto [tag, part] : {std::pair{"e", 'e'}, std::pair{"o", 'o'}, std::pair{"", 't'}})
        m[s.substr(0, at) + tag + s.substr(at + 1)] = {key, part};
    }
    m["Je_once_zero"] = {"J12k_once", 'e'};
    return m;
  }();
  return a;
}

// "Ie_123", "J_2134_once", "Io_3412": a concrete second pattern instead of a
// family name plus k (and d).
std::optional<std::pair<std::string, GfParams>> resolve_concrete(std::string_view name, const GfParams& params) {
  const auto us = name.find('_');
  if (us == std::string_view::npos) return std::nullopt;
  const std::string prefix(name.substr(0, us));
  std::string rest(name.substr(us + 1));
  bool once = false;
  if (rest.size() > 5 && rest.ends_with("_once")) {
    once = true;
    rest.resize(rest.size() - 5);
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '1' && c <= '9'; }))
    return std::nullopt;
  Permutation t;
  try {
    t = Permutation::parse(rest);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const int k = t.size();
  GfParams gp{k, 0, params.variant};
  const bool j = prefix[0] == 'J';
  std::string shape;
  if (t == PatternSpec::increasing(k).letters()) {
    shape = "12k";
  } else if (k >= 3 && t == PatternSpec::swap_front(k).letters()) {
    shape = "2134k";
  } else {
    for (int d = 1; d < k && shape.empty(); ++d) {
      if (t != PatternSpec::rotation(k, d).letters()) continue;
      // the inverse pattern gives the same counts on involutions
      const int dd = std::min(d, k - d);
      if (!j && !once) {
        shape = "rot";
        gp.d = dd;
      } else if (dd == 1) {
        shape = "23k1";
      }
    }
  }
  if (shape.empty()) return std::nullopt;
  std::string alias = prefix + "_" + shape + (once ? "_once" : "");
  if (!aliases().contains(alias)) return std::nullopt;
  return std::pair{alias, gp};
}

}  // namespace

Series gf_catalog(std::string_view name, const GfParams& params, int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 64) throw LimitExceeded("truncation order above 64");
  if (name == "I_empty") return central_binomial_series(order);
  if (name == "Ie_empty") return Ie_empty(order);
  if (name == "Io_empty") return central_binomial_series(order) - Ie_empty(order);
  if (name == "J_empty") return J_empty(order);
  if (name == "Je_empty") return Je_empty(order);
  if (name == "Je_empty_eq") return Je_empty_from_equation(order);
  if (name == "Jo_empty") return J_empty(order) - Je_empty(order);
  if (name == "R_k") {
    if (params.k < 1) throw DomainError("k must be at least 1");
    return r_k(params.k).to_series(order);
  }

  auto it = aliases().find(name);
  if (it == aliases().end()) {
    if (auto c = resolve_concrete(name, params)) return gf_catalog(c->first, c->second, order);
  }
  if (it == aliases().end()) throw UnknownName("unknown generating function: " + std::string(name));
  const auto& fam = families().at(it->second.first);
  check_k(params, fam.k_min);
  if (fam.uses_d && (params.d < 1 || 2 * params.d > params.k))
    throw DomainError("d must satisfy 1 <= d <= k/2");
  switch (it->second.second) {
    case 'e': return fam.even_rf(params).to_series(order);
    case 't': return fam.total_rf(params).to_series(order);
    default: return fam.total_rf(params).to_series(order) - fam.even_rf(params).to_series(order);
  }
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> e = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"I_empty", "132-avoiding involutions", false, false, 0});
    v.push_back({"Ie_empty", "even 132-avoiding involutions", false, false, 0});
    v.push_back({"Io_empty", "odd 132-avoiding involutions", false, false, 0});
    v.push_back({"J_empty", "involutions with one 132", false, false, 0});
    v.push_back({"Je_empty", "even involutions with one 132", false, false, 0});
    v.push_back({"Je_empty_eq", "even involutions with one 132, solved from the decomposition equation", false,
                 false, 0});
    v.push_back({"Jo_empty", "odd involutions with one 132", false, false, 0});
    v.push_back({"R_k", "R_k(x)", true, false, 1});
    for (const auto& [alias, target] : aliases()) {
      const auto& fam = families().at(target.first);
      const char* part = target.second == 'e' ? "even, " : target.second == 'o' ? "odd, " : "";
      v.push_back({alias, part + fam.description, true, fam.uses_d, fam.k_min});
    }
    return v;
  }();
  return e;
}

bool catalog_has(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

}  // namespace involab
