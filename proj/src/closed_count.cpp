#include "involab/catalog.hpp"

#include <functional>
#include <map>

#include "involab/errors.hpp"
#include "involab/succession.hpp"

namespace involab {

namespace {

// the paper's [.] is a floor, also for negative arguments
long fdiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

mpz_class pow_int(long base, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

mpz_class sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }  // (-1)^e, e >= 0

mpz_class exact_div(const mpz_class& a, long b) {
  if (a % b != 0) throw DomainError("formula does not give an integer here");
  return a / b;
}

void need(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

using Formula = std::function<mpz_class(int n, int a, int b)>;

const std::map<std::string, Formula, std::less<>>& formulas() {
  static const std::map<std::string, Formula, std::less<>> f = [] {
    std::map<std::string, Formula, std::less<>> m;
    m["catalan"] = [](int n, int, int) -> mpz_class { return catalan_number(n); };
    m["central_binomial"] = [](int n, int, int) -> mpz_class { return binomial(n, n / 2); };
    m["motzkin"] = [](int n, int, int) -> mpz_class { return motzkin_number(n); };
    m["telephone"] = [](int n, int, int) -> mpz_class { return telephone_number(n); };
    m["fibonacci"] = [](int n, int, int) -> mpz_class { return fibonacci_number(n); };
    m["ballot"] = [](int n, int p, int) -> mpz_class { return ballot_count(n, p); };
    // 132-avoiding permutations of length n with s right-to-left maxima
    m["rtl_perm"] = [](int n, int s, int) -> mpz_class {
      need(n >= 1 && s >= 1, "needs n >= 1 and s >= 1");
      return ballot_count(2 * n - s - 1, s - 1);
    };
    m["even132"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return binomial(n - 1, 2 * fdiv(n + 1, 4));
    };
    m["odd132"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return binomial(n - 1, 1 + 2 * fdiv(n - 2, 4));
    };
    m["rises"] = [](int n, int r, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return binomial(n / 2, (r + 1) / 2) * binomial((n - 1) / 2, r / 2);
    };
    m["psi_even"] = [](int n, int, int) -> mpz_class {
      need(n >= 3, "valid for n >= 3");
      return binomial(n - 3, 1 + 2 * fdiv(n - 5, 4));
    };
    m["psi_odd"] = [](int n, int, int) -> mpz_class {
      need(n >= 3, "valid for n >= 3");
      return binomial(n - 3, 2 * fdiv(n - 3, 4));
    };
    // the same counts written with the Catalan correction
    m["psi_even_alt"] = [](int n, int, int) -> mpz_class {
      need(n >= 3, "valid for n >= 3");
      mpz_class v = binomial(n - 3, 1 + 2 * fdiv(n - 4, 4));
      if (n % 4 == 0) v -= catalan_number(n / 2 - 1);
      return v;
    };
    m["psi_odd_alt"] = [](int n, int, int) -> mpz_class {
      need(n >= 3, "valid for n >= 3");
      mpz_class v = binomial(n - 3, 2 * fdiv(n - 1, 4));
      if (n % 4 == 2) v -= catalan_number((n - 2) / 2);
      return v;
    };
    m["ssd"] = [](int n, int s, int) -> mpz_class {
      need(n >= 1 && s >= 1 && s <= n, "needs 1 <= s <= n");
      if (n % 2 == 1 && s % 2 == 0) return mpz_class(0);
      if (s % 2 == 0) return binomial(n - 1 - s / 2, n / 2 - 1) - binomial(n - 1 - s / 2, n / 2);
      return binomial(n - 1 - (s - 1) / 2, n / 2);
    };
    m["je_empty"] = [](int n, int, int) -> mpz_class {
      need(n >= 3, "valid for n >= 3");
      const mpz_class bracket = exact_div(mpz_class(n / 2) * (3 - sign_pow(n)), 2) - 1 -
                                sign_pow(binomial(n - 3, 2).get_si());
      return exact_div(catalan_number(fdiv(n - 2, 2)) * bracket, 2);
    };
    m["ci_once"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return exact_div(1 + sign_pow(n), 2);
    };
    m["ci_twice"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return exact_div(2 * n - 3 - sign_pow(n), 4);
    };
    m["di_once"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return exact_div(2 * n - 1 + sign_pow(n), 4);
    };
    m["di_twice"] = [](int n, int, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      return exact_div(mpz_class(2 * n) * (n - 2) + 1 - sign_pow(n), 8);
    };
    // |I_n(132, 12...k)| by fixed points p, k = 3, 4, 5
    m["k3_fp"] = [](int n, int p, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      if (p < 0 || p > 2 || (n - p) % 2) return mpz_class(0);
      return pow_int(2, (n - 1) / 2);
    };
    m["k4_fp"] = [](int n, int p, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      if (p < 0 || p > 3 || (n - p) % 2) return mpz_class(0);
      return (p == 0 || p == 3) ? fibonacci_number(n - 2) : fibonacci_number(n - 1);
    };
    m["k5_fp"] = [](int n, int p, int) -> mpz_class {
      need(n >= 1, "valid for n >= 1");
      if (p < 0 || p > 4 || (n - p) % 2) return mpz_class(0);
      if (p == 2) return pow_int(3, n / 2 - 1);
      const mpz_class t = pow_int(3, (n - 1) / 2);
      return p <= 1 ? exact_div(t + 1, 2) : exact_div(t - 1, 2);
    };
    // even / odd splits, n = 4l+1 .. 4l+4
    auto by_residue = [](std::function<mpz_class(int l, int r)> g) {
      return [g](int n, int, int) -> mpz_class {
        need(n >= 1, "valid for n >= 1");
        return g((n - 1) / 4, (n - 1) % 4);
      };
    };
    m["k3_even"] = by_residue([](int l, int r) {
      const long e[] = {2 * l, 2 * l, -1, 2 * l + 1};
      return e[r] < 0 ? mpz_class(0) : pow_int(2, e[r]);
    });
    m["k3_odd"] = by_residue([](int l, int r) {
      const long e[] = {-1, 2 * l, 2 * l + 1, 2 * l + 1};
      return e[r] < 0 ? mpz_class(0) : pow_int(2, e[r]);
    });
    m["k4_even"] = by_residue([](int l, int r) {
      const long i[] = {4L * l, 4L * l + 1, 4L * l + 1, 4L * l + 2};
      return fibonacci_number(i[r]);
    });
    m["k4_odd"] = by_residue([](int l, int r) {
      const long i[] = {4L * l - 1, 4L * l, 4L * l + 2, 4L * l + 3};
      return fibonacci_number(i[r]);
    });
    m["k5_even"] = by_residue([](int l, int r) {
      switch (r) {
        case 0: return exact_div(pow_int(3, 2 * l) + 1, 2);
        case 1: return pow_int(3, 2 * l);
        case 2: return exact_div(pow_int(3, 2 * l + 1) - 1, 2);
        default: return pow_int(3, 2 * l + 1);
      }
    });
    m["k5_odd"] = by_residue([](int l, int r) {
      switch (r) {
        case 0: return exact_div(pow_int(3, 2 * l) - 1, 2);
        case 1: return pow_int(3, 2 * l);
        case 2: return exact_div(pow_int(3, 2 * l + 1) + 1, 2);
        default: return pow_int(3, 2 * l + 1);
      }
    });
    return m;
  }();
  return f;
}

}  // namespace

mpz_class closed_count(std::string_view name, int n, int a, int b) {
  if (n < 0) throw DomainError("negative length");
  auto it = formulas().find(name);
  if (it == formulas().end()) throw UnknownName("unknown closed formula: " + std::string(name));
  return it->second(n, a, b);
}

std::vector<std::string> closed_count_names() {
  std::vector<std::string> v;
  for (const auto& [k, f] : formulas()) v.push_back(k);
  return v;
}

mpz_class catalan_number(long m) {
  if (m < 0) return 0;
  return binomial(2 * m, m) / (m + 1);
}

mpz_class fibonacci_number(long m) {
  if (m < -1) throw DomainError("Fibonacci index below -1");
  if (m == -1) return 0;
  mpz_class a = 1, b = 1;
  for (long i = 0; i < m; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return a;
}

mpz_class motzkin_number(long m) {
  if (m < 0) return 0;
  std::vector<mpz_class> v{1, 1};
  for (long i = 2; i <= m; ++i) v.push_back(((2 * i + 1) * v[i - 1] + (3 * i - 3) * v[i - 2]) / (i + 2));
  return v[m];
}

mpz_class telephone_number(long m) {
  if (m < 0) return 0;
  mpz_class a = 1, b = 1;  // T(0), T(1)
  for (long i = 2; i <= m; ++i) {
    mpz_class c = b + (i - 1) * a;
    a = b;
    b = c;
  }
  return m == 0 ? mpz_class(1) : b;
}

}  // namespace involab
