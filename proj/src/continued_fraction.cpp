#include "involab/continued_fraction.hpp"

#include <map>
#include <optional>
#include <tuple>

#include "involab/errors.hpp"

namespace involab {

CfFamily parse_cf_family(std::string_view name) {
  if (name == "C_S") return CfFamily::CS;
  if (name == "C_I") return CfFamily::CI;
  if (name == "D_S") return CfFamily::DS;
  if (name == "D_I") return CfFamily::DI;
  throw UnknownName("unknown continued fraction: " + std::string(name));
}

namespace {

using Weights = std::vector<Monomial>;

Weights normalized(Weights w) {
  while (!w.empty() && w.back() == Monomial{}) w.pop_back();
  return w;
}

Monomial get(const Weights& w, std::size_t i) { return i < w.size() ? w[i] : Monomial{}; }
Monomial mul(Monomial p, Monomial q) { return {p.a + q.a, p.b + q.b}; }
Monomial sq(Monomial p) { return {2 * p.a, 2 * p.b}; }

// (w1 w2, w2 w3, ...)
Weights shift_c(const Weights& w) {
  Weights r;
  for (std::size_t i = 0; i < w.size(); ++i) r.push_back(mul(w[i], get(w, i + 1)));
  return normalized(r);
}

// (w1, w2 w3, w3 w4, ...)
Weights shift_d(const Weights& w) {
  Weights r{get(w, 0)};
  for (std::size_t i = 1; i < w.size(); ++i) r.push_back(mul(w[i], get(w, i + 1)));
  return normalized(r);
}

Weights squared(const Weights& w) {
  Weights r;
  for (auto m : w) r.push_back(sq(m));
  return r;
}

// Each level is only needed up to the remaining budget (bx, by): the factor
// in front of a nested call has positive degree, so budgets shrink and the
// recursion ends once one goes negative.  Results are sized to the budget.
class Evaluator {
 public:
  // nullopt when the budget is exhausted (the nested term vanishes)
  std::optional<BivariateSeries> eval(CfFamily f, const Weights& w, int bx, int by) {
    if (bx < 0 || by < 0) return std::nullopt;
    const auto key = std::make_tuple(static_cast<int>(f), w, bx, by);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BivariateSeries r = compute(f, w, bx, by);
    memo_.emplace(key, r);
    return r;
  }

 private:
  static BivariateSeries one(int bx, int by) { return BivariateSeries::constant(1, bx, by); }
  static BivariateSeries mono(Monomial m, int bx, int by) { return BivariateSeries::monomial(1, m.a, m.b, bx, by); }

  // m * s placed in a (bx, by) box; s is at least (bx - m.a, by - m.b)
  static BivariateSeries times(const std::optional<BivariateSeries>& s, Monomial m, int bx, int by) {
    BivariateSeries r(bx, by);
    if (!s) return r;
    for (int i = 0; i + m.a <= bx; ++i)
      for (int j = 0; j + m.b <= by; ++j) r.set(i + m.a, j + m.b, s->at(i, j));
    return r;
  }

  BivariateSeries compute(CfFamily f, const Weights& w, int bx, int by) {
    const Monomial w1 = get(w, 0), w2 = get(w, 1);
    if (w1.a + w1.b <= 0) throw DomainError("x_1 must have positive degree");
    const auto I = one(bx, by);
    switch (f) {
      case CfFamily::CS: {
        // 1 / (1 - w1 C_S(shift w))
        auto inner = eval(CfFamily::CS, shift_c(w), bx - w1.a, by - w1.b);
        return (I - times(inner, w1, bx, by)).inverse();
      }
      case CfFamily::CI: {
        // (1 + w1 C_I(shift w)) / (1 - w1^2 C_S(shift of squares))
        auto num_in = eval(CfFamily::CI, shift_c(w), bx - w1.a, by - w1.b);
        const Monomial s1 = sq(w1);
        auto den_in = eval(CfFamily::CS, shift_c(squared(w)), bx - s1.a, by - s1.b);
        auto num = I + times(num_in, w1, bx, by);
        auto den = I - times(den_in, s1, bx, by);
        return num * den.inverse();
      }
      case CfFamily::DS: {
        // 1 / (1 - w1 + w1 w2 - w1 w2 D_S(w1, w2 w3, ...))
        const Monomial p = mul(w1, w2);
        auto inner = eval(CfFamily::DS, shift_d(w), bx - p.a, by - p.b);
        auto den = I - mono(w1, bx, by) + mono(p, bx, by) - times(inner, p, bx, by);
        return den.inverse();
      }
      case CfFamily::DI: {
        // (1 + w1 - w1 w2 + w1 w2 D_I(w1, w2 w3, ...))
        //   / (1 - w1^2 + w1^2 w2^2 - w1^2 w2^2 D_S(w1^2, w2^2 w3^2, ...))
        const Monomial p = mul(w1, w2);
        auto num_in = eval(CfFamily::DI, shift_d(w), bx - p.a, by - p.b);
        const Monomial s1 = sq(w1), sp = sq(p);
        auto den_in = eval(CfFamily::DS, shift_d(squared(w)), bx - sp.a, by - sp.b);
        auto num = I + mono(w1, bx, by) - mono(p, bx, by) + times(num_in, p, bx, by);
        auto den = I - mono(s1, bx, by) + mono(sp, bx, by) - times(den_in, sp, bx, by);
        return num * den.inverse();
      }
    }
    return I;
  }

  std::map<std::tuple<int, Weights, int, int>, BivariateSeries> memo_;
};

}  // namespace

BivariateSeries cf_catalog(CfFamily family, const Specialization& spec, int nx, int ny) {
  if (nx < 0 || ny < 0) throw DomainError("negative truncation order");
  if (nx > 64 || ny > 4096) throw LimitExceeded("truncation order too large");
  const Weights w = normalized(spec.weights);
  const Monomial w1 = get(w, 0);
  if (w1.a < 0 || w1.b < 0 || w1.a + w1.b <= 0) throw DomainError("x_1 must have positive degree");
  for (auto m : w)
    if (m.a < 0 || m.b < 0) throw DomainError("weights must be monomials with nonnegative exponents");
  Evaluator ev;
  return *ev.eval(family, w, nx, ny);
}

BivariateSeries rtl_gf(int order) {
  // sum_j x^{2j} C^j(x^2) y^{2j} + sum_j x^{2j+1} C^j(x^2) / (1 - x - x^2 C(x^2)) y^{2j+1}
  const Series c2 = catalan_series(order).substitute(1, 2);
  const Series one = Series::constant(1, order), x = Series::x(order), x2 = Series::monomial(1, 2, order);
  const Series tail = x / (one - x - x2 * c2);
  const Series step = x2 * c2;  // x^2 C(x^2)
  BivariateSeries r(order, order);
  Series pw = one;  // (x^2 C(x^2))^j
  for (int j = 0; 2 * j <= order; ++j) {
    const Series odd = pw * tail;
    for (int n = 0; n <= order; ++n) {
      if (2 * j <= order) r.set(n, 2 * j, r.at(n, 2 * j) + pw[n]);
      if (2 * j + 1 <= order) r.set(n, 2 * j + 1, r.at(n, 2 * j + 1) + odd[n]);
    }
    pw = pw * step;
  }
  return r;
}

}  // namespace involab
