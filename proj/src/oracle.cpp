#include "involab/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "involab/errors.hpp"

namespace involab {

Statistic Statistic::parse(std::string_view text) {
  static const std::pair<const char*, StatKind> plain[] = {
      {"fixed_points", StatKind::FixedPoints}, {"inversions", StatKind::Inversions},
      {"parity", StatKind::Parity},            {"rises", StatKind::Rises},
      {"rtl_maxima", StatKind::RtlMaxima},     {"ltr_minima", StatKind::LtrMinima},
  };
  for (auto [name, kind] : plain)
    if (text == name) return {kind, {}};
  constexpr std::string_view prefix = "occurrences:";
  if (text.substr(0, prefix.size()) == prefix)
    return {StatKind::Occurrences, PatternSpec::parse(text.substr(prefix.size()))};
  throw UnknownName("unknown statistic: " + std::string(text));
}

std::string Statistic::name() const {
  switch (kind) {
    case StatKind::FixedPoints: return "fixed_points";
    case StatKind::Inversions: return "inversions";
    case StatKind::Parity: return "parity";
    case StatKind::Rises: return "rises";
    case StatKind::RtlMaxima: return "rtl_maxima";
    case StatKind::LtrMinima: return "ltr_minima";
    case StatKind::Occurrences: return "occurrences:" + pattern.to_string();
  }
  return "";
}

std::int64_t evaluate(const Statistic& s, const Permutation& p) {
  switch (s.kind) {
    case StatKind::FixedPoints: return fixed_points(p);
    case StatKind::Inversions: return inversions(p);
    case StatKind::Parity: return inversions(p) % 2;
    case StatKind::Rises: return rises(p);
    case StatKind::RtlMaxima: return rtl_maxima(p);
    case StatKind::LtrMinima: return ltr_minima(p);
    case StatKind::Occurrences: return count_occurrences(p, s.pattern);
  }
  return 0;
}

bool qualifies(const Permutation& p, const CountQuery& q) {
  for (const auto& t : q.avoid)
    if (contains(p, t)) return false;
  for (const auto& c : q.contain)
    if (count_occurrences(p, c.pattern, c.count + 1) != c.count) return false;
  return true;
}

namespace {

void check_limits(const CountQuery& q) {
  if (q.n < 0) throw DomainError("negative length");
  const int lim = q.cls == ObjectClass::Involutions ? q.limits.involutions : q.limits.permutations;
  if (q.n > lim)
    throw LimitExceeded("length " + std::to_string(q.n) + " exceeds the enumeration limit " + std::to_string(lim));
}

// Involutions as partial matchings: the smallest unmatched point is either
// fixed or paired with a later unmatched point.
struct MatchingWalker {
  int n;
  std::vector<int> v;
  std::vector<char> used;
  const std::function<void(const Permutation&)>& fn;

  void run(int from) {
    while (from <= n && used[from]) ++from;
    if (from > n) {
      fn(Permutation(v));
      return;
    }
    used[from] = 1;
    v[from - 1] = from;
    run(from + 1);
    for (int b = from + 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      v[from - 1] = b;
      v[b - 1] = from;
      run(from + 1);
      used[b] = 0;
    }
    used[from] = 0;
  }
};

// All objects whose first value is `first` (0 = no restriction).
void walk(ObjectClass cls, int n, int first, const std::function<void(const Permutation&)>& fn) {
  if (n == 0) {
    if (first == 0) fn(Permutation());
    return;
  }
  if (cls == ObjectClass::Involutions) {
    MatchingWalker w{n, std::vector<int>(n, 0), std::vector<char>(n + 2, 0), fn};
    if (first == 0) {
      w.run(1);
      return;
    }
    w.used[1] = 1;
    w.v[0] = first;
    if (first != 1) {
      w.used[first] = 1;
      w.v[first - 1] = 1;
    }
    w.run(2);
    return;
  }
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  if (first != 0) {
    std::rotate(v.begin(), v.begin() + (first - 1), v.begin() + first);
    do {
      fn(Permutation(v));
    } while (std::next_permutation(v.begin() + 1, v.end()));
    return;
  }
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

void for_each_object(const CountQuery& q, const std::function<void(const Permutation&)>& fn) {
  check_limits(q);
  walk(q.cls, q.n, 0, [&](const Permutation& p) {
    if (qualifies(p, q)) fn(p);
  });
}

std::vector<Permutation> enumerate(const CountQuery& q) {
  std::vector<Permutation> out;
  for_each_object(q, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Distribution distribution(const CountQuery& q, int workers) {
  check_limits(q);
  auto tally_part = [&q](int first) {
    Distribution d;
    walk(q.cls, q.n, first, [&](const Permutation& p) {
      if (!qualifies(p, q)) return;
      StatTuple t;
      t.reserve(q.stats.size());
      for (const auto& s : q.stats) t.push_back(evaluate(s, p));
      ++d[t];
    });
    return d;
  };
  if (q.n <= 1) return tally_part(0);

  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, q.n);
  // worker w takes first values w+1, w+1+workers, ...
  std::vector<std::future<Distribution>> parts;
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, [&, w] {
      Distribution acc;
      for (int first = w + 1; first <= q.n; first += workers)
        for (auto& [k, c] : tally_part(first)) acc[k] += c;
      return acc;
    }));
  Distribution total;
  for (auto& f : parts)
    for (auto& [k, c] : f.get()) total[k] += c;
  return total;
}

std::uint64_t count(const CountQuery& q, int workers) {
  CountQuery bare = q;
  bare.stats.clear();
  const auto d = distribution(bare, workers);
  return d.empty() ? 0 : d.begin()->second;
}

Distribution project(const Distribution& d, const std::vector<int>& keep) {
  Distribution out;
  for (const auto& [k, c] : d) {
    StatTuple t;
    for (int i : keep) t.push_back(k.at(i));
    out[t] += c;
  }
  return out;
}

}  // namespace involab
