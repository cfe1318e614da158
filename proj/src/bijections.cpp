#include "involab/bijections.hpp"

#include <algorithm>

#include "involab/errors.hpp"
#include "involab/pattern.hpp"

namespace involab {

namespace {

const PatternSpec& p132() {
  static const PatternSpec t = PatternSpec::parse("1-3-2");
  return t;
}

void require_avoiding_involution(const Permutation& p) {
  if (!p.is_involution()) throw DomainError("not an involution: " + p.to_string());
  if (contains(p, p132())) throw DomainError("contains 132: " + p.to_string());
}

// New fixed point at position c; positions and values >= c move up.
std::vector<int> insert_fixed(std::span<const int> v, int c) {
  std::vector<int> s;
  s.reserve(v.size() + 1);
  auto sh = [c](int x) { return x >= c ? x + 1 : x; };
  for (int i = 0; i < c - 1; ++i) s.push_back(sh(v[i]));
  s.push_back(c);
  for (std::size_t i = c - 1; i < v.size(); ++i) s.push_back(sh(v[i]));
  return s;
}

// Drop the fixed point c.
std::vector<int> remove_fixed(std::span<const int> v, int c) {
  std::vector<int> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (static_cast<int>(i) + 1 != c) s.push_back(v[i] > c ? v[i] - 1 : v[i]);
  return s;
}

int first_fixed_point(std::span<const int> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == static_cast<int>(i) + 1) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<int> grow_raw(std::span<const int> v, GrowthStep s) {
  const int n = static_cast<int>(v.size());
  int fp = 0;
  for (int i = 0; i < n; ++i) fp += v[i] == i + 1;
  const int m = (n - fp) / 2;
  if (s == GrowthStep::InsertFixedPoint) return insert_fixed(v, m + 1);
  const int f = first_fixed_point(v);
  if (f == 0) throw DomainError("cycle step needs a fixed point");
  auto r = insert_fixed(v, m + 1);
  const int x = f + 1;
  r[m] = x;
  r[x - 1] = m + 1;
  return r;
}

std::pair<std::vector<int>, GrowthStep> undo_raw(std::vector<int> v) {
  const int n = static_cast<int>(v.size());
  int q = 0;
  for (int i = 0; i < n; ++i) q += v[i] == i + 1;
  const int f = first_fixed_point(v);
  if (q >= 1 && f == (n - q) / 2 + 1) return {remove_fixed(v, f), GrowthStep::InsertFixedPoint};
  const int c = (n - q) / 2;
  if (c < 1) throw DomainError("no growth parent");
  const int y = v[c - 1];
  if (y <= c) throw DomainError("no growth parent");
  v[c - 1] = c;
  v[y - 1] = y;
  return {remove_fixed(v, c), GrowthStep::FixedPointToCycle};
}

std::vector<Step> grow_word_raw(const std::vector<Step>& w, GrowthStep s) {
  std::vector<Step> r;
  r.reserve(w.size() + 1);
  r.push_back(Step::Up);
  r.insert(r.end(), w.begin(), w.end());
  if (s == GrowthStep::FixedPointToCycle) {
    // first separator: last Up leaving height 0
    int h = 0, last = -1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Step::Up && h == 0) last = static_cast<int>(i);
      h += w[i] == Step::Up ? 1 : -1;
    }
    if (last < 0) throw DomainError("cycle step needs positive height");
    r[last + 1] = Step::Down;
  }
  return r;
}

}  // namespace

Permutation grow_involution(const Permutation& p, GrowthStep s) {
  require_avoiding_involution(p);
  return Permutation(grow_raw(p.values(), s));
}

LatticeWord grow_word(const LatticeWord& w, GrowthStep s) {
  if (!is_dyck_prefix(w)) throw DomainError("not a Dyck prefix: " + w.to_string());
  if (s == GrowthStep::FixedPointToCycle && w.height() == 0) throw DomainError("no rising separator to turn");
  return LatticeWord(grow_word_raw(w.steps(), s));
}

std::pair<Permutation, GrowthStep> undo_involution_growth(const Permutation& p) {
  require_avoiding_involution(p);
  if (p.empty()) throw DomainError("the empty involution is the root");
  auto [v, s] = undo_raw({p.values().begin(), p.values().end()});
  return {Permutation(std::move(v)), s};
}

std::pair<LatticeWord, GrowthStep> undo_word_growth(const LatticeWord& w) {
  if (!is_dyck_prefix(w)) throw DomainError("not a Dyck prefix: " + w.to_string());
  if (w.empty()) throw DomainError("the empty word is the root");
  std::vector<Step> rest(w.steps().begin() + 1, w.steps().end());
  LatticeWord r(rest);
  if (is_dyck_prefix(r)) return {r, GrowthStep::InsertFixedPoint};
  int h = 0;
  for (auto& s : rest) {
    h += s == Step::Up ? 1 : -1;
    if (h == -1) {
      s = Step::Up;
      break;
    }
  }
  return {LatticeWord(std::move(rest)), GrowthStep::FixedPointToCycle};
}

std::vector<GrowthStep> growth_path(const Permutation& p) {
  require_avoiding_involution(p);
  std::vector<GrowthStep> path;
  std::vector<int> v(p.values().begin(), p.values().end());
  while (!v.empty()) {
    auto [parent, s] = undo_raw(std::move(v));
    path.push_back(s);
    v = std::move(parent);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<GrowthStep> growth_path(const LatticeWord& w) {
  std::vector<GrowthStep> path;
  LatticeWord cur = w;
  while (!cur.empty()) {
    auto [parent, s] = undo_word_growth(cur);
    path.push_back(s);
    cur = std::move(parent);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

LatticeWord phi(const Permutation& p) {
  std::vector<Step> w;
  for (GrowthStep s : growth_path(p)) w = grow_word_raw(w, s);
  return LatticeWord(std::move(w));
}

Permutation phi_inv(const LatticeWord& w) {
  std::vector<int> v;
  for (GrowthStep s : growth_path(w)) v = grow_raw(v, s);
  return Permutation(std::move(v));
}

Permutation psi(const Permutation& p) {
  if (!p.is_involution()) throw DomainError("not an involution: " + p.to_string());
  if (count_occurrences(p, p132(), 2) != 1) throw DomainError("does not contain 132 exactly once: " + p.to_string());
  const int n = p.size();
  int x = 0;
  for (int i = 1; i + 1 <= n; ++i)
    if (p(i) == i && p(i + 1) > i + 1) {
      if (x) throw DomainError("ambiguous occurrence");
      x = i;
    }
  if (!x) throw DomainError("no fixed point next to the occurrence: " + p.to_string());
  const int z = p(x + 1);
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (i != x && i != x + 1 && i != z) rest.push_back(p(i));
  auto std_rest = standardize(rest);
  const int t = z - 2;
  auto v = insert_fixed(std_rest.values(), t);
  return Permutation(std::move(v));
}

LatticeWord stack_sort_word(const Permutation& p) {
  std::vector<Step> w;
  std::vector<int> stack;
  int next = 1;
  for (int i = p.size(); i >= 1; --i) {
    stack.push_back(p(i));
    w.push_back(Step::Up);
    while (!stack.empty() && stack.back() == next) {
      stack.pop_back();
      w.push_back(Step::Down);
      ++next;
    }
  }
  if (!stack.empty()) throw DomainError("not stack sortable (contains 132): " + p.to_string());
  return LatticeWord(std::move(w));
}

int primitive_factors(const LatticeWord& w) {
  int h = 0, c = 0;
  for (Step s : w.steps()) {
    h += s == Step::Up ? 1 : -1;
    c += h == 0;
  }
  return c;
}

Permutation attach_cycle(const Permutation& p, int c, int f) {
  if (c < 1 || c > p.size() + 1) throw DomainError("cycle position out of range");
  if (f < 1 || f > p.size() || p(f) != f) throw DomainError("cycle partner is not a fixed point");
  auto v = insert_fixed(p.values(), c);
  const int g = f >= c ? f + 1 : f;
  v[c - 1] = g;
  v[g - 1] = c;
  return Permutation(std::move(v));
}

std::string to_string(RtlLemmaCase c) {
  switch (c) {
    case RtlLemmaCase::EvenLength: return "even-length";
    case RtlLemmaCase::OddOneFixedPoint: return "odd-length-one-fixed-point";
    case RtlLemmaCase::OddManyFixedPoints: return "odd-length-several-fixed-points";
  }
  return "";
}

namespace {

// maxima in increasing order m_1 < m_2 < ...
std::vector<int> maxima_ascending(const Permutation& p) {
  auto m = rtl_maxima_values(p);
  std::reverse(m.begin(), m.end());
  return m;
}

RtlLemmaResult rtl_forward(const Permutation& p) {
  require_avoiding_involution(p);
  const int n = p.size();
  const auto m = maxima_ascending(p);
  const int s = static_cast<int>(m.size());
  if (n == 0 || s % 2 == 0) throw DomainError("needs an odd number of right-to-left maxima");
  const int l = (s - 1) / 2;
  const int mid = m[l];  // m_{l+1}
  if (p(mid) != mid) throw DomainError("middle maximum is not a fixed point");
  const int start = l + 1 < s ? p(m[l + 1]) : 0;  // position of m_{l+2}
  const int fp = fixed_points(p);

  RtlLemmaResult r;
  int prefix = 0;  // length of the block before the new cycle
  if (n % 2 == 1 && fp == 1) {
    r.which = RtlLemmaCase::OddOneFixedPoint;
    const int gap = mid - start - 1;
    if (gap % 2) throw DomainError("unbalanced block before the middle maximum");
    prefix = gap / 2;
  } else {
    r.which = n % 2 == 0 ? RtlLemmaCase::EvenLength : RtlLemmaCase::OddManyFixedPoints;
    if (n % 2 == 0 && s > n - 1) throw DomainError("too many right-to-left maxima");
    int x = 0;  // penultimate fixed point
    for (int f : fixed_point_list(p))
      if (f < mid) x = f;
    if (!x) throw DomainError("needs at least two fixed points");
    prefix = mid - 1 - x;
  }
  r.image = attach_cycle(p, start + prefix + 1, mid);
  return r;
}

}  // namespace

RtlLemmaResult rtl_lemma_map(const Permutation& p, Direction dir) {
  if (dir == Direction::Forward) return rtl_forward(p);

  require_avoiding_involution(p);
  const int n = p.size();
  const auto m = maxima_ascending(p);
  const int s = static_cast<int>(m.size());
  if (s < 2 || (n % 2 == 1 && s % 2 == 0)) throw DomainError("not in the image of the maxima lemma maps");
  // undo one 2-cycle through a maximum; the forward map decides which one
  for (int mu : m) {
    const int partner = p(mu);
    if (partner == mu) continue;
    for (int c : {partner, mu}) {
      std::vector<int> v(p.values().begin(), p.values().end());
      v[partner - 1] = partner;
      v[mu - 1] = mu;
      Permutation pre(remove_fixed(v, c));
      try {
        auto back = rtl_forward(pre);
        if (back.image == p) return {pre, back.which};
      } catch (const DomainError&) {
      }
    }
  }
  throw DomainError("not in the image of the maxima lemma maps");
}

}  // namespace involab
