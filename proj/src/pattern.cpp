#include "involab/pattern.hpp"

#include <algorithm>
#include <cctype>

#include "involab/errors.hpp"

namespace involab {

PatternSpec::PatternSpec(Permutation letters, std::vector<bool> adjacent)
    : letters_(std::move(letters)), adjacent_(std::move(adjacent)) {
  const auto want = letters_.empty() ? 0u : static_cast<std::size_t>(letters_.size() - 1);
  if (adjacent_.size() != want) throw DomainError("adjacency vector has wrong length");
}

PatternSpec PatternSpec::classical(const Permutation& letters) {
  return PatternSpec(letters, std::vector<bool>(letters.empty() ? 0 : letters.size() - 1, false));
}

PatternSpec PatternSpec::parse(std::string_view text) {
  // single-digit letters only
  std::vector<int> v;
  std::vector<bool> adj;
  bool pending_dash = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-') {
      if (v.empty() || pending_dash) throw DomainError("bad pattern text: " + std::string(text));
      pending_dash = true;
    } else if (c == ' ') {
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!v.empty()) adj.push_back(!pending_dash);
      v.push_back(c - '0');
      pending_dash = false;
    } else {
      throw DomainError("bad pattern text: " + std::string(text));
    }
  }
  if (v.empty()) throw DomainError("empty pattern");
  if (pending_dash) throw DomainError("bad pattern text: " + std::string(text));
  return PatternSpec(Permutation(std::move(v)), std::move(adj));
}

PatternSpec PatternSpec::increasing(int k) { return classical(Permutation::identity(k)); }

PatternSpec PatternSpec::swap_front(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i + 1;
  if (k >= 2) std::swap(v[0], v[1]);
  return classical(Permutation(std::move(v)));
}

PatternSpec PatternSpec::rotate_left(int k) { return rotation(k, 1); }

PatternSpec PatternSpec::rotation(int k, int d) {
  if (d < 0 || d > k) throw DomainError("rotation offset out of range");
  std::vector<int> v;
  for (int i = d + 1; i <= k; ++i) v.push_back(i);
  for (int i = 1; i <= d; ++i) v.push_back(i);
  return classical(Permutation(std::move(v)));
}

bool PatternSpec::is_classical() const {
  for (bool a : adjacent_)
    if (a) return false;
  return true;
}

std::string PatternSpec::to_string() const {
  std::string s;
  const bool wide = letters_.size() > 9;
  for (int i = 1; i <= letters_.size(); ++i) {
    if (i > 1) {
      if (!adjacent_[i - 2]) s += '-';
      else if (wide) s += ' ';
    }
    s += std::to_string(letters_(i));
  }
  return s;
}

namespace {

struct Counter {
  std::span<const int> text;
  const PatternSpec& pat;
  std::int64_t limit;
  std::int64_t count = 0;
  std::vector<int> chosen;  // values picked so far

  // place pattern letter t (0-based) at some position >= from
  bool place(int t, int from) {
    const int k = pat.size();
    if (t == k) {
      ++count;
      return limit > 0 && count >= limit;
    }
    const int n = static_cast<int>(text.size());
    int lo = from, hi = n - (k - t);
    if (t > 0 && pat.adjacency()[t - 1]) hi = std::min(hi, from);
    const int want = pat.letters()(t + 1);
    for (int pos = lo; pos <= hi; ++pos) {
      const int val = text[pos];
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) ok = (pat.letters()(s + 1) < want) == (chosen[s] < val);
      if (!ok) continue;
      chosen[t] = val;
      if (place(t + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::int64_t count_occurrences(const Permutation& p, const PatternSpec& t, std::int64_t limit) {
  if (t.size() == 0) return 1;
  if (t.size() > p.size()) return 0;
  Counter c{p.values(), t, limit, 0, {}};
  c.chosen.assign(t.size(), 0);
  c.place(0, 0);
  return c.count;
}

bool contains(const Permutation& p, const PatternSpec& t) { return count_occurrences(p, t, 1) > 0; }

bool avoids(const Permutation& p, const PatternSpec& t) { return !contains(p, t); }

bool avoids_all(const Permutation& p, const std::vector<PatternSpec>& ts) {
  for (const auto& t : ts)
    if (contains(p, t)) return false;
  return true;
}

}  // namespace involab
