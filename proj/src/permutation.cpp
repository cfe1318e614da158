#include "involab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "involab/errors.hpp"

namespace involab {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > n || seen[x]) throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0].size() > 1) {
    for (char c : toks[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad permutation text");
      v.push_back(c - '0');
    }
    return Permutation(std::move(v));
  }
  for (const auto& t : toks) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw DomainError("bad permutation text: " + t);
    }
    if (used != t.size()) throw DomainError("bad permutation text: " + t);
    v.push_back(x);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(v_.size());
  for (int i = 0; i < size(); ++i) w[v_[i] - 1] = i + 1;
  Permutation r;
  r.v_ = std::move(w);
  return r;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (v_[v_[i] - 1] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v_[i]);
  }
  return s;
}

Permutation standardize(std::span<const int> letters) {
  std::vector<int> idx(letters.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return letters[a] < letters[b]; });
  std::vector<int> v(letters.size());
  for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(v));
}

std::int64_t inversions(const Permutation& p) {
  std::int64_t c = 0;
  auto v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

int rises(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) c += p(i) < p(i + 1);
  return c;
}

int descents(const Permutation& p) {
  return p.empty() ? 0 : p.size() - 1 - rises(p);
}

int fixed_points(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) == i;
  return c;
}

std::vector<int> fixed_point_list(const Permutation& p) {
  std::vector<int> f;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) f.push_back(i);
  return f;
}

std::vector<int> rtl_maxima_values(const Permutation& p) {
  std::vector<int> m;
  int best = 0;
  for (int i = p.size(); i >= 1; --i)
    if (p(i) > best) {
      best = p(i);
      m.push_back(best);
    }
  std::reverse(m.begin(), m.end());
  return m;
}

int rtl_maxima(const Permutation& p) {
  return static_cast<int>(rtl_maxima_values(p).size());
}

int ltr_minima(const Permutation& p) {
  int c = 0;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) < best) {
      best = p(i);
      ++c;
    }
  return c;
}

bool is_even(const Permutation& p) { return inversions(p) % 2 == 0; }
Parity parity(const Permutation& p) { return is_even(p) ? Parity::Even : Parity::Odd; }

Statistics statistics(const Permutation& p) {
  return {inversions(p), rises(p), descents(p), fixed_points(p), rtl_maxima(p), ltr_minima(p)};
}

}  // namespace involab
