#pragma once

// Naive reference implementations.  Nothing here calls into the library, so
// the tests compare two independent computations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace brute {

using Word = std::vector<int>;  // one-line notation, values 1..n

inline std::vector<Word> permutations(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool is_involution(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[w[i] - 1] != static_cast<int>(i) + 1) return false;
  return true;
}

// pair the smallest open point with itself or a larger open point
inline void involutions_rec(Word& w, int n, const std::function<void(const Word&)>& fn) {
  int i = 0;
  while (i < n && w[i]) ++i;
  if (i == n) {
    fn(w);
    return;
  }
  w[i] = i + 1;
  involutions_rec(w, n, fn);
  for (int j = i + 1; j < n; ++j) {
    if (w[j]) continue;
    w[i] = j + 1;
    w[j] = i + 1;
    involutions_rec(w, n, fn);
    w[j] = 0;
  }
  w[i] = 0;
}

inline void for_each_involution(int n, const std::function<void(const Word&)>& fn) {
  Word w(n, 0);
  involutions_rec(w, n, fn);
}

inline std::int64_t inversions(const Word& w) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

inline int rises(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] < w[i + 1];
  return c;
}

inline int fixed_points(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c += w[i] == static_cast<int>(i) + 1;
  return c;
}

inline int rtl_maxima(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < w.size(); ++j) ok = ok && w[j] < w[i];
    c += ok;
  }
  return c;
}

inline int ltr_minima(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i; ++j) ok = ok && w[j] > w[i];
    c += ok;
  }
  return c;
}

// "1-3-2" / "12-43": digits, dash = gap allowed, no dash = adjacent
struct Pat {
  Word letters;
  std::vector<bool> glued;  // glued[i]: letters i, i+1 adjacent in the host
};

inline Pat pat(const std::string& s) {
  Pat p;
  bool dash = true;
  for (char c : s) {
    if (c == '-') {
      dash = true;
      continue;
    }
    if (!p.letters.empty()) p.glued.push_back(!dash);
    p.letters.push_back(c - '0');
    dash = false;
  }
  return p;
}

// every k-subset of positions, check order isomorphism and adjacency
inline std::int64_t occurrences(const Word& w, const Pat& t) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(t.letters.size());
  if (k > n) return 0;
  std::int64_t c = 0;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int at, int from) {
    if (at == k) {
      for (int a = 0; a < k; ++a) {
        if (a + 1 < k && t.glued[a] && idx[a + 1] != idx[a] + 1) return;
        for (int b = 0; b < k; ++b)
          if ((t.letters[a] < t.letters[b]) != (w[idx[a]] < w[idx[b]])) return;
      }
      ++c;
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[at] = i;
      rec(at + 1, i + 1);
    }
  };
  rec(0, 0);
  return c;
}

inline std::int64_t occurrences(const Word& w, const std::string& t) { return occurrences(w, pat(t)); }

inline std::string text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// all U/D words of length n as strings
inline std::vector<std::string> words(int n) {
  std::vector<std::string> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (m >> (n - 1 - i)) & 1 ? 'D' : 'U';
    out.push_back(s);
  }
  return out;
}

inline bool dyck_prefix(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

inline int height(const std::string& s) {
  int h = 0;
  for (char c : s) h += c == 'U' ? 1 : -1;
  return h;
}

}  // namespace brute
