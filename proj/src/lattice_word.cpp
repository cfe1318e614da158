#include "involab/lattice_word.hpp"

#include <algorithm>

#include "involab/errors.hpp"

namespace involab {

LatticeWord LatticeWord::parse(std::string_view text) {
  std::vector<Step> s;
  for (char c : text) {
    if (c == 'U' || c == 'u') s.push_back(Step::Up);
    else if (c == 'D' || c == 'd') s.push_back(Step::Down);
    else if (c == ' ') continue;
    else throw DomainError("word letters must be U or D");
  }
  return LatticeWord(std::move(s));
}

int LatticeWord::ups() const {
  return static_cast<int>(std::count(s_.begin(), s_.end(), Step::Up));
}

int LatticeWord::downs() const { return size() - ups(); }

int LatticeWord::min_height() const {
  int h = 0, lo = 0;
  for (Step s : s_) {
    h += s == Step::Up ? 1 : -1;
    lo = std::min(lo, h);
  }
  return lo;
}

std::string LatticeWord::to_string() const {
  std::string t;
  for (Step s : s_) t += static_cast<char>(s);
  return t;
}

bool is_dyck_prefix(const LatticeWord& w) { return w.min_height() >= 0; }

bool is_bilateral(const LatticeWord& w) {
  const int h = w.height();
  return h == 0 || h == -1;
}

Classification classify(const LatticeWord& w) {
  Classification c;
  c.dyck_prefix = is_dyck_prefix(w);
  c.dyck_word = c.dyck_prefix && w.height() == 0;
  c.bilateral = is_bilateral(w);
  return c;
}

namespace {

std::vector<int> heights(const LatticeWord& w) {  // heights[i] = before step i
  std::vector<int> h(w.size() + 1, 0);
  for (int i = 0; i < w.size(); ++i) h[i + 1] = h[i] + (w[i] == Step::Up ? 1 : -1);
  return h;
}

void require_prefix(const LatticeWord& w) {
  if (!is_dyck_prefix(w)) throw DomainError("not a Dyck prefix: " + w.to_string());
}

}  // namespace

std::vector<int> rising_separators(const LatticeWord& w) {
  require_prefix(w);
  const auto h = heights(w);
  std::vector<int> sep(std::max(0, w.height()), -1);
  for (int i = 0; i < w.size(); ++i)
    if (w[i] == Step::Up && h[i] < static_cast<int>(sep.size())) sep[h[i]] = i;
  return sep;
}

std::vector<LatticeWord> dyck_factors(const LatticeWord& w) {
  const auto sep = rising_separators(w);
  std::vector<LatticeWord> out;
  int prev = 0;
  auto cut = [&](int to) {
    out.emplace_back(std::vector<Step>(w.steps().begin() + prev, w.steps().begin() + to));
  };
  for (int s : sep) {
    cut(s);
    prev = s + 1;
  }
  cut(w.size());
  return out;
}

LatticeWord xi(const LatticeWord& w) {
  const auto sep = rising_separators(w);
  const int flip = (static_cast<int>(sep.size()) + 1) / 2;
  auto s = w.steps();
  for (int i = 0; i < flip; ++i) s[sep[i]] = Step::Down;
  return LatticeWord(std::move(s));
}

LatticeWord xi_inv(const LatticeWord& b) {
  if (!is_bilateral(b)) throw DomainError("not a bilateral word: " + b.to_string());
  const auto h = heights(b);
  const int q = -b.min_height();
  const int end = b.height();
  auto s = b.steps();
  // first Down reaching -1..-q
  int reached = 0;
  for (int i = 0; i < b.size(); ++i)
    if (b[i] == Step::Down && h[i + 1] < -reached) {
      s[i] = Step::Up;
      reached = -h[i + 1];
    }
  // last Up leaving each level -q..end-1
  for (int level = -q; level < end; ++level) {
    int last = -1;
    for (int i = 0; i < b.size(); ++i)
      if (b[i] == Step::Up && h[i] == level) last = i;
    if (last < 0) throw DomainError("bilateral word without separator");
    s[last] = Step::Up;
  }
  return LatticeWord(std::move(s));
}

namespace {

std::int64_t right_dyck_steps_rec(std::vector<Step> w) {
  // The recursion only ever has one child, so a loop replaces memoization.
  std::int64_t total = 0;
  while (!w.empty()) {
    LatticeWord lw(w);
    const auto sep = rising_separators(lw);
    const int p = static_cast<int>(sep.size());
    const int n = lw.size();
    if (p > 0 && sep[0] == 0) {
      // w_0 empty: drop the leading separator
      total += n - p;
      w.erase(w.begin());
      continue;
    }
    // w_0 = U w0' D w0'' (first return), tail = w_1 .. w_p without separators
    const int w0_len = p > 0 ? sep[0] : n;
    int h = 0, ret = 0;
    for (int i = 0; i < w0_len; ++i) {
      h += w[i] == Step::Up ? 1 : -1;
      if (h == 0) {
        ret = i;
        break;
      }
    }
    const int inner = ret - 1;                 // |w0'|
    const int after = w0_len - ret - 1;        // |w0''|
    const int tail = n - w0_len - p;
    total += (inner + 1 + after + tail) + (after + tail);
    w.erase(w.begin() + ret);
    w.erase(w.begin());
  }
  return total;
}

}  // namespace

std::int64_t right_dyck_steps(const LatticeWord& w) {
  require_prefix(w);
  return right_dyck_steps_rec(w.steps());
}

int double_step_count(const LatticeWord& b) {
  int c = 0;
  for (int i = 0; i + 1 < b.size(); ++i) c += b[i] == b[i + 1];
  if (!b.empty() && b[b.size() - 1] == Step::Up) ++c;  // seam with the appended U
  return c;
}

int min_nonpositive_height(const LatticeWord& b) { return -b.min_height(); }

std::pair<LatticeWord, LatticeWord> split_uv(const LatticeWord& b) {
  if (!is_bilateral(b)) throw DomainError("not a bilateral word: " + b.to_string());
  std::vector<Step> u, v;
  for (int i = 0; i < b.size(); ++i) {
    const Step next = i + 1 < b.size() ? b[i + 1] : Step::Up;
    (b[i] == Step::Up ? u : v).push_back(next);
  }
  return {LatticeWord(std::move(u)), LatticeWord(std::move(v))};
}

LatticeWord merge_uv(const LatticeWord& u, const LatticeWord& v) {
  const int n = u.size() + v.size();
  if (n == 0) return {};
  // the letters of u and v are w_2 .. w_n followed by the appended U, so the
  // height constraint fixes w_1
  const int ups_rest = u.ups() + v.ups() - 1;
  const int want_ups = n / 2;  // #U = #D (n even) or #D - 1 (n odd)
  const int first_up = want_ups - ups_rest;
  if (first_up != 0 && first_up != 1) throw DomainError("u, v do not come from a bilateral word");
  std::vector<Step> w{first_up ? Step::Up : Step::Down};
  std::size_t iu = 0, iv = 0;
  for (int i = 1; i <= n; ++i) {
    const auto& src = w.back() == Step::Up ? u : v;
    auto& idx = w.back() == Step::Up ? iu : iv;
    if (idx >= static_cast<std::size_t>(src.size())) throw DomainError("u, v do not come from a bilateral word");
    const Step s = src[static_cast<int>(idx++)];
    if (i < n) w.push_back(s);
    else if (s != Step::Up) throw DomainError("u, v do not come from a bilateral word");
  }
  LatticeWord out(std::move(w));
  if (split_uv(out) != std::pair{u, v}) throw DomainError("u, v do not come from a bilateral word");
  return out;
}

std::vector<LatticeWord> all_words(int n) {
  std::vector<LatticeWord> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Step> s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1 ? Step::Down : Step::Up;
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace involab
