#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "involab/bijections.hpp"
#include "involab/errors.hpp"
#include "involab/pattern.hpp"

using namespace involab;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
LatticeWord W(const char* s) { return LatticeWord::parse(s); }

// I_n(132) from the reference generator
std::vector<brute::Word> avoiders(int n) {
  std::vector<brute::Word> out;
  const auto t = brute::pat("1-3-2");
  brute::for_each_involution(n, [&](const brute::Word& w) {
    if (brute::occurrences(w, t) == 0) out.push_back(w);
  });
  return out;
}
}  // namespace

TEST_CASE("growth steps") {
  using enum GrowthStep;
  CHECK(grow_involution(Permutation(), InsertFixedPoint) == P("1"));
  CHECK(grow_involution(P("1"), InsertFixedPoint) == P("12"));
  CHECK(grow_involution(P("1"), FixedPointToCycle) == P("21"));
  CHECK(grow_word(LatticeWord(), InsertFixedPoint) == W("U"));
  CHECK(grow_word(W("U"), InsertFixedPoint) == W("UU"));
  CHECK(grow_word(W("U"), FixedPointToCycle) == W("UD"));
  CHECK_THROWS_AS(grow_involution(P("21"), FixedPointToCycle), DomainError);
  CHECK_THROWS_AS(grow_word(W("UD"), FixedPointToCycle), DomainError);
}

TEST_CASE("growth changes inversions by n-p and n-p+1") {
  using enum GrowthStep;
  for (int n = 0; n <= 9; ++n)
    for (const auto& w : avoiders(n)) {
      const Permutation p(w);
      const int f = brute::fixed_points(w);
      const auto a = grow_involution(p, InsertFixedPoint);
      REQUIRE(brute::inversions(brute::Word(a.values().begin(), a.values().end())) ==
              brute::inversions(w) + n - f);
      REQUIRE(undo_involution_growth(a) == std::pair{p, InsertFixedPoint});
      const auto lw = phi(p);
      REQUIRE(right_dyck_steps(grow_word(lw, InsertFixedPoint)) == right_dyck_steps(lw) + n - f);
      if (f == 0) continue;
      const auto b = grow_involution(p, FixedPointToCycle);
      REQUIRE(b.is_involution());
      REQUIRE(count_occurrences(b, PatternSpec::parse("1-3-2")) == 0);
      REQUIRE(brute::inversions(brute::Word(b.values().begin(), b.values().end())) ==
              brute::inversions(w) + n - f + 1);
      REQUIRE(undo_involution_growth(b) == std::pair{p, FixedPointToCycle});
      REQUIRE(right_dyck_steps(grow_word(lw, FixedPointToCycle)) == right_dyck_steps(lw) + n - f + 1);
    }
}

TEST_CASE("phi small cases") {
  CHECK(phi(P("1")) == W("U"));
  CHECK(phi(P("12")) == W("UU"));
  CHECK(phi(P("21")) == W("UD"));
  CHECK(phi(Permutation()) == LatticeWord());
  CHECK_THROWS_AS(phi(P("132")), DomainError);
  CHECK_THROWS_AS(phi(P("231")), DomainError);
  CHECK_THROWS_AS(phi_inv(W("DU")), DomainError);
}

TEST_CASE("phi transports statistics, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    std::set<LatticeWord> seen;
    for (const auto& w : avoiders(n)) {
      const Permutation p(w);
      const auto lw = phi(p);
      REQUIRE(lw.size() == n);
      REQUIRE(brute::dyck_prefix(lw.to_string()));
      REQUIRE(phi_inv(lw) == p);
      REQUIRE(growth_path(lw) == growth_path(p));
      const int f = brute::fixed_points(w);
      REQUIRE(lw.height() == f);
      REQUIRE(right_dyck_steps(lw) == brute::inversions(w));
      const auto b = xi(lw);
      REQUIRE(double_step_count(b) == brute::rises(w));
      REQUIRE(min_nonpositive_height(b) == (f + 1) / 2);
      seen.insert(lw);
    }
    REQUIRE(static_cast<std::int64_t>(seen.size()) == brute::binom(n, n / 2));
  }
}

TEST_CASE("psi") {
  CHECK(psi(P("132")) == P("1"));
  CHECK_THROWS_AS(psi(P("12")), DomainError);
  CHECK_THROWS_AS(psi(P("1432")), DomainError);  // three occurrences
}

TEST_CASE("psi on every valid input, n <= 12") {
  const auto t = brute::pat("1-3-2");
  for (int n = 3; n <= 12; ++n) {
    std::set<Permutation> images;
    int valid = 0;
    brute::for_each_involution(n, [&](const brute::Word& w) {
      if (brute::occurrences(w, t) != 1) return;
      const int f = brute::fixed_points(w);
      if (f == 0) {
        REQUIRE_THROWS_AS(psi(Permutation(w)), DomainError);
        return;
      }
      ++valid;
      const auto s = psi(Permutation(w));
      const brute::Word sw(s.values().begin(), s.values().end());
      REQUIRE(static_cast<int>(sw.size()) == n - 2);
      REQUIRE(brute::is_involution(sw));
      REQUIRE(brute::occurrences(sw, t) == 0);
      REQUIRE(brute::fixed_points(sw) == f);
      REQUIRE(brute::inversions(sw) == brute::inversions(w) - 2 * n + 2 * f + 3);
      REQUIRE(brute::inversions(sw) % 2 != brute::inversions(w) % 2);
      images.insert(s);
    });
    int targets = 0;
    for (const auto& w : avoiders(n - 2)) targets += brute::fixed_points(w) > 0;
    REQUIRE(static_cast<int>(images.size()) == valid);
    REQUIRE(valid == targets);
  }
}

TEST_CASE("stack sorting") {
  CHECK(stack_sort_word(P("43512")) == W("UUDDUUDUDD"));
  // read right to left the identity is pushed whole, then popped: one primitive factor
  for (int n = 0; n <= 6; ++n)
    CHECK(stack_sort_word(Permutation::identity(n)) == LatticeWord::parse(std::string(n, 'U') + std::string(n, 'D')));
  CHECK(stack_sort_word(P("54321")) == W("UDUDUDUDUD"));
  CHECK_THROWS_AS(stack_sort_word(P("132")), DomainError);
}

TEST_CASE("stack words: primitive factors count right-to-left maxima, n <= 9") {
  const auto t = brute::pat("1-3-2");
  for (int n = 0; n <= 9; ++n) {
    std::set<LatticeWord> seen;
    int count = 0;
    for (const auto& w : brute::permutations(n)) {
      if (brute::occurrences(w, t)) continue;
      ++count;
      const auto d = stack_sort_word(Permutation(w));
      REQUIRE(d.size() == 2 * n);
      REQUIRE(classify(d).dyck_word);
      REQUIRE(primitive_factors(d) == brute::rtl_maxima(w));
      seen.insert(d);
    }
    REQUIRE(static_cast<int>(seen.size()) == count);
  }
}

TEST_CASE("maxima lemma maps on the worked examples") {
  struct Ex {
    const char* pi;
    const char* sigma;
    RtlLemmaCase which;
  };
  const Ex ex[] = {
      {"19 18 20 17 15 13 14 10 9 8 11 12 6 7 5 16 4 2 1 3",
       "20 19 21 18 16 14 15 17 11 10 9 12 13 6 7 5 8 4 2 1 3", RtlLemmaCase::EvenLength},
      {"18 17 19 14 15 16 11 10 12 8 7 9 13 4 5 6 2 1 3", "19 18 20 15 16 17 12 11 13 14 8 7 9 10 4 5 6 2 1 3",
       RtlLemmaCase::OddOneFixedPoint},
      {"12 13 10 9 6 5 7 8 4 3 11 1 2", "13 14 11 10 12 7 6 8 9 4 3 5 1 2", RtlLemmaCase::OddManyFixedPoints},
  };
  for (const auto& e : ex) {
    const auto r = rtl_lemma_map(P(e.pi), Direction::Forward);
    CHECK(r.image == P(e.sigma));
    CHECK(r.which == e.which);
    CHECK(rtl_lemma_map(P(e.sigma), Direction::Inverse).image == P(e.pi));
  }
  CHECK(rtl_maxima_values(P(ex[0].sigma)) == std::vector<int>{21, 18, 17, 13, 8, 4, 3});
  CHECK_THROWS_AS(rtl_lemma_map(P("21"), Direction::Forward), DomainError);
  CHECK(to_string(RtlLemmaCase::EvenLength) == "even-length");
}

TEST_CASE("maxima lemma maps are bijections onto their codomains, n <= 11") {
  for (int n = 1; n <= 10; ++n) {
    std::set<Permutation> images;
    int domain = 0;
    for (const auto& w : avoiders(n)) {
      const int s = brute::rtl_maxima(w);
      if (s % 2 == 0) continue;
      ++domain;
      const auto r = rtl_lemma_map(Permutation(w), Direction::Forward);
      const brute::Word iw(r.image.values().begin(), r.image.values().end());
      REQUIRE(iw.size() == w.size() + 1);
      const int si = brute::rtl_maxima(iw);
      if (n % 2 == 0) {
        REQUIRE(si == s + 2);
      } else if (brute::fixed_points(w) == 1) {
        REQUIRE(si == s + 1);
        REQUIRE(brute::fixed_points(iw) == 0);
      } else {
        REQUIRE(si == s + 2);
      }
      images.insert(r.image);
    }
    int codomain = 0;
    for (const auto& w : avoiders(n + 1)) {
      const int s = brute::rtl_maxima(w);
      codomain += n % 2 == 0 ? (s % 2 == 1 && s >= 3) : s >= 2;
    }
    REQUIRE(static_cast<int>(images.size()) == domain);
    REQUIRE(domain == codomain);
  }
}

TEST_CASE("right-to-left maxima facts on I_n(132), n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& w : avoiders(n)) {
      const Permutation p(w);
      auto m = rtl_maxima_values(p);  // decreasing
      std::reverse(m.begin(), m.end());
      const int s = static_cast<int>(m.size());
      // m_i is paired with m_{s+1-i}
      for (int i = 0; i < s; ++i) REQUIRE(w[m[i] - 1] == m[s - 1 - i]);
      if (s % 2 == 0) REQUIRE(brute::fixed_points(w) == 0);
      if (s % 2 == 1 && s != 1) {
        const int mid = (s + 1) / 2;  // 1-based
        REQUIRE(m[mid - 1] + m[mid - 2] == n);
      }
    }
}
