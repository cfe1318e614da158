#include <doctest.h>

#include "brute.hpp"
#include "involab/decompose.hpp"
#include "involab/errors.hpp"
#include "involab/pattern.hpp"

using namespace involab;

TEST_CASE("pattern text") {
  const auto t = PatternSpec::parse("12-43");
  CHECK(t.letters() == Permutation::parse("1243"));
  CHECK(t.adjacency() == std::vector<bool>{true, false, true});
  CHECK(t.to_string() == "12-43");
  CHECK(PatternSpec::parse("1-3-2").is_classical());
  CHECK_THROWS_AS(PatternSpec::parse("1--2"), DomainError);
  CHECK_THROWS_AS(PatternSpec::parse("1-1"), DomainError);
  CHECK_THROWS_AS(PatternSpec::parse(""), DomainError);
}

TEST_CASE("pattern families") {
  CHECK(PatternSpec::increasing(4).letters() == Permutation::parse("1234"));
  CHECK(PatternSpec::swap_front(5).letters() == Permutation::parse("21345"));
  CHECK(PatternSpec::rotate_left(4).letters() == Permutation::parse("2341"));
  CHECK(PatternSpec::rotation(5, 2).letters() == Permutation::parse("34512"));
  CHECK(PatternSpec::increasing(3).is_classical());
}

TEST_CASE("occurrences in the worked examples") {
  const auto p132 = PatternSpec::parse("1-3-2");
  CHECK(count_occurrences(Permutation::parse("31542"), p132) == 4);
  CHECK(count_occurrences(Permutation::parse("3542176"), PatternSpec::parse("12-43")) == 1);
  CHECK(count_occurrences(Permutation::parse("3542176"), PatternSpec::parse("1-2-4-3")) == 2);
  CHECK(count_occurrences(Permutation::parse("34521"), p132) == 0);
  CHECK(avoids(Permutation::parse("34521"), p132));
  CHECK_FALSE(avoids(Permutation::parse("31542"), p132));
  CHECK(avoids_all(Permutation(), {p132, PatternSpec::parse("1")}));
  CHECK(count_occurrences(Permutation::parse("31542"), p132, 2) == 2);
}

TEST_CASE("occurrence counts match a k-subset scan, n <= 8") {
  const char* pats[] = {"1-2", "12", "1-3-2", "13-2", "1-32", "2-1-3", "1-2-3-4", "12-43", "2-3-4-1", "3-4-1-2", "123"};
  for (int n = 0; n <= 8; ++n)
    for (const auto& w : brute::permutations(n)) {
      const Permutation p(w);
      for (const char* s : pats) REQUIRE(count_occurrences(p, PatternSpec::parse(s)) == brute::occurrences(w, s));
    }
}

TEST_CASE("pattern identities on S_n, n <= 8") {
  const auto p12 = PatternSpec::parse("1-2"), adj = PatternSpec::parse("12");
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : brute::permutations(n)) {
      const Permutation p(w);
      REQUIRE(inversions(p) + count_occurrences(p, p12) == n * (n - 1) / 2);
      REQUIRE(rises(p) == count_occurrences(p, adj));
    }
}

TEST_CASE("block decomposition examples") {
  const auto d21 = block_decompose(Permutation::parse("21"), DecomposeMode::kAvoiding);
  CHECK(d21.kind == BlockKind::kSplit);
  CHECK(d21.j == 1);
  CHECK(d21.beta.empty());
  CHECK(d21.gamma.empty());

  const auto d123 = block_decompose(Permutation::parse("123"), DecomposeMode::kAvoiding);
  CHECK(d123.kind == BlockKind::kLastIsMax);
  CHECK(d123.inner == Permutation::parse("12"));

  const auto d = block_decompose(Permutation::parse("45312"), DecomposeMode::kAvoiding);
  CHECK(d.kind == BlockKind::kSplit);
  CHECK(d.j == 2);
  CHECK(d.beta == Permutation::parse("1"));
  CHECK(d.gamma == Permutation::parse("1"));
  CHECK(d.delta == d.beta.inverse());
  CHECK(reassemble(d) == Permutation::parse("45312"));

  CHECK_THROWS_AS(block_decompose(Permutation::parse("132"), DecomposeMode::kAvoiding), DomainError);
  CHECK_THROWS_AS(block_decompose(Permutation::parse("43512"), DecomposeMode::kAvoiding), DomainError);
  CHECK_THROWS_AS(block_decompose(Permutation::parse("123"), DecomposeMode::kOneOccurrence), DomainError);
}

TEST_CASE("decomposition round trips, n <= 10") {
  const auto p132 = brute::pat("1-3-2");
  for (int n = 1; n <= 10; ++n)
    brute::for_each_involution(n, [&](const brute::Word& w) {
      const auto c = brute::occurrences(w, p132);
      if (c > 1) return;
      const Permutation p(w);
      const auto mode = c == 0 ? DecomposeMode::kAvoiding : DecomposeMode::kOneOccurrence;
      const auto d = block_decompose(p, mode);
      REQUIRE(reassemble(d) == p);
      if (d.kind == BlockKind::kSplit) REQUIRE(d.delta == d.beta.inverse());
      if (d.kind == BlockKind::kCentralCycle) REQUIRE(d.gamma == d.beta.inverse());
    });
}
