#include <doctest.h>

#include <map>
#include <set>

#include "brute.hpp"
#include "involab/errors.hpp"
#include "involab/lattice_word.hpp"

using namespace involab;

namespace {
LatticeWord W(const char* s) { return LatticeWord::parse(s); }
}  // namespace

TEST_CASE("classification") {
  auto c = classify(W("UUDD"));
  CHECK(c.dyck_prefix);
  CHECK(c.dyck_word);
  CHECK(c.bilateral);
  c = classify(W("DDUU"));
  CHECK_FALSE(c.dyck_prefix);
  CHECK_FALSE(c.dyck_word);
  CHECK(c.bilateral);
  c = classify(W(""));
  CHECK((c.dyck_prefix && c.dyck_word && c.bilateral));
  CHECK(classify(W("DDDU")).other());
  CHECK(is_bilateral(W("DUD")));
  CHECK_THROWS_AS(W("UXD"), DomainError);
}

TEST_CASE("xi on the worked examples") {
  CHECK(xi(W("UDUUUDUDUUUDDU")) == W("UDDDUDUDUUUDDU"));
  const std::pair<const char*, const char*> listed[] = {
      {"UUUU", "DDUU"}, {"UUUD", "DUUD"}, {"UUDU", "DUDU"}, {"UUDD", "UUDD"}, {"UDUU", "UDDU"}, {"UDUD", "UDUD"}};
  for (auto [a, b] : listed) {
    CHECK(xi(W(a)) == W(b));
    CHECK(xi_inv(W(b)) == W(a));
  }
  CHECK(xi(W("UUDUDD")) == W("UUDUDD"));
  CHECK_THROWS_AS(xi(W("DU")), DomainError);
  CHECK_THROWS_AS(xi_inv(W("UUU")), DomainError);
}

TEST_CASE("xi is a bijection keeping length and Dyck factors, n <= 16") {
  for (int n = 0; n <= 16; ++n) {
    int prefixes = 0, bilateral = 0;
    std::set<LatticeWord> images;
    for (const auto& s : brute::words(n)) {
      const auto w = LatticeWord::parse(s);
      const int h = brute::height(s);
      if (h == 0 || h == -1) ++bilateral;
      if (!brute::dyck_prefix(s)) continue;
      ++prefixes;
      const auto b = xi(w);
      REQUIRE(b.size() == n);
      REQUIRE(is_bilateral(b));
      REQUIRE(xi_inv(b) == w);
      images.insert(b);
      // the Dyck factors of w survive as factors of b
      auto fw = dyck_factors(w);
      std::multiset<LatticeWord> inner(fw.begin(), fw.end());
      inner.erase(LatticeWord());
      for (const auto& f : inner) REQUIRE(b.to_string().find(f.to_string()) != std::string::npos);
    }
    REQUIRE(prefixes == brute::binom(n, n / 2));
    REQUIRE(bilateral == brute::binom(n, n / 2));
    REQUIRE(static_cast<int>(images.size()) == prefixes);
  }
}

TEST_CASE("dyck factors and separators") {
  const auto w = W("UDUUUDUDUUUDDU");
  const auto f = dyck_factors(w);
  REQUIRE(f.size() == 5);
  CHECK(f[0] == W("UD"));
  CHECK(f[1] == W(""));
  CHECK(f[2] == W("UDUD"));
  CHECK(f[3] == W("UUDD"));
  CHECK(f[4] == W(""));
  CHECK(rising_separators(w).size() == 4);
}

TEST_CASE("right Dyck steps") {
  CHECK(right_dyck_steps(W("")) == 0);
  CHECK(right_dyck_steps(W("UU")) == 0);
  CHECK(right_dyck_steps(W("UD")) == 1);
}

TEST_CASE("double steps and heights") {
  CHECK(double_step_count(W("DUUD")) == 1);
  CHECK(double_step_count(W("UUDD")) == 2);
  CHECK(double_step_count(W("")) == 0);
  CHECK(min_nonpositive_height(W("DDUU")) == 2);
  CHECK(min_nonpositive_height(W("UUDD")) == 0);
}

TEST_CASE("split_uv") {
  auto [u, v] = split_uv(W("DUUD"));
  CHECK(u == W("UD"));
  CHECK(v == W("UU"));
  std::tie(u, v) = split_uv(W(""));
  CHECK(u.empty());
  CHECK(v.empty());
  std::tie(u, v) = split_uv(W("UD"));
  CHECK(merge_uv(u, v) == W("UD"));
}

TEST_CASE("split_uv round trips on bilateral words, n <= 14") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& s : brute::words(n)) {
      const int h = brute::height(s);
      if (h != 0 && h != -1) continue;
      const auto b = LatticeWord::parse(s);
      const auto [u, v] = split_uv(b);
      REQUIRE(u.size() + v.size() == n);
      REQUIRE(merge_uv(u, v) == b);
    }
}

TEST_CASE("all_words") {
  CHECK(all_words(0).size() == 1);
  CHECK(all_words(5).size() == 32);
}
