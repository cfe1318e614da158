#include <doctest.h>

#include <map>

#include "brute.hpp"
#include "involab/succession.hpp"

using namespace involab;

namespace {
std::vector<brute::Word> avoiders(int n) {
  std::vector<brute::Word> out;
  const auto t = brute::pat("1-3-2");
  brute::for_each_involution(n, [&](const brute::Word& w) {
    if (brute::occurrences(w, t) == 0) out.push_back(w);
  });
  return out;
}
}  // namespace

TEST_CASE("level counts") {
  const auto s = fixed_point_system();
  CHECK(level_total(s, 4) == 6);
  for (const auto& sys : {fixed_point_system(), inversion_system(), rise_system(), bounded_system(3)}) {
    const auto lv = level_counts(sys, 0);
    REQUIRE(lv.size() == 1);
    CHECK(lv.begin()->first == sys.root);
    CHECK(lv.begin()->second == 1);
  }
  // 2^[(n-1)/2] for each admissible p in {0, 1, 2}
  for (int n = 1; n <= 14; ++n) CHECK(level_total(bounded_system(3), n) == Count(n % 2 ? 1 : 2) << ((n - 1) / 2));
}

TEST_CASE("ballot numbers") {
  CHECK(ballot_count(4, 2) == 3);
  for (int n = 0; n <= 16; ++n) {
    CHECK(ballot_count(n, n) == 1);
    mpz_class sum = 0;
    for (int p = 0; p <= n; ++p) sum += ballot_count(n, p);
    CHECK(sum == brute::binom(n, n / 2));
  }
  CHECK(ballot_count(5, 2) == 0);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}

TEST_CASE("fixed point system grouped by label gives ballot numbers, n <= 16") {
  const auto sys = fixed_point_system();
  for (int n = 0; n <= 16; ++n) {
    const auto lv = level_counts(sys, n);
    for (int p = 0; p <= n; ++p) {
      auto it = lv.find(Label{p});
      const Count c = it == lv.end() ? 0 : it->second;
      REQUIRE(mpz_class(static_cast<unsigned long>(c)) == ballot_count(n, p));
    }
  }
}

TEST_CASE("inversion table") {
  const auto t = dp_inversions(8);
  CHECK(t.at(1, 1, 0) == 1);
  CHECK(t.at(1, 0, 0) == 0);
  CHECK(t.at(1, 1, 1) == 0);
  Count even = 0, odd = 0;
  for (int p = 0; p <= 5; ++p)
    for (long i = 0; i <= 10; ++i) (i % 2 ? odd : even) += t.at(5, p, i);
  CHECK(even == 6);
  CHECK(odd == 4);
  CHECK(t.to_csv().rfind("n,p,i,count\n", 0) == 0);
}

TEST_CASE("inversion table matches the joint distribution, n <= 12") {
  const auto t = dp_inversions(12);
  const auto sys = inversion_system();
  for (int n = 0; n <= 12; ++n) {
    std::map<std::pair<int, long>, Count> seen;
    for (const auto& w : avoiders(n)) ++seen[{brute::fixed_points(w), static_cast<long>(brute::inversions(w))}];
    const auto lv = level_counts(sys, n);
    for (int p = 0; p <= n; ++p)
      for (long i = 0; i <= n * (n - 1) / 2; ++i) {
        auto it = seen.find({p, i});
        const Count want = it == seen.end() ? 0 : it->second;
        REQUIRE(t.at(n, p, i) == want);
        auto jt = lv.find(Label{p, static_cast<int>(i)});
        REQUIRE((jt == lv.end() ? 0 : jt->second) == want);
      }
  }
}

TEST_CASE("rise table") {
  const auto t = dp_rises(3);
  CHECK(dp_rises(0).at(0, 0, 0, 0) == 1);
  for (int r = 0; r < 3; ++r) {
    Count c = 0;
    for (int p = 0; p <= 3; ++p)
      for (int b = 0; b < 2; ++b) c += t.at(3, p, r, b);
    CHECK(c == 1);
  }
  CHECK(t.to_csv().rfind("n,p,r,b,count\n", 0) == 0);
}

TEST_CASE("rise table matches rises and fixed points, n <= 12") {
  const auto t = dp_rises(12);
  const auto sys = rise_system();
  for (int n = 1; n <= 12; ++n) {
    std::map<std::pair<int, int>, Count> seen;
    for (const auto& w : avoiders(n)) ++seen[{brute::fixed_points(w), brute::rises(w)}];
    const auto lv = level_counts(sys, n);
    for (int p = 0; p <= n; ++p)
      for (int r = 0; r < n; ++r) {
        auto it = seen.find({p, r});
        const Count want = it == seen.end() ? 0 : it->second;
        REQUIRE(t.at(n, p, r, 0) + t.at(n, p, r, 1) == want);
        Count sys_count = 0;
        for (int b = 0; b < 2; ++b) {
          auto jt = lv.find(Label{p, r, b});
          sys_count += jt == lv.end() ? 0 : jt->second;
        }
        REQUIRE(sys_count == want);
      }
  }
}

TEST_CASE("bounded system counts I_n(132, 12...k), n <= 12") {
  for (int k = 3; k <= 5; ++k) {
    const auto inc = brute::pat(std::string("123456789").substr(0, k));
    // glue nothing: classical
    brute::Pat cls{inc.letters, std::vector<bool>(k - 1, false)};
    const auto sys = bounded_system(k);
    for (int n = 1; n <= 12; ++n) {
      std::map<int, Count> seen;
      for (const auto& w : avoiders(n))
        if (brute::occurrences(w, cls) == 0) ++seen[brute::fixed_points(w)];
      const auto lv = level_counts(sys, n);
      Count total = 0;
      for (auto [p, c] : seen) {
        total += c;
        auto it = lv.find(Label{p});
        REQUIRE(it != lv.end());
        REQUIRE(it->second == c);
      }
      REQUIRE(level_total(sys, n) == total);
    }
  }
}
