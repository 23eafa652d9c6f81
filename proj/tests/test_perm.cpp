#include <map>
#include <numeric>

#include "doctest.h"
#include "symdiam/perm.hpp"
#include "symdiam/word.hpp"

using namespace symdiam;

namespace {

// all partitions of s with parts >= lo, as sorted vectors
void partitions(int s, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (s == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = lo; p <= s; ++p) {
    cur.push_back(p);
    partitions(s - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("right action conventions") {
    Perm p = Perm::parse(3, "(1,2)"), q = Perm::parse(3, "(2,3)");
    // apply p first, then q: 1 -> 2 -> 3
    CHECK(compose(p, q)[0] == 2);
    CHECK(compose(p, inverse(p)).is_identity());
    Perm a = Perm::parse(5, "(1,2,3)"), r = Perm::parse(5, "(1,4)(2,5)");
    CHECK(conjugate(a, r) == compose(compose(inverse(r), a), r));
    CHECK(conjugate(a, r) == Perm::parse(5, "(4,5,3)"));
  }

  TEST_CASE("parse and print round trip") {
    for (std::string s : {"(1,2)(3,4,5)", "(1,7,3)", "()"}) CHECK(Perm::parse(7, s).to_string() == s);
    CHECK_THROWS(Perm::parse(3, "(1,4)"));
    CHECK_THROWS(Perm::parse(3, "(1,2,1)"));
    Perm p = Perm::parse(9, "(1,5,9)(2,3)");
    CHECK(perm_from_json(to_json(p)) == p);
  }

  TEST_CASE("cycle data and order") {
    Perm p = Perm::parse(12, "(1,2)(3,4,5)(6,7,8,9,10)");
    CHECK(cycle_lengths(p) == std::vector<int>{2, 3, 5});
    CHECK(support_size(p) == 10);
    CHECK(fixed_count(p) == 2);
    CHECK(order(p) == 30);
    CHECK(has_cycle_of_length(p, 5));
    CHECK_FALSE(has_cycle_of_length(p, 4));
    CHECK(points_in_short_cycles(p, 3) == 5);  // fixed points are not counted
    CHECK(is_even(Perm::parse(4, "(1,2,3)")));
    CHECK_FALSE(is_even(Perm::parse(4, "(1,2,3,4)")));
  }

  TEST_CASE("power agrees with repeated composition") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      Perm p = random_perm(15, rng);
      Perm acc(15);
      for (int k = 0; k <= 13; ++k) {
        CHECK(power(p, k) == acc);
        acc = compose(acc, p);
      }
      CHECK(power(p, -3) == inverse(power(p, 3)));
    }
  }

  TEST_CASE("power_coprime6 strips the 2- and 3-parts of the order") {
    Perm p = Perm::parse(20, "(1,2)(3,4,5,6,7,8,9)(10,11,12)(13,14,15,16)");
    auto [q, e] = power_coprime6(p);
    CHECK(e == 12);
    CHECK(q == power(p, 12));
    CHECK(order(q) == 7);
    CHECK_THROWS_AS(power_coprime6(Perm::parse(10, "(1,2)(3,4,5,6,7,8)")), SpecialCaseOrder);
  }

  TEST_CASE("random_with_support respects support and cycle bounds") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      Perm p = random_with_support(300, 180, CycleMode::at_least(7), rng);
      CHECK(support_size(p) == 180);
      for (int l : cycle_lengths(p)) CHECK(l >= 7);
      Perm q = random_with_support(100, 63, CycleMode::exactly(7), rng);
      CHECK(cycle_lengths(q) == std::vector<int>(9, 7));
    }
    CHECK_FALSE(support_feasible(10, CycleMode::exactly(7)));
    CHECK_THROWS(random_with_support(10, 8, CycleMode::exactly(3), rng));
  }

  TEST_CASE("cycle types are uniform over feasible partitions") {
    // s = 12, parts >= 3: the oracle lists the partitions directly
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions(12, 3, cur, all);
    std::map<std::vector<int>, int> counts;
    for (const auto& p : all) counts[p] = 0;
    Rng rng(2024);
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
      auto part = random_partition(12, CycleMode::at_least(3), rng);
      std::sort(part.begin(), part.end());
      REQUIRE(counts.count(part));
      ++counts[part];
    }
    double expect = static_cast<double>(draws) / all.size(), chi2 = 0;
    for (const auto& [p, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
    // 9 partitions, 8 degrees of freedom: 0.999 quantile is 26.1
    CHECK(all.size() == 9);
    CHECK(chi2 < 26.1);
  }

  TEST_CASE("large supports use the rejection sampler") {
    Rng rng(3);
    auto part = random_partition(5000, CycleMode::at_least(7), rng);
    CHECK(std::accumulate(part.begin(), part.end(), 0) == 5000);
    for (int l : part) CHECK(l >= 7);
  }
}
