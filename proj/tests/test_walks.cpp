#include <map>
#include <numeric>

#include "doctest.h"
#include "symdiam/walks.hpp"

using namespace symdiam;

TEST_SUITE("walks") {
  TEST_CASE("mixing length values") {
    CHECK(mixing_length(6, 1, 0.1) == 1769);
    // 2 n^(2k+1) (k ln n - ln eps), rounded up
    double approx = 2 * std::pow(10.0, 5) * (2 * std::log(10.0) - std::log(0.01));
    CHECK(static_cast<double>(mixing_length(10, 2, 0.01)) == doctest::Approx(std::ceil(approx)));
    CHECK_THROWS(mixing_length(6, 0, 0.1));
    CHECK_THROWS(mixing_length(6, 1, 1.0));
  }

  TEST_CASE("tuple indexing round trip") {
    TupleSpace s(6, 3);
    CHECK(s.size() == 120);
    for (std::uint64_t i = 0; i < s.size(); ++i) CHECK(s.index(s.tuple(i)) == i);
    CHECK(s.tuple(0) == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("exact distributions are stochastic and uniform at the mixing length") {
    WalkSpec spec{{Perm::parse(6, "(1,2)"), Perm::parse(6, "(1,2,3,4,5,6)")}, 1, 1769};
    auto m = exact_walk_matrix(spec);
    REQUIRE(m.size() == 6);
    for (const auto& row : m) {
      CHECK(std::accumulate(row.begin(), row.end(), 0.0) == doctest::Approx(1.0));
      for (double x : row) CHECK(std::abs(x - 1.0 / 6) < 0.1 / 6);
    }
    // one lazy step from point 1: stay 1/2, else (1,2), c or c^-1 with 1/6 each
    spec.length = 1;
    auto d = exact_walk_distribution(spec, {0});
    CHECK(d[0] == doctest::Approx(0.5));
    CHECK(d[1] == doctest::Approx(1.0 / 3));
    CHECK(d[5] == doctest::Approx(1.0 / 6));
  }

  TEST_CASE("pairs walk matches its sparse propagation") {
    WalkSpec spec{{Perm::parse(5, "(1,2)"), Perm::parse(5, "(1,2,3,4,5)")}, 2, 40};
    auto m = exact_walk_matrix(spec);
    TupleSpace s(5, 2);
    for (std::uint64_t x = 0; x < s.size(); x += 7) {
      auto d = exact_walk_distribution(spec, s.tuple(x));
      for (std::uint64_t y = 0; y < s.size(); ++y) CHECK(d[y] == doctest::Approx(m[x][y]).epsilon(1e-9));
    }
  }

  TEST_CASE("realized walks multiply out to r") {
    WalkSpec spec{{Perm::parse(7, "(1,2)"), Perm::parse(7, "(1,2,3,4,5,6,7)")}, 1, 500};
    auto sym = symmetric_generators(spec.gens);
    CHECK(sym.size() == 3);  // (1,2) is its own inverse
    Rng rng(4);
    for (int t = 0; t < 5; ++t) {
      WalkResult w = realize_lazy_walk(spec, rng);
      Perm acc(7);
      for (int f : w.factors) acc = compose(acc, sym[f]);
      CHECK(acc == w.r);
      CHECK(w.factors.size() == w.word_length_used);
      CHECK(w.word_length_used <= 500);
    }
    spec.length = BigInt(1) << 80;
    CHECK_THROWS_AS(realize_lazy_walk(spec, rng), SymbolicLength);
  }

  TEST_CASE("conditioned sampler is g on the anchor and uniform elsewhere") {
    Anchor anchor{{0, 1, 2}, Perm::parse(6, "(1,2,3)")};
    Rng rng(99);
    std::map<std::vector<int>, int> counts;
    const int draws = 12000;
    for (int i = 0; i < draws; ++i) {
      Perm r = sample_conditioned(6, anchor, rng);
      CHECK(r[0] == 1);
      CHECK(r[1] == 2);
      CHECK(r[2] == 0);
      ++counts[{r[3], r[4], r[5]}];
    }
    REQUIRE(counts.size() == 6);
    double expect = draws / 6.0, chi2 = 0;
    for (const auto& [k, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
    CHECK(chi2 < 20.5);  // 5 degrees of freedom, 0.999 quantile
    Anchor bad{{0, 1}, Perm::parse(6, "(1,3)")};
    CHECK_THROWS(sample_conditioned(6, bad, rng));
  }
}
