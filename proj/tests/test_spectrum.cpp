#include <cmath>

#include "doctest.h"
#include "symdiam/reference_trees.hpp"
#include "symdiam/spectrum.hpp"

using namespace symdiam;

TEST_SUITE("spectrum") {
  TEST_CASE("h2 agrees with its factored form") {
    const auto& h2 = reference_poly("h2");
    for (double d : {0.0, 0.1, 0.37, 0.63, 0.9, 1.0}) {
      double closed = (1 - d) * (1 - d) * (1 + 2 * d + 3 * d * d + 4 * std::pow(d, 3) + 5 * std::pow(d, 4) + 6 * std::pow(d, 5));
      CHECK(h2(d) == doctest::Approx(closed).epsilon(1e-12));
    }
  }

  TEST_CASE("f term count and leading terms") {
    const auto& f = reference_poly("f");
    CHECK(f.terms().size() == 19);
    CHECK(f.coefficient(0, 2) == 1);
    CHECK(f.coefficient(1, 2) == 1);
    CHECK(f.coefficient(11, 7) == 15);
    CHECK(f(0) == 1);
    CHECK(reference_poly("h3").terms().size() == 9);
    CHECK_THROWS(reference_poly("g"));
  }

  TEST_CASE("aggregation weights fixed/aut") {
    // one tree with two fixed vertices and Aut 2 contributes weight 1
    Catalog cat;
    for (const auto& t : reference_trees("involution")) cat.push_back(make_entry(adjacency(t.graph()), Word::w0(), 60));
    DeltaPoly got = aggregate_poly(cat);
    CHECK(got == reference_poly("h2"));
  }

  TEST_CASE("threshold root and its error cases") {
    double root = solve_threshold(reference_poly("f"), 0.999);
    CHECK(std::abs(root - 0.632599) < 5e-7);
    DeltaPoly one{{{0, 0}, 1}};
    CHECK_THROWS_AS(solve_threshold(one, 1.0), std::domain_error);
    CHECK_THROWS_AS(solve_threshold(reference_poly("f"), 0.0), std::domain_error);
    // the map crosses the diagonal going down exactly once
    const auto& f = reference_poly("f");
    CHECK(1 - 0.999 * f(root - 1e-4) < root - 1e-4);
    CHECK(1 - 0.999 * f(root + 1e-4) > root + 1e-4);
  }

  TEST_CASE("iterates and monotonicity") {
    auto trace = iterate_map(reference_poly("f"), 0.999, 0.63, 9);
    CHECK(trace.size() == 10);
    CHECK(trace.back() < 0.326);
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] < trace[i - 1]);
    CHECK(monotone_scan(reference_poly("f"), 0.999, 1e-3));
    CHECK_THROWS(iterate_map(reference_poly("f"), 0.999, 1.5, 3));
    CHECK_THROWS(monotone_scan(reference_poly("f"), 0.999, 0.1));
    // a map with a hump is not monotone
    DeltaPoly hump{{{1, 1}, 4}};
    CHECK_FALSE(monotone_scan(hump, 1.0, 1e-3));
  }

  TEST_CASE("arithmetic, comparison and JSON") {
    DeltaPoly a{{{1, 2}, 3}, {{0, 1}, Rational(1, 2)}};
    DeltaPoly b{{{1, 2}, 1}};
    DeltaPoly c = a - b;
    CHECK(c.coefficient(1, 2) == 2);
    CHECK((c + b) == a);
    CHECK((a - a).empty());
    PolyDiff d = compare_polys(b, a);
    CHECK(d.missing.coefficient(1, 2) == 2);
    CHECK(d.missing.coefficient(0, 1) == Rational(1, 2));
    CHECK(d.surplus.empty());
    CHECK(poly_from_json(poly_to_json(a)) == a);
    CHECK(eval_poly(a, 0.5) == doctest::Approx(3 * 0.5 * 0.25 + 0.25));
    CHECK_THROWS(eval_poly(a, 1.5));
  }
}
