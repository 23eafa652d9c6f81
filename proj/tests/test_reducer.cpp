#include "doctest.h"
#include "symdiam/reducer.hpp"

using namespace symdiam;

namespace {

Perm disjoint_cycles(int n, int count, int len) {
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < count; ++i) {
    std::vector<int> c;
    for (int j = 0; j < len; ++j) c.push_back(len * i + j + 1);
    cycles.push_back(c);
  }
  return Perm::from_cycles(n, cycles);
}

}  // namespace

TEST_SUITE("reducer") {
  TEST_CASE("ledger replays its history") {
    Ledger l;
    l.multiply("x", 5);
    l.add("y", 7);
    l.multiply("z", 3);
    CHECK(l.length_bound() == 36);
    CHECK(l.replay() == 36);
    CHECK(l.history().size() == 3);
  }

  TEST_CASE("case selection") {
    CHECK(select_case(Perm::parse(20, "(1,2,3,4,5,6,7,8)(9,10)")).case_id == CaseId::generic_long_cycle);
    auto five = select_case(Perm::parse(12, "(1,2,3,4,5)(6,7,8,9,10)"));
    CHECK(five.case_id == CaseId::five_cycle);
    CHECK(five.anchor.lambda_points.size() == 7);
    auto two = select_case(Perm::parse(9, "(1,2)(3,4)(5,6)(7,8)"));
    CHECK(two.case_id == CaseId::order2);
    CHECK(two.kappa == 10);
    CHECK(two.lambda == 7);
    CHECK(select_case(Perm::parse(8, "(1,2,3)(4,5,6)")).case_id == CaseId::order3);
    CHECK_THROWS_AS(select_case(Perm::parse(6, "(1,2)(3,4)")), SelectionError);
    CHECK_THROWS_AS(select_case(Perm::parse(6, "(1,2,3,4)")), SelectionError);
    CHECK_THROWS_AS(select_case(Perm(5)), SelectionError);
  }

  TEST_CASE("seven-cycle constructions") {
    auto checks = verify_lemma5();
    CHECK(checks.size() == 27);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name, " ", c.detail);
  }

  TEST_CASE("reduce_step output replays") {
    Rng rng(12);
    Perm a = random_with_support(200, 120, CycleMode::at_least(7), rng);
    auto sel = select_case(a);
    StepResult s = reduce_step(a, sel, 8, rng);
    CHECK(s.a_next == evaluate_power(Word::w0(), 60, a, conjugate(a, s.chosen_r)));
    CHECK(s.a_next == contraction_image(a, s.chosen_r));
    CHECK(s.fixed == fixed_count(s.a_next));
    CHECK(s.has_seven_cycle == has_cycle_of_length(s.a_next, 7));
    for (int x : sel.anchor.lambda_points) CHECK(s.chosen_r[x] == sel.anchor.g[x]);
  }

  TEST_CASE("pipeline reaches the target and its ledger adds up") {
    const int n = 210;
    Perm a0 = disjoint_cycles(n, 18, 7);
    Rng rng(1);
    auto res = run_reduction({a0}, a0, 1.0 / 3, 20, 12, rng);
    CHECK(res.reached_target);
    CHECK(res.delta_trace.back() < 1.0 / 3);
    CHECK(res.ledger.replay() == res.ledger.length_bound());
    BigInt bound = 1;
    for (const auto& s : res.steps) {
      if (s.power_exponent > 1) bound *= BigInt(n) * n;
      auto sel = select_case(s.a_in);
      bound = bound * 480 + 480 * boost::multiprecision::pow(BigInt(n), 2 * (sel.kappa + sel.lambda + 1));
      CHECK(s.a_out == contraction_image(s.a_in, s.r));
    }
    CHECK(bound == res.ledger.length_bound());
    Rng again(1);
    auto res2 = run_reduction({a0}, a0, 1.0 / 3, 20, 12, again, 3);
    CHECK(res2.delta_trace == res.delta_trace);
    CHECK(res2.a_final == res.a_final);
  }

  TEST_CASE("pipeline input checks") {
    Rng rng(1);
    Perm big = disjoint_cycles(70, 9, 7);
    CHECK_THROWS(run_reduction({big}, big, 1.0 / 3, 5, 3, rng));
    CHECK_THROWS(run_reduction({Perm(8)}, disjoint_cycles(7, 1, 2), 0.9, 5, 3, rng));
  }

  TEST_CASE("generation verdicts") {
    Rng rng(5);
    std::string cyc = "(";
    for (int i = 1; i <= 30; ++i) cyc += std::to_string(i) + (i < 30 ? "," : ")");
    auto sym = check_generates({Perm::parse(30, "(1,2)"), Perm::parse(30, cyc)}, rng);
    CHECK(sym.verdict == GroupVerdict::sym);
    CHECK(check_generates({Perm::parse(5, "(1,2,3)")}, rng).verdict == GroupVerdict::proper);
    auto alt = check_generates({Perm::parse(7, "(1,2,3)"), Perm::parse(7, "(3,4,5)"), Perm::parse(7, "(5,6,7)")}, rng);
    CHECK(alt.verdict == GroupVerdict::alt);
    CHECK(alt.order == 2520);
    // a transitive imprimitive group: wreath product of S2 by S4 on 8 points
    auto wreath = check_generates({Perm::parse(8, "(1,2)"), Perm::parse(8, "(1,3,5,7)(2,4,6,8)"),
                                   Perm::parse(8, "(1,3)(2,4)")}, rng);
    CHECK(wreath.verdict == GroupVerdict::proper);
    CHECK(wreath.order == 384);
    auto trimmed = check_generates({Perm::parse(6, "(1,2)"), Perm::parse(6, "(1,2,3,4,5,6)"), Perm::parse(6, "(2,3)"),
                                    Perm::parse(6, "(1,2)(3,4)")}, rng, true);
    CHECK(trimmed.verdict == GroupVerdict::sym);
    CHECK(trimmed.generating_subset.size() <= 5);
    CHECK(trimmed.generating_subset.size() < 4);
  }

  TEST_CASE("generation verdicts above degree 12") {
    Rng rng(9);
    auto cycle = [](int n, int from) {
      std::string c = "(";
      for (int i = from; i <= n; ++i) c += std::to_string(i) + (i < n ? "," : ")");
      return Perm::parse(n, c);
    };
    auto alt = check_generates({Perm::parse(21, "(1,2,3)"), cycle(21, 1)}, rng);
    CHECK(alt.verdict == GroupVerdict::alt);
    // affine group x -> 5x + c mod 23: primitive, contains a 23-cycle, order 506
    std::vector<int> times5(23);
    for (int x = 0; x < 23; ++x) times5[x] = 5 * x % 23 + 1;
    auto affine = check_generates({cycle(23, 1), Perm::from_images(times5)}, rng);
    CHECK(affine.verdict == GroupVerdict::proper);
    CHECK(affine.order == 506);
    // blocks {1,2}, {3,4}, ...
    std::string pairs;
    for (int i = 1; i <= 20; i += 2) pairs += "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
    std::string shift = "(";
    for (int i = 1; i <= 19; i += 2) shift += std::to_string(i) + (i < 19 ? "," : ")");
    shift += "(";
    for (int i = 2; i <= 20; i += 2) shift += std::to_string(i) + (i < 20 ? "," : ")");
    CHECK(check_generates({Perm::parse(20, pairs), Perm::parse(20, shift), Perm::parse(20, "(1,3)(2,4)")}, rng).verdict ==
          GroupVerdict::proper);
    CHECK(check_generates({Perm::parse(20, "(1,2)"), cycle(20, 3)}, rng).verdict == GroupVerdict::proper);
    CHECK(check_generates({Perm::parse(20, "(1,2)"), cycle(20, 2)}, rng).verdict == GroupVerdict::sym);
  }

  TEST_CASE("word symmetry classes") {
    CHECK(balanced_alternating_words(8).size() == 72);
    CHECK(symmetry_class(Word::w0()).size() == 32);
    for (const auto& w : symmetry_class(Word::w0())) CHECK(class_representative(w) == class_representative(Word::w0()));
    CHECK_THROWS(balanced_alternating_words(6));
  }

  TEST_CASE("word search ranking") {
    Rng rng(21);
    Word w0 = Word::w0();
    auto res = word_search(4, 8, 700, 0.6, 60, rng, 2, {w0, w0.repeat(2)});
    // the square keeps every short cycle short, so it can never lose to w0
    std::size_t i0 = 0, i2 = 0;
    for (std::size_t i = 0; i < res.ranking.size(); ++i) {
      if (res.ranking[i].word == class_representative(w0)) i0 = i;
      if (res.ranking[i].word == class_representative(w0.repeat(2))) i2 = i;
    }
    for (std::size_t s = 0; s < res.counts[i0].size(); ++s) CHECK(res.counts[i2][s] >= res.counts[i0][s]);
    // the single commutator trails w0
    for (std::size_t i = 0; i < res.ranking.size(); ++i)
      if (res.ranking[i].word == class_representative(Word::parse("abAB"))) CHECK(i > i0);
    Rng r2(0);
    CHECK_THROWS(word_search(4, 8, 100, 0.6, 0, r2));
    CHECK(paired_std_error({1, 2, 3}, {1, 2, 3}) == 0);
  }
}
