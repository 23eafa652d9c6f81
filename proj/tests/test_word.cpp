#include "doctest.h"
#include "symdiam/word.hpp"

using namespace symdiam;

TEST_SUITE("word") {
  TEST_CASE("w0 spelling and parsing") {
    CHECK(Word::w0().to_string() == "AbaBABab");
    CHECK(Word::parse("w0") == Word::w0());
    CHECK(Word::parse("w0^3") == Word::w0().repeat(3));
    CHECK(Word::w0().is_reduced());
    CHECK(Word::w0().is_cyclically_reduced());
    CHECK_FALSE(Word::parse("aAb").is_reduced());
    CHECK_THROWS(Word::parse("abc"));
  }

  TEST_CASE("w0 is the product of two commutators") {
    // [x,y] = x^-1 y^-1 x y, w0 = [a, b^-1][a, b]
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
      Perm a = random_perm(9, rng), b = random_perm(9, rng);
      auto comm = [](const Perm& x, const Perm& y) {
        return compose(compose(compose(inverse(x), inverse(y)), x), y);
      };
      CHECK(evaluate_word(Word::w0(), a, b) == compose(comm(a, inverse(b)), comm(a, b)));
    }
  }

  TEST_CASE("w0^60 expanded letter by letter equals the 60th power") {
    Rng rng(7);
    Perm a = random_perm(40, rng), b = random_perm(40, rng);
    Perm slow = evaluate_word(Word::w0().repeat(60), a, b);
    CHECK(slow == power(evaluate_word(Word::w0(), a, b), 60));
    CHECK(slow == evaluate_power(Word::w0(), 60, a, b));
  }

  TEST_CASE("inverse, swap and rotation") {
    Word w = Word::parse("aabB");
    CHECK(w.inverse().to_string() == "bBAA");
    CHECK(w.swapped().to_string() == "bbaA");
    CHECK(w.rotated(1).to_string() == "abBa");
    Rng rng(2);
    Perm a = random_perm(8, rng), b = random_perm(8, rng);
    Word u = Word::w0();
    CHECK(evaluate_word(u.inverse(), a, b) == inverse(evaluate_word(u, a, b)));
    CHECK(evaluate_word(u.swapped(), a, b) == evaluate_word(u, b, a));
    CHECK(cycle_lengths(evaluate_word(u.rotated(3), a, b)) == cycle_lengths(evaluate_word(u, a, b)));
  }
}
