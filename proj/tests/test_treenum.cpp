#include <set>

#include "doctest.h"
#include "symdiam/reference_trees.hpp"
#include "symdiam/spectrum.hpp"
#include "symdiam/treenum.hpp"

using namespace symdiam;

namespace {

EnumConstraints make(int kappa, int max_path, int cycle_len = 0, int power = 60, int max_min_power = 0) {
  EnumConstraints c;
  c.kappa = kappa;
  c.max_path = max_path;
  c.cycle_mode = cycle_len ? EnumConstraints::cycles_exactly : EnumConstraints::forbid_cycles;
  c.cycle_len = cycle_len;
  c.max_power = power;
  c.max_min_power = max_min_power;
  return c;
}

std::set<std::string> certs(const Catalog& cat) {
  auto v = certificates(cat);
  return {v.begin(), v.end()};
}

std::set<std::string> drawn(const std::string& group) {
  std::set<std::string> s;
  for (const auto& t : reference_trees(group)) s.insert(canonical_certificate(t.graph()));
  return s;
}

const Catalog& f_catalog() {
  static const Catalog cat = enumerate_admitting_trees(Word::w0(), make(17, 5, 0, 60, 5), 2);
  return cat;
}

}  // namespace

TEST_SUITE("treenum") {
  TEST_CASE("kappa 1 gives the single-vertex tree") {
    Catalog cat = enumerate_admitting_trees(Word::w0(), make(1, 1));
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].graph.vcount == 1);
    CHECK(cat[0].min_power == 1);
  }

  TEST_CASE("oracle on small vertex counts matches the first table") {
    Catalog three = restrict(brute_force_oracle(Word::w0(), 3, 1), make(3, 3));
    CHECK(three.size() == 3);
    Catalog four = restrict(brute_force_oracle(Word::w0(), 4, 1), make(4, 4));
    CHECK(certs(four) == drawn("power1"));
    CHECK(brute_force_oracle(Word::parse("ab"), 1, 1).size() == 1);
  }

  TEST_CASE("power layers of the f catalog match the drawn tables") {
    const Catalog& cat = f_catalog();
    CHECK(cat.size() == 52);
    for (int k = 1; k <= 4; ++k) {
      // min_power dividing k: layer 4 also holds layers 1 and 2, not 3
      std::set<std::string> want;
      for (int j = 1; j <= k; ++j)
        if (k % j == 0) {
          auto g = drawn("power" + std::to_string(j));
          want.insert(g.begin(), g.end());
        }
      CHECK(certs(with_min_power_dividing(cat, k)) == want);
    }
    CHECK(reference_trees("power4").size() == 10);
  }

  TEST_CASE("every catalog entry is a valid admitting tree") {
    const Word w60 = Word::w0().repeat(60);
    for (const auto& e : f_catalog()) {
      CHECK_FALSE(validate(e.graph).has_value());
      CHECK(is_ab_tree(e.graph));
      CHECK(60 % e.min_power == 0);
      // the recorded fixed set survives full 60-fold tracing
      CHECK(admission(e.graph, w60) == e.fixed);
      CHECK(admission(e.graph, Word::w0().repeat(e.min_power)) == e.fixed);
      CHECK(e.stats.p_total() + e.stats.l_total() == e.graph.vcount + 1);
    }
  }

  TEST_CASE("enumerator matches the oracle on other bases") {
    for (std::string b : {"abAB", "aabb", "abaB"}) {
      Word base = Word::parse(b);
      for (int power : {1, 2, 4}) {
        Catalog oracle = brute_force_oracle(base, 5, power);
        for (auto c : {make(5, 5, 0, power), make(5, 2, 2, power), make(5, 3, 3, power), make(4, 1, 0, power)})
          CHECK_MESSAGE(certs(enumerate_admitting_trees(base, c)) == certs(restrict(oracle, c)), b, " ", c.describe());
      }
    }
  }

  TEST_CASE("results do not depend on the worker count") {
    auto c = make(16, 4);
    CHECK(catalog_to_text(enumerate_admitting_trees(Word::w0(), c, 1)) ==
          catalog_to_text(enumerate_admitting_trees(Word::w0(), c, 4)));
  }

  TEST_CASE("catalog JSON round trip") {
    const Catalog& cat = f_catalog();
    Catalog back = catalog_from_text(catalog_to_text(cat));
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(back[i].certificate == cat[i].certificate);
      CHECK(back[i].fixed == cat[i].fixed);
      CHECK(back[i].stats.aut_order == cat[i].stats.aut_order);
    }
    CHECK(aggregate_poly(back) == aggregate_poly(cat));
    CHECK_THROWS(catalog_from_text(R"([{"vcount":1,"edges":[[0,0,"c"]],"fixed":[0],"aut":1,"p":0,"l":2,"min_power":1}])"));
  }

  TEST_CASE("constraint checks") {
    CHECK_THROWS(make(0, 1).check());
    CHECK_THROWS(make(3, 1, 1).check());
    CHECK_NOTHROW(make(3, 1, 2).check());
  }
}
