#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "symdiam/abgraph.hpp"

using namespace symdiam;

namespace {

// Oracle: some edge subset forms an undirected cycle using both labels.
bool has_bichromatic_cycle(const ABGraph& g) {
  std::vector<Edge> es;
  for (const auto& e : g.edges)
    if (e.src != e.dst) es.push_back(e);
  const int m = static_cast<int>(es.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.vcount, 0);
    bool labels[2] = {false, false};
    std::vector<int> parent(g.vcount);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int used = 0, comps = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        ++deg[es[i].src], ++deg[es[i].dst];
        labels[es[i].label] = true;
        parent[find(es[i].src)] = find(es[i].dst);
      }
    bool cycle = true;
    for (int v = 0; v < g.vcount; ++v) {
      if (deg[v] == 0) continue;
      ++used;
      if (deg[v] != 2) cycle = false;
      if (find(v) == v) ++comps;
    }
    if (cycle && used && comps == 1 && labels[0] && labels[1]) return true;
  }
  return false;
}

// partial injections per label, loops filled in where a label is missing
ABGraph random_graph(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (int l = 0; l < 2; ++l) {
    std::vector<int> dst(n);
    std::iota(dst.begin(), dst.end(), 0);
    rng.shuffle(dst);
    for (int v = 0; v < n; ++v)
      if (rng.below(3) && dst[v] != v) edges.push_back({v, dst[v], l});
  }
  return ABGraph::from_shorthand(n, edges);
}

ABGraph relabel(const ABGraph& g, const std::vector<int>& pi) {
  ABGraph h;
  h.vcount = g.vcount;
  for (const auto& e : g.edges) h.edges.push_back({pi[e.src], pi[e.dst], e.label});
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

int brute_automorphisms(const ABGraph& g) {
  std::vector<int> pi(g.vcount);
  std::iota(pi.begin(), pi.end(), 0);
  auto sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  int count = 0;
  do count += relabel(g, pi).edges == sorted;
  while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

}  // namespace

TEST_SUITE("abgraph") {
  TEST_CASE("shorthand adds the implied loops") {
    ABGraph g = ABGraph::from_shorthand(2, {{0, 1, kAlpha}});
    CHECK(g.edges.size() == 3);
    CHECK_FALSE(validate(g).has_value());
    auto s = tree_stats(g, Word::w0());
    CHECK(s.l_beta == 2);
    CHECK(s.p_alpha == 1);
    CHECK(s.p_total() + s.l_total() == g.vcount + 1);
  }

  TEST_CASE("validate rejects degree and coverage violations") {
    ABGraph two_out{2, {{0, 1, kAlpha}, {0, 0, kAlpha}, {0, 0, kBeta}, {1, 1, kBeta}}};
    CHECK(validate(two_out).has_value());
    ABGraph no_beta{1, {{0, 0, kAlpha}}};
    CHECK(validate(no_beta).has_value());
    CHECK_THROWS(adjacency(two_out));
  }

  TEST_CASE("tree test agrees with the cycle-colour oracle") {
    Rng rng(17);
    int trees = 0;
    for (int t = 0; t < 3000; ++t) {
      ABGraph g = random_graph(2 + static_cast<int>(rng.below(4)), rng);
      // only connected graphs count as trees
      std::vector<int> parent(g.vcount);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (const auto& e : g.edges) parent[find(e.src)] = find(e.dst);
      int comps = 0;
      for (int v = 0; v < g.vcount; ++v) comps += find(v) == v;
      bool expect = comps == 1 && !has_bichromatic_cycle(g);
      CHECK(is_ab_tree(g) == expect);
      trees += expect;
    }
    CHECK(trees > 100);
  }

  TEST_CASE("certificate ignores vertex names and automorphisms match brute force") {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
      ABGraph g = random_graph(2 + static_cast<int>(rng.below(4)), rng);
      std::vector<int> pi(g.vcount);
      std::iota(pi.begin(), pi.end(), 0);
      rng.shuffle(pi);
      ABGraph h = relabel(g, pi);
      if (!is_ab_tree(g)) continue;
      CHECK(canonical_certificate(g) == canonical_certificate(h));
      CHECK(automorphism_order(g) == brute_automorphisms(g));
    }
  }

  TEST_CASE("admission of single-vertex and path trees") {
    ABGraph one = ABGraph::from_shorthand(1, {});
    CHECK(admission(one, Word::w0()) == std::vector<int>{0});
    CHECK(admission(one, Word::parse("ab")) == std::vector<int>{0});
    // an alpha edge with beta loops: w0 returns to the head only
    ABGraph two = ABGraph::from_shorthand(2, {{0, 1, kAlpha}});
    CHECK(admission(two, Word::w0()) == std::vector<int>{1});
    // a word that never uses beta cannot traverse the beta loops
    CHECK(admission(two, Word::parse("aA")).empty());
  }

  TEST_CASE("alpha 2-cycle is admitted by w0 under full coverage") {
    ABGraph g = ABGraph::from_shorthand(2, {{0, 1, kAlpha}, {1, 0, kAlpha}});
    CHECK(is_ab_tree(g));
    CHECK(admission(g, Word::w0()).size() == 2);
    CHECK(automorphism_order(g) == 2);
  }
}
