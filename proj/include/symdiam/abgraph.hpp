#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdiam/word.hpp"

namespace symdiam {

enum Label : int { kAlpha = 0, kBeta = 1 };

struct Edge {
  int src;
  int dst;
  int label;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& x, const Edge& y) {
    if (auto c = x.label <=> y.label; c != 0) return c;
    if (auto c = x.src <=> y.src; c != 0) return c;
    return x.dst <=> y.dst;
  }
};

struct ABGraph {
  int vcount = 0;
  std::vector<Edge> edges;

  // Drawings omit loops: any vertex without a gamma-edge gets a gamma-loop.
  static ABGraph from_shorthand(int vcount, std::vector<Edge> edges);
};

// Per-label partial injections; -1 marks a missing edge, a loop has out[v] == v.
struct Adjacency {
  int n = 0;
  std::array<std::vector<int>, 2> out, in;

  explicit Adjacency(int n_ = 0) : n(n_) {
    for (int g = 0; g < 2; ++g) out[g].assign(n, -1), in[g].assign(n, -1);
  }
  int step(int v, const Letter& l) const { return l.exp > 0 ? out[l.sym][v] : in[l.sym][v]; }
};

// Throws std::invalid_argument when some label has out- or in-degree > 1.
Adjacency adjacency(const ABGraph& g);
ABGraph graph_from(const Adjacency& adj);

std::optional<std::string> validate(const ABGraph& g);

struct GammaComponents {
  std::vector<int> loops;
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> cycles;
  int l() const { return static_cast<int>(loops.size()); }
  int p() const { return static_cast<int>(paths.size() + cycles.size()); }
};

GammaComponents gamma_components(const Adjacency& adj, int label);
GammaComponents gamma_components(const ABGraph& g, int label);

bool is_ab_tree(const Adjacency& adj);
bool is_ab_tree(const ABGraph& g);

// Start vertices from which the trace of w uses existing edges only, returns to
// the start, visits every vertex and traverses every edge. A monochromatic cycle
// of length >= 2 may keep one edge untraversed: a permutation whose cycles all
// have that length closes it anyway.
bool admits_from(const Adjacency& adj, const Word& w, int start);
std::vector<int> admission(const Adjacency& adj, const Word& w);
std::vector<int> admission(const ABGraph& g, const Word& w);

std::string canonical_certificate(const Adjacency& adj);
std::string canonical_certificate(const ABGraph& g);
int automorphism_order(const Adjacency& adj);
int automorphism_order(const ABGraph& g);

std::pair<int, int> delta_exponents(const Adjacency& adj);
std::pair<int, int> delta_exponents(const ABGraph& g);

struct TreeStats {
  int l_alpha = 0, p_alpha = 0, l_beta = 0, p_beta = 0;
  int fixed_count = 0;
  int aut_order = 1;
  int p_total() const { return p_alpha + p_beta; }
  int l_total() const { return l_alpha + l_beta; }
};

TreeStats tree_stats(const Adjacency& adj, const Word& w);
TreeStats tree_stats(const ABGraph& g, const Word& w);

}  // namespace symdiam
