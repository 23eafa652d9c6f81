#include "symdiam/abgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symdiam {

namespace {

const char* label_name(int g) { return g == kAlpha ? "alpha" : "beta"; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

ABGraph ABGraph::from_shorthand(int vcount, std::vector<Edge> edges) {
  std::vector<std::array<bool, 2>> has(vcount, {false, false});
  for (const auto& e : edges) has[e.src][e.label] = has[e.dst][e.label] = true;
  for (int v = 0; v < vcount; ++v)
    for (int g = 0; g < 2; ++g)
      if (!has[v][g]) edges.push_back({v, v, g});
  std::sort(edges.begin(), edges.end());
  return {vcount, std::move(edges)};
}

Adjacency adjacency(const ABGraph& g) {
  Adjacency adj(g.vcount);
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.src >= g.vcount || e.dst < 0 || e.dst >= g.vcount || (e.label != 0 && e.label != 1))
      throw std::invalid_argument("edge outside the graph");
    if (adj.out[e.label][e.src] != -1 || adj.in[e.label][e.dst] != -1)
      throw std::invalid_argument("per-label degree above one");
    adj.out[e.label][e.src] = e.dst;
    adj.in[e.label][e.dst] = e.src;
  }
  return adj;
}

ABGraph graph_from(const Adjacency& adj) {
  ABGraph g{adj.n, {}};
  for (int l = 0; l < 2; ++l)
    for (int v = 0; v < adj.n; ++v)
      if (adj.out[l][v] >= 0) g.edges.push_back({v, adj.out[l][v], l});
  return g;
}

std::optional<std::string> validate(const ABGraph& g) {
  if (g.vcount < 1) return "graph has no vertices";
  std::vector<std::array<int, 2>> outdeg(g.vcount, {0, 0}), indeg(g.vcount, {0, 0});
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.label != kAlpha && e.label != kBeta) return "edge " + std::to_string(i) + " has an unknown label";
    if (e.src < 0 || e.src >= g.vcount || e.dst < 0 || e.dst >= g.vcount)
      return "edge " + std::to_string(i) + " has an endpoint outside 0.." + std::to_string(g.vcount - 1);
    if (++outdeg[e.src][e.label] > 1)
      return std::string("vertex ") + std::to_string(e.src) + " has two outgoing " + label_name(e.label) + "-edges";
    if (++indeg[e.dst][e.label] > 1)
      return std::string("vertex ") + std::to_string(e.dst) + " has two incoming " + label_name(e.label) + "-edges";
  }
  for (int v = 0; v < g.vcount; ++v)
    for (int l = 0; l < 2; ++l)
      if (outdeg[v][l] == 0 && indeg[v][l] == 0)
        return std::string("vertex ") + std::to_string(v) + " has no " + label_name(l) + "-edge";
  UnionFind uf(g.vcount);
  int parts = g.vcount;
  for (const auto& e : g.edges) parts -= uf.unite(e.src, e.dst);
  if (parts != 1) return "graph is not connected";
  return std::nullopt;
}

GammaComponents gamma_components(const Adjacency& adj, int label) {
  const auto& out = adj.out[label];
  const auto& in = adj.in[label];
  GammaComponents gc;
  std::vector<char> seen(adj.n, 0);
  for (int v = 0; v < adj.n; ++v) {
    if (out[v] == v) {
      gc.loops.push_back(v);
      seen[v] = 1;
    }
  }
  for (int v = 0; v < adj.n; ++v) {
    if (seen[v] || in[v] != -1) continue;
    std::vector<int> path;
    for (int x = v; x != -1; x = out[x]) {
      seen[x] = 1;
      path.push_back(x);
    }
    gc.paths.push_back(std::move(path));
  }
  for (int v = 0; v < adj.n; ++v) {
    if (seen[v]) continue;
    std::vector<int> cyc;
    for (int x = v; !seen[x]; x = out[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    gc.cycles.push_back(std::move(cyc));
  }
  return gc;
}

GammaComponents gamma_components(const ABGraph& g, int label) { return gamma_components(adjacency(g), label); }

bool is_ab_tree(const Adjacency& adj) {
  // Bipartite graph B: one node per alpha- and beta-component, one edge per vertex of T.
  std::array<std::vector<int>, 2> comp;
  int nodes = 0;
  int count_sum = 0;
  for (int l = 0; l < 2; ++l) {
    comp[l].assign(adj.n, -1);
    GammaComponents gc = gamma_components(adj, l);
    count_sum += gc.l() + gc.p();
    for (int v : gc.loops) comp[l][v] = nodes++;
    for (const auto& c : gc.paths) {
      for (int v : c) comp[l][v] = nodes;
      ++nodes;
    }
    for (const auto& c : gc.cycles) {
      for (int v : c) comp[l][v] = nodes;
      ++nodes;
    }
  }
  UnionFind uf(nodes);
  bool acyclic = true;
  int parts = nodes;
  for (int v = 0; v < adj.n; ++v) {
    if (uf.unite(comp[0][v], comp[1][v]))
      --parts;
    else
      acyclic = false;
  }
  // the count characterizes trees among connected graphs only
  if (parts != 1) return false;
  bool b_is_tree = acyclic;
  bool count_equality = count_sum == adj.n + 1;
  if (b_is_tree != count_equality)
    throw std::logic_error("component graph and component count disagree on tree-ness");
  return b_is_tree;
}

bool is_ab_tree(const ABGraph& g) { return is_ab_tree(adjacency(g)); }

bool admits_from(const Adjacency& adj, const Word& w, int start) {
  const int n = adj.n;
  std::vector<char> visited(n, 0);
  std::array<std::vector<char>, 2> used;
  used[0].assign(n, 0);
  used[1].assign(n, 0);
  int v = start;
  visited[v] = 1;
  for (const auto& l : w.letters()) {
    int nxt = adj.step(v, l);
    if (nxt < 0) return false;
    used[l.sym][l.exp > 0 ? v : nxt] = 1;
    v = nxt;
    visited[v] = 1;
  }
  if (v != start) return false;
  for (int x = 0; x < n; ++x)
    if (!visited[x]) return false;
  for (int l = 0; l < 2; ++l) {
    const auto& out = adj.out[l];
    for (int x = 0; x < n; ++x) {
      if (out[x] < 0 || used[l][x]) continue;
      if (out[x] == x) return false;
      // untraversed edge: allowed only as the single gap of a cycle
      int missing = 0, y = x, len = 0;
      do {
        if (!used[l][y]) ++missing;
        y = out[y];
        ++len;
      } while (y >= 0 && y != x && len <= n);
      if (y != x || missing > 1) return false;
    }
  }
  return true;
}

std::vector<int> admission(const Adjacency& adj, const Word& w) {
  std::vector<int> fixed;
  for (int v = 0; v < adj.n; ++v)
    if (admits_from(adj, w, v)) fixed.push_back(v);
  return fixed;
}

std::vector<int> admission(const ABGraph& g, const Word& w) { return admission(adjacency(g), w); }

namespace {

// Deterministic breadth-first relabelling from one start vertex. Neighbours are
// read in the order out-alpha, in-alpha, out-beta, in-beta; -1 codes a missing edge.
std::vector<int> traversal_code(const Adjacency& adj, int start, std::vector<int>& label) {
  std::fill(label.begin(), label.end(), -1);
  std::vector<int> order{start};
  label[start] = 0;
  std::vector<int> code;
  code.reserve(4 * adj.n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int l = 0; l < 2; ++l) {
      for (const auto* arr : {&adj.out[l], &adj.in[l]}) {
        int y = (*arr)[x];
        if (y < 0) {
          code.push_back(-1);
          continue;
        }
        if (label[y] < 0) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
        code.push_back(label[y]);
      }
    }
  }
  if (static_cast<int>(order.size()) != adj.n) throw std::invalid_argument("certificate needs a connected graph");
  return code;
}

}  // namespace

std::string canonical_certificate(const Adjacency& adj) {
  std::vector<int> label(adj.n), best;
  for (int s = 0; s < adj.n; ++s) {
    auto code = traversal_code(adj, s, label);
    if (s == 0 || code < best) best = std::move(code);
  }
  // big-endian 16-bit words keep byte order equal to numeric order
  std::string cert;
  auto put = [&cert](int x) {
    unsigned u = static_cast<unsigned>(x + 1);
    cert += static_cast<char>((u >> 8) & 0xff);
    cert += static_cast<char>(u & 0xff);
  };
  put(adj.n);
  for (int c : best) put(c);
  return cert;
}

std::string canonical_certificate(const ABGraph& g) { return canonical_certificate(adjacency(g)); }

int automorphism_order(const Adjacency& adj) {
  // A label-preserving automorphism of a connected graph is fixed by the image
  // of one vertex, so it corresponds to a start vertex with the minimal code.
  std::vector<int> label(adj.n), best;
  int count = 0;
  for (int s = 0; s < adj.n; ++s) {
    auto code = traversal_code(adj, s, label);
    if (s == 0 || code < best) {
      best = std::move(code);
      count = 1;
    } else if (code == best) {
      ++count;
    }
  }
  return count;
}

int automorphism_order(const ABGraph& g) { return automorphism_order(adjacency(g)); }

std::pair<int, int> delta_exponents(const Adjacency& adj) {
  GammaComponents a = gamma_components(adj, kAlpha), b = gamma_components(adj, kBeta);
  return {a.p() + b.p(), a.l() + b.l()};
}

std::pair<int, int> delta_exponents(const ABGraph& g) { return delta_exponents(adjacency(g)); }

TreeStats tree_stats(const Adjacency& adj, const Word& w) {
  TreeStats st;
  GammaComponents a = gamma_components(adj, kAlpha), b = gamma_components(adj, kBeta);
  st.l_alpha = a.l();
  st.p_alpha = a.p();
  st.l_beta = b.l();
  st.p_beta = b.p();
  st.fixed_count = static_cast<int>(admission(adj, w).size());
  st.aut_order = automorphism_order(adj);
  return st;
}

TreeStats tree_stats(const ABGraph& g, const Word& w) { return tree_stats(adjacency(g), w); }

}  // namespace symdiam
