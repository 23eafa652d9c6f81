#include "symdiam/treenum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symdiam/parallel.hpp"

namespace symdiam {

void EnumConstraints::check() const {
  if (kappa < 1) throw std::invalid_argument("kappa must be at least 1");
  if (max_path < 1) throw std::invalid_argument("max_path must be at least 1");
  if (cycle_mode == cycles_exactly && cycle_len < 2) throw std::invalid_argument("cycle length must be at least 2");
  if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  if (max_min_power < 0) throw std::invalid_argument("max_min_power must be nonnegative");
}

std::string EnumConstraints::describe() const {
  std::ostringstream os;
  os << "kappa=" << kappa << " max_path=" << max_path << " cycles=";
  if (cycle_mode == forbid_cycles)
    os << "none";
  else
    os << cycle_len;
  os << " power=" << max_power;
  if (max_min_power) os << " max_min_power=" << max_min_power;
  return os.str();
}

int min_admitting_power(const Adjacency& adj, const Word& base, int max_power) {
  for (int e = 1; e <= max_power; ++e) {
    if (max_power % e) continue;
    Word w = base.repeat(e);
    for (int v = 0; v < adj.n; ++v)
      if (admits_from(adj, w, v)) return e;
  }
  return 0;
}

CatalogEntry make_entry(const Adjacency& adj, const Word& base, int max_power) {
  CatalogEntry e;
  e.graph = graph_from(adj);
  Word full = base.repeat(max_power);
  e.stats = tree_stats(adj, full);
  e.fixed = admission(adj, full);
  e.min_power = min_admitting_power(adj, base, max_power);
  e.certificate = canonical_certificate(adj);
  return e;
}

bool satisfies(const Adjacency& adj, const EnumConstraints& c) {
  if (adj.n > c.kappa) return false;
  for (int l = 0; l < 2; ++l) {
    GammaComponents gc = gamma_components(adj, l);
    for (const auto& p : gc.paths)
      if (static_cast<int>(p.size()) > c.max_path) return false;
    for (const auto& cyc : gc.cycles) {
      if (c.cycle_mode == EnumConstraints::forbid_cycles) return false;
      if (static_cast<int>(cyc.size()) != c.cycle_len) return false;
    }
  }
  return true;
}

bool satisfies(const CatalogEntry& e, const EnumConstraints& c) {
  if (!satisfies(adjacency(e.graph), c)) return false;
  if (e.min_power == 0 || c.max_power % e.min_power) return false;
  return c.max_min_power == 0 || e.min_power <= c.max_min_power;
}

namespace {

struct SearchState {
  Adjacency adj;
  int nv = 1;
  int v = 0;
  int pos = 0;
  int rep = 0;
};

// Traces the base word from vertex 0 and grows the graph only where the trace
// needs an edge that does not exist yet. An edge between two existing vertices
// of different monochromatic components would close a bichromatic undirected
// cycle, so the only branches are a loop, a fresh vertex, or closing a cycle of
// the prescribed length at the moment its last vertex appears.
class Search {
 public:
  Search(const Word& base, const EnumConstraints& c) : base_(base), c_(c), full_(base.repeat(c.max_power)) {}

  void run(SearchState s, int depth) { descend(s, depth); }

  int split_depth = -1;
  std::vector<SearchState> frontier;
  std::map<std::string, Adjacency> found;

 private:
  void emit(const SearchState& s) {
    if (c_.max_power % s.rep) return;
    Adjacency adj(s.nv);
    for (int l = 0; l < 2; ++l) {
      for (int x = 0; x < s.nv; ++x) {
        adj.out[l][x] = s.adj.out[l][x];
        adj.in[l][x] = s.adj.in[l][x];
        if (adj.out[l][x] < 0 && adj.in[l][x] < 0) return;  // an implied loop would never be traversed
      }
    }
    if (!satisfies(adj, c_)) return;
    if (!admits_from(adj, full_, 0)) return;
    std::string cert = canonical_certificate(adj);
    if (found.count(cert)) return;
    if (!is_ab_tree(adj)) throw std::logic_error("search produced a graph that is not a tree");
    found.emplace(std::move(cert), std::move(adj));
  }

  void descend(SearchState& s, int depth) {
    const int L = static_cast<int>(base_.size());
    int v = s.v, pos = s.pos, rep = s.rep;
    for (;;) {
      if (pos == L) {
        ++rep;
        pos = 0;
        if (v == 0) {
          int saved_rep = s.rep;
          s.rep = rep;
          emit(s);
          s.rep = saved_rep;
          return;
        }
        if (rep >= c_.max_power) return;
      }
      int nxt = s.adj.step(v, base_[pos]);
      if (nxt < 0) break;
      v = nxt;
      ++pos;
    }
    if (depth == split_depth) {
      SearchState copy = s;
      copy.v = v, copy.pos = pos, copy.rep = rep;
      frontier.push_back(std::move(copy));
      return;
    }
    const Letter& l = base_[pos];
    auto& fwd = l.exp > 0 ? s.adj.out[l.sym] : s.adj.in[l.sym];
    auto& bwd = l.exp > 0 ? s.adj.in[l.sym] : s.adj.out[l.sym];
    const int saved_v = s.v, saved_pos = s.pos, saved_rep = s.rep;
    auto go = [&](int at) {
      s.v = at, s.pos = pos + 1, s.rep = rep;
      descend(s, depth + 1);
      s.v = saved_v, s.pos = saved_pos, s.rep = saved_rep;
    };

    if (bwd[v] < 0) {
      fwd[v] = bwd[v] = v;
      go(v);
      fwd[v] = bwd[v] = -1;
    }

    if (s.nv < c_.kappa) {
      int start = v, count = 1;
      while (bwd[start] >= 0) start = bwd[start], ++count;
      const int grown = count + 1;
      const bool cycles = c_.cycle_mode == EnumConstraints::cycles_exactly;
      if (grown <= c_.max_path || (cycles && grown <= c_.cycle_len)) {
        const int w = s.nv++;
        fwd[v] = w;
        bwd[w] = v;
        bool may_stay_open = !cycles || grown != c_.cycle_len || grown <= c_.max_path;
        bool may_close = cycles && grown == c_.cycle_len;
        if (may_stay_open) go(w);
        if (may_close) {
          fwd[w] = start;
          bwd[start] = w;
          go(w);
          fwd[w] = bwd[start] = -1;
        }
        fwd[v] = bwd[w] = -1;
        --s.nv;
      }
    }
  }

  const Word& base_;
  const EnumConstraints& c_;
  Word full_;
};

SearchState initial_state(int kappa) {
  SearchState s;
  s.adj = Adjacency(kappa);
  return s;
}

}  // namespace

Catalog enumerate_admitting_trees(const Word& base, const EnumConstraints& c, unsigned workers) {
  c.check();
  if (base.empty() || !base.is_reduced()) throw std::invalid_argument("base word must be nonempty and reduced");

  // Fixed split depth, so the set of subtrees does not depend on the worker count.
  Search top(base, c);
  top.split_depth = 8;
  top.run(initial_state(c.kappa), 0);

  std::vector<std::map<std::string, Adjacency>> parts(top.frontier.size());
  parallel_for(top.frontier.size(), workers, [&](std::size_t i) {
    Search sub(base, c);
    SearchState s = top.frontier[i];
    sub.run(s, 9);
    parts[i] = std::move(sub.found);
  });
  std::map<std::string, Adjacency> all = std::move(top.found);
  for (auto& p : parts) all.merge(p);

  std::vector<std::pair<std::string, Adjacency>> items(all.begin(), all.end());
  Catalog out(items.size());
  parallel_for(items.size(), workers, [&](std::size_t i) { out[i] = make_entry(items[i].second, base, c.max_power); });
  Catalog kept;
  for (auto& e : out)
    if (c.max_min_power == 0 || e.min_power <= c.max_min_power) kept.push_back(std::move(e));
  return kept;
}

namespace {

// All partial injections on n points in which every point meets at least one edge.
void covering_injections(int n, int x, std::vector<int>& out, std::vector<char>& hit, std::vector<std::vector<int>>& acc) {
  if (x == n) {
    std::vector<char> touched(n, 0);
    for (int i = 0; i < n; ++i)
      if (out[i] >= 0) touched[i] = touched[out[i]] = 1;
    for (int i = 0; i < n; ++i)
      if (!touched[i]) return;
    acc.push_back(out);
    return;
  }
  out[x] = -1;
  covering_injections(n, x + 1, out, hit, acc);
  for (int y = 0; y < n; ++y) {
    if (hit[y]) continue;
    hit[y] = 1;
    out[x] = y;
    covering_injections(n, x + 1, out, hit, acc);
    hit[y] = 0;
  }
  out[x] = -1;
}

}  // namespace

Catalog brute_force_oracle(const Word& base, int max_vertices, int max_power) {
  if (max_vertices > 5) throw std::invalid_argument("brute-force oracle is limited to 5 vertices");
  std::map<std::string, CatalogEntry> found;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::vector<int>> maps;
    std::vector<int> out(n, -1);
    std::vector<char> hit(n, 0);
    covering_injections(n, 0, out, hit, maps);
    for (const auto& ma : maps) {
      for (const auto& mb : maps) {
        Adjacency adj(n);
        adj.out[0] = ma;
        adj.out[1] = mb;
        for (int l = 0; l < 2; ++l)
          for (int x = 0; x < n; ++x)
            if (adj.out[l][x] >= 0) adj.in[l][adj.out[l][x]] = x;
        ABGraph g = graph_from(adj);
        if (validate(g)) continue;
        if (!is_ab_tree(adj)) continue;
        if (min_admitting_power(adj, base, max_power) == 0) continue;
        std::string cert = canonical_certificate(adj);
        if (found.count(cert)) continue;
        found.emplace(cert, make_entry(adj, base, max_power));
      }
    }
  }
  Catalog cat;
  for (auto& [k, e] : found) cat.push_back(std::move(e));
  return cat;
}

Catalog restrict(const Catalog& cat, const EnumConstraints& c) {
  Catalog out;
  for (const auto& e : cat)
    if (satisfies(e, c)) out.push_back(e);
  return out;
}

Catalog with_min_power_dividing(const Catalog& cat, int e) {
  Catalog out;
  for (const auto& x : cat)
    if (x.min_power && e % x.min_power == 0) out.push_back(x);
  return out;
}

std::vector<std::string> certificates(const Catalog& cat) {
  std::vector<std::string> out;
  for (const auto& e : cat) out.push_back(e.certificate);
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::ordered_json entry_to_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["vcount"] = e.graph.vcount;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& ed : e.graph.edges) edges.push_back({ed.src, ed.dst, ed.label == kAlpha ? "a" : "b"});
  j["edges"] = edges;
  j["fixed"] = e.fixed;
  j["aut"] = e.stats.aut_order;
  j["p"] = e.stats.p_total();
  j["l"] = e.stats.l_total();
  j["min_power"] = e.min_power;
  return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.graph.vcount = j.at("vcount").get<int>();
  for (const auto& ed : j.at("edges")) {
    std::string lab = ed.at(2).get<std::string>();
    if (lab != "a" && lab != "b") throw std::invalid_argument("edge label must be \"a\" or \"b\"");
    e.graph.edges.push_back({ed.at(0).get<int>(), ed.at(1).get<int>(), lab == "a" ? kAlpha : kBeta});
  }
  if (auto bad = validate(e.graph)) throw std::invalid_argument("catalog entry: " + *bad);
  Adjacency adj = adjacency(e.graph);
  GammaComponents a = gamma_components(adj, kAlpha), b = gamma_components(adj, kBeta);
  e.stats.l_alpha = a.l();
  e.stats.p_alpha = a.p();
  e.stats.l_beta = b.l();
  e.stats.p_beta = b.p();
  e.fixed = j.at("fixed").get<std::vector<int>>();
  e.stats.fixed_count = static_cast<int>(e.fixed.size());
  e.stats.aut_order = j.at("aut").get<int>();
  e.min_power = j.at("min_power").get<int>();
  if (j.at("p").get<int>() != e.stats.p_total() || j.at("l").get<int>() != e.stats.l_total())
    throw std::invalid_argument("catalog entry exponents do not match its graph");
  e.certificate = canonical_certificate(adj);
  return e;
}

std::string catalog_to_text(const Catalog& cat) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < cat.size(); ++i) {
    s += "  " + entry_to_json(cat[i]).dump();
    s += i + 1 < cat.size() ? ",\n" : "\n";
  }
  s += "]\n";
  return s;
}

Catalog catalog_from_text(const std::string& text) {
  Catalog cat;
  for (const auto& j : nlohmann::json::parse(text)) cat.push_back(entry_from_json(j));
  return cat;
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (unsigned char c : bytes) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

}  // namespace symdiam
