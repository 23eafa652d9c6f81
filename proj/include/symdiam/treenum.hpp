#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symdiam/abgraph.hpp"

namespace symdiam {

struct EnumConstraints {
  enum CycleKind { forbid_cycles, cycles_exactly };

  int kappa = 16;
  int max_path = 4;  // vertices per monochromatic path
  CycleKind cycle_mode = forbid_cycles;
  int cycle_len = 0;
  int max_power = 60;
  int max_min_power = 0;  // 0: no bound beyond max_power

  void check() const;
  std::string describe() const;
};

struct CatalogEntry {
  ABGraph graph;
  TreeStats stats;
  int min_power = 0;
  std::vector<int> fixed;
  std::string certificate;
};

using Catalog = std::vector<CatalogEntry>;

// Least e dividing max_power with admission(base^e) nonempty, 0 if none.
int min_admitting_power(const Adjacency& adj, const Word& base, int max_power);
CatalogEntry make_entry(const Adjacency& adj, const Word& base, int max_power);
bool satisfies(const Adjacency& adj, const EnumConstraints& c);
bool satisfies(const CatalogEntry& e, const EnumConstraints& c);

Catalog enumerate_admitting_trees(const Word& base, const EnumConstraints& c, unsigned workers = 1);

// Every valid graph on at most max_vertices vertices, filtered by tree-ness and
// admission of base^e for some e dividing max_power.
Catalog brute_force_oracle(const Word& base, int max_vertices, int max_power);

Catalog restrict(const Catalog& cat, const EnumConstraints& c);
Catalog with_min_power_dividing(const Catalog& cat, int e);
std::vector<std::string> certificates(const Catalog& cat);

nlohmann::ordered_json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);
std::string catalog_to_text(const Catalog& cat);
Catalog catalog_from_text(const std::string& text);
std::string hex(const std::string& bytes);

}  // namespace symdiam
