#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdiam/abgraph.hpp"
#include "symdiam/perm.hpp"

namespace symdiam {

std::string artifact_version();

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  nlohmann::ordered_json details;
};

nlohmann::ordered_json to_json(const CriterionReport& r);

// Criteria 1..11. Results depend on the seed only, never on the worker count.
CriterionReport run_criterion(int id, std::uint64_t seed, unsigned workers);
std::vector<CriterionReport> run_all_criteria(std::uint64_t seed, unsigned workers);

// The full report written by verify-all.
nlohmann::ordered_json acceptance_report(std::uint64_t seed, unsigned workers);

// Criterion 12: the report text for one worker and for eight workers.
CriterionReport determinism_check(std::uint64_t seed);

// Every injection of the vertices into {0..n-1} under which alpha-edges follow a
// and beta-edges follow b, found by plain backtracking over all points.
std::vector<std::vector<int>> hosted_injections(const ABGraph& g, const Perm& a, const Perm& b);

}  // namespace symdiam
