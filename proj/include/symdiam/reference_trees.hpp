#pragma once

#include <string>
#include <vector>

#include "symdiam/abgraph.hpp"

namespace symdiam {

// Hand-transcribed trees with loops omitted. p and l are -1 when the drawing
// gives no exponents, aut is 0 when it gives no automorphism count.
struct ReferenceTree {
  int vcount;
  std::vector<Edge> edges;
  std::vector<int> fixed;
  int p, l;
  int aut;

  ABGraph graph() const { return ABGraph::from_shorthand(vcount, edges); }
};

// Groups: power1 .. power4 (trees whose least admitting power of w0 is 1..4)
// and involution (2-cycle trees of the order-2 family).
const std::vector<ReferenceTree>& reference_trees(const std::string& group);
std::vector<std::string> reference_groups();

}  // namespace symdiam
