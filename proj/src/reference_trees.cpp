#include "symdiam/reference_trees.hpp"

#include <stdexcept>

namespace symdiam {

namespace {
constexpr int A = kAlpha, B = kBeta;

const std::vector<ReferenceTree>& power1() {
  static const std::vector<ReferenceTree> trees = {
      {1, {}, {0}, -1, -1, 0},
      {2, {{0, 1, A}}, {1}, 1, 2, 0},
      {3, {{1, 2, B}, {2, 0, B}}, {2}, 1, 3, 0},
      {4, {{0, 3, A}, {2, 1, A}, {2, 0, B}}, {1}, 3, 2, 0},
      {4, {{2, 0, A}, {1, 3, A}, {3, 0, B}}, {0}, 3, 2, 0},
  };
  return trees;
}

const std::vector<ReferenceTree>& power2() {
  static const std::vector<ReferenceTree> trees = {
      {5, {{4, 0, B}, {1, 2, A}, {2, 3, A}, {2, 4, B}}, {3, 4}, 2, 4, 0},
      {5, {{4, 3, B}, {1, 3, A}, {3, 0, A}, {2, 4, B}}, {3, 4}, 2, 4, 0},
  };
  return trees;
}

const std::vector<ReferenceTree>& power3() {
  static const std::vector<ReferenceTree> trees = {
      {7, {{3, 6, B}, {1, 3, A}, {6, 4, B}, {4, 0, A}, {3, 5, A}, {2, 4, A}}, {4, 5, 6}, 3, 5, 0},
      {10, {{1, 0, A}, {2, 3, A}, {5, 9, A}, {4, 7, A}, {3, 9, B}, {6, 5, B}, {9, 7, B}, {5, 1, B}, {6, 8, A}}, {7, 8, 9}, 7, 4, 0},
      {10, {{4, 8, B}, {5, 7, A}, {3, 8, A}, {3, 0, B}, {9, 3, B}, {5, 1, B}, {6, 9, B}, {1, 3, A}, {2, 4, A}}, {7, 8, 9}, 6, 5, 0},
      {10, {{6, 2, B}, {5, 8, A}, {9, 3, A}, {3, 8, B}, {2, 1, A}, {7, 0, B}, {9, 7, B}, {6, 9, A}, {4, 9, B}}, {7, 8, 9}, 6, 5, 0},
  };
  return trees;
}

const std::vector<ReferenceTree>& power4() {
  static const std::vector<ReferenceTree> trees = {
      {11, {{10, 8, A}, {3, 8, B}, {4, 7, A}, {8, 7, B}, {2, 0, A}, {5, 10, A}, {10, 2, B}, {9, 10, B}, {6, 9, B}, {1, 3, A}}, {7, 8, 9, 10}, 6, 6, 0},
      {11, {{9, 2, B}, {10, 7, B}, {3, 8, B}, {5, 9, B}, {4, 10, B}, {6, 7, A}, {2, 0, B}, {7, 2, A}, {2, 8, A}, {1, 3, A}}, {7, 8, 9, 10}, 5, 7, 0},
      {11, {{2, 3, A}, {5, 8, A}, {4, 7, A}, {5, 6, B}, {1, 6, A}, {9, 0, B}, {6, 10, A}, {10, 7, B}, {6, 9, B}, {3, 10, B}}, {7, 8, 9, 10}, 6, 6, 0},
      {11, {{4, 8, A}, {4, 5, B}, {9, 1, A}, {5, 9, A}, {2, 0, A}, {10, 9, B}, {3, 7, A}, {5, 2, B}, {6, 10, B}, {9, 7, B}}, {7, 8, 9, 10}, 6, 6, 0},
      {11, {{10, 9, B}, {10, 7, A}, {2, 1, A}, {4, 10, B}, {5, 10, A}, {6, 5, B}, {9, 0, B}, {5, 2, B}, {3, 4, A}, {6, 8, A}}, {7, 8, 9, 10}, 6, 6, 0},
      {11, {{6, 2, B}, {10, 7, B}, {5, 7, A}, {3, 9, B}, {7, 0, A}, {4, 10, B}, {5, 1, B}, {2, 5, A}, {9, 5, B}, {6, 8, A}}, {7, 8, 9, 10}, 5, 7, 0},
      {11, {{5, 8, A}, {3, 8, B}, {4, 10, B}, {7, 0, B}, {9, 1, B}, {10, 3, A}, {6, 10, A}, {2, 6, A}, {6, 9, B}, {10, 7, B}}, {7, 8, 9, 10}, 5, 7, 0},
      {11, {{10, 7, B}, {10, 6, A}, {4, 10, B}, {7, 0, B}, {9, 1, B}, {5, 10, A}, {3, 2, A}, {5, 3, B}, {6, 9, B}, {6, 8, A}}, {7, 8, 9, 10}, 5, 7, 0},
      {12, {{3, 7, A}, {6, 1, B}, {5, 9, A}, {11, 5, B}, {1, 5, A}, {7, 10, A}, {6, 8, A}, {5, 0, B}, {7, 11, B}, {4, 9, B}, {2, 4, A}}, {8, 9, 10, 11}, 7, 6, 0},
      {12, {{11, 10, B}, {10, 9, B}, {5, 8, A}, {3, 8, B}, {2, 1, A}, {11, 3, A}, {7, 2, B}, {9, 0, A}, {6, 11, B}, {7, 11, A}, {4, 9, A}}, {8, 9, 10, 11}, 7, 6, 0},
  };
  return trees;
}

const std::vector<ReferenceTree>& involution() {
  static const std::vector<ReferenceTree> trees = {
      {1, {}, {0}, 0, 2, 1},
      {2, {{1, 0, A}, {0, 1, A}}, {0, 1}, 1, 2, 2},
      {2, {{1, 0, B}, {0, 1, B}}, {0, 1}, 1, 2, 2},
      {3, {{2, 1, A}, {1, 2, A}, {0, 2, B}, {2, 0, B}}, {0, 1, 2}, 2, 2, 1},
      {4, {{0, 3, A}, {2, 3, B}, {2, 1, A}, {3, 0, A}, {3, 2, B}, {1, 2, A}}, {0, 1, 2, 3}, 3, 2, 2},
      {4, {{0, 3, B}, {2, 3, A}, {2, 1, B}, {3, 0, B}, {3, 2, A}, {1, 2, B}}, {0, 1, 2, 3}, 3, 2, 2},
      {5, {{0, 3, B}, {2, 3, A}, {3, 0, B}, {3, 2, A}, {4, 1, A}, {1, 4, A}, {4, 2, B}, {2, 4, B}}, {0, 1, 2, 3, 4}, 4, 2, 1},
      {6, {{2, 3, A}, {0, 5, A}, {3, 2, A}, {4, 1, A}, {5, 3, B}, {1, 4, A}, {4, 2, B}, {5, 0, A}, {3, 5, B}, {2, 4, B}}, {0, 1, 2, 3, 4, 5}, 5, 2, 2},
      {6, {{2, 3, B}, {0, 5, B}, {1, 4, B}, {4, 1, B}, {3, 2, B}, {5, 3, A}, {2, 4, A}, {5, 0, B}, {3, 5, A}, {4, 2, A}}, {0, 1, 2, 3, 4, 5}, 5, 2, 2},
  };
  return trees;
}

}  // namespace

const std::vector<ReferenceTree>& reference_trees(const std::string& group) {
  if (group == "power1") return power1();
  if (group == "power2") return power2();
  if (group == "power3") return power3();
  if (group == "power4") return power4();
  if (group == "involution") return involution();
  throw std::invalid_argument("unknown reference group '" + group + "'");
}

std::vector<std::string> reference_groups() { return {"power1", "power2", "power3", "power4", "involution"}; }

}  // namespace symdiam
