#pragma once

#include <cstdint>
#include <vector>

#include "symdiam/perm.hpp"

namespace symdiam {

struct WalkSpec {
  std::vector<Perm> gens;
  int k = 1;
  BigInt length = 0;

  int n() const;
  void check() const;
};

struct Anchor {
  std::vector<int> lambda_points;  // 0-based
  Perm g;                          // permutation of the full domain, moving only lambda_points

  void check(int n) const;
};

BigInt mixing_length(int n, int k, double eps);

struct SymbolicLength : std::length_error {
  using std::length_error::length_error;
};

struct WalkResult {
  Perm r;
  std::uint64_t word_length_used = 0;
  std::vector<int> factors;  // indices into S u S^-1, in product order
};

// S u S^-1 as a set, in a fixed order (generators first, then new inverses).
std::vector<Perm> symmetric_generators(const std::vector<Perm>& gens);

WalkResult realize_lazy_walk(const WalkSpec& spec, Rng& rng);

// Ordered k-tuples of distinct points, indexed lexicographically.
class TupleSpace {
 public:
  TupleSpace(int n, int k);
  std::uint64_t size() const { return size_; }
  std::uint64_t index(const std::vector<int>& tuple) const;
  std::vector<int> tuple(std::uint64_t idx) const;
  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_, k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> radix_;
};

constexpr std::uint64_t kMaxTupleStates = 100000;

std::vector<double> exact_walk_distribution(const WalkSpec& spec, const std::vector<int>& start);
// Row x holds the distribution after spec.length steps from tuple x.
std::vector<std::vector<double>> exact_walk_matrix(const WalkSpec& spec);

Perm sample_conditioned(int n, const Anchor& anchor, Rng& rng);

}  // namespace symdiam
