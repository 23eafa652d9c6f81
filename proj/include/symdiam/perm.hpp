#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symdiam/rng.hpp"

namespace symdiam {

using BigInt = boost::multiprecision::cpp_int;

// Points are stored 0-based; every constructor and printer that talks to the
// outside world uses 1-based points.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);

  static Perm from_images(const std::vector<int>& images_1based);
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles_1based);
  // "(1,2)(3,4,5)", "()" or "id" for the identity
  static Perm parse(int n, const std::string& text);
  static Perm from_raw(std::vector<int> images_0based);

  int n() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& raw() const { return img_; }
  std::vector<int> images() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

struct CycleStructure {
  std::vector<std::vector<int>> cycles;  // 0-based points, fixed points included
  int support_size = 0;
  int fixed_count = 0;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm conjugate(const Perm& a, const Perm& r);
Perm power(const Perm& p, long long k);

CycleStructure cycle_structure(const Perm& p);
std::vector<int> cycle_lengths(const Perm& p);  // nontrivial cycles, sorted
int support_size(const Perm& p);
int fixed_count(const Perm& p);
bool has_cycle_of_length(const Perm& p, int len);
int points_in_short_cycles(const Perm& p, int max_len);
BigInt order(const Perm& p);
bool is_even(const Perm& p);

struct SpecialCaseOrder : std::domain_error {
  using std::domain_error::domain_error;
};

// a^e with e = 2^e1 3^e2 the {2,3}-part of the order; throws SpecialCaseOrder
// when the order has no prime factor >= 5.
std::pair<Perm, std::uint64_t> power_coprime6(const Perm& a);

struct CycleMode {
  enum Kind { min_cycle_len, all_cycles_len } kind = min_cycle_len;
  int len = 2;

  static CycleMode at_least(int m) { return {min_cycle_len, m}; }
  static CycleMode exactly(int len) { return {all_cycles_len, len}; }
};

bool support_feasible(int s, CycleMode mode);

// Sample a cycle type uniformly among feasible partitions of s, then a uniform
// permutation of {1..n} with that type.
Perm random_with_support(int n, int s, CycleMode mode, Rng& rng);
std::vector<int> random_partition(int s, CycleMode mode, Rng& rng);
Perm random_perm(int n, Rng& rng);

nlohmann::ordered_json to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

}  // namespace symdiam
