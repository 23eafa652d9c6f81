#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symdiam/treenum.hpp"

namespace symdiam {

using Rational = boost::multiprecision::cpp_rational;

// sum of coeff * d^p * (1-d)^l, keyed by (p, l)
class DeltaPoly {
 public:
  using Key = std::pair<int, int>;

  DeltaPoly() = default;
  DeltaPoly(std::initializer_list<std::pair<const Key, Rational>> init);

  void add(int p, int l, const Rational& c);
  Rational coefficient(int p, int l) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  double operator()(double delta) const;

  DeltaPoly operator+(const DeltaPoly& o) const;
  DeltaPoly operator-(const DeltaPoly& o) const;
  friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

double eval_poly(const DeltaPoly& poly, double delta);
DeltaPoly aggregate_poly(const Catalog& catalog);

struct ReferencePolys {
  DeltaPoly f, h2, h3;
};
const ReferencePolys& reference_polys();
const DeltaPoly& reference_poly(const std::string& name);  // "f", "h2", "h3"

double solve_threshold(const DeltaPoly& poly, double scale);
std::vector<double> iterate_map(const DeltaPoly& poly, double scale, double delta0, int steps);
bool monotone_scan(const DeltaPoly& poly, double scale, double grid_step);

nlohmann::ordered_json poly_to_json(const DeltaPoly& poly);
DeltaPoly poly_from_json(const nlohmann::json& j);

// Terms where a exceeds b and where b exceeds a.
struct PolyDiff {
  DeltaPoly surplus;
  DeltaPoly missing;
  bool exact() const { return surplus.empty() && missing.empty(); }
};
PolyDiff compare_polys(const DeltaPoly& got, const DeltaPoly& want);

}  // namespace symdiam
