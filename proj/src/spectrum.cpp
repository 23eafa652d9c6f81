#include "symdiam/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symdiam {

DeltaPoly::DeltaPoly(std::initializer_list<std::pair<const Key, Rational>> init) {
  for (const auto& [k, c] : init) add(k.first, k.second, c);
}

void DeltaPoly::add(int p, int l, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{p, l}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DeltaPoly::coefficient(int p, int l) const {
  auto it = terms_.find({p, l});
  return it == terms_.end() ? Rational(0) : it->second;
}

double DeltaPoly::operator()(double delta) const {
  double s = 0;
  for (const auto& [k, c] : terms_)
    s += static_cast<double>(c) * std::pow(delta, k.first) * std::pow(1.0 - delta, k.second);
  return s;
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
  DeltaPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& o) const {
  DeltaPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
  return r;
}

std::string DeltaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) os << a << "*";
    os << "d^" << k.first << "*(1-d)^" << k.second;
  }
  return os.str();
}

double eval_poly(const DeltaPoly& poly, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("delta outside [0,1]");
  return poly(delta);
}

DeltaPoly aggregate_poly(const Catalog& catalog) {
  DeltaPoly out;
  for (const auto& e : catalog)
    out.add(e.stats.p_total(), e.stats.l_total(), Rational(e.stats.fixed_count, e.stats.aut_order));
  return out;
}

const ReferencePolys& reference_polys() {
  static const ReferencePolys polys = [] {
    ReferencePolys r;
    r.f = DeltaPoly{{{0, 2}, 1},  {{1, 2}, 1},  {{1, 3}, 1},  {{3, 2}, 2},  {{2, 4}, 4},
                    {{3, 5}, 3},  {{4, 9}, 10}, {{5, 7}, 26}, {{5, 8}, 20}, {{6, 5}, 6},
                    {{6, 6}, 16}, {{6, 8}, 40}, {{7, 4}, 3},  {{7, 6}, 8},  {{7, 7}, 20},
                    {{9, 8}, 10}, {{10, 7}, 20}, {{11, 6}, 10}, {{11, 7}, 15}};
    for (int k = 0; k <= 5; ++k) r.h2.add(k, 2, k + 1);
    r.h3 = DeltaPoly{{{0, 2}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{3, 2}, 2}, {{2, 4}, 4},
                     {{3, 5}, 3}, {{7, 4}, 12}, {{6, 4}, 6}, {{4, 6}, 1}};
    return r;
  }();
  return polys;
}

const DeltaPoly& reference_poly(const std::string& name) {
  const auto& r = reference_polys();
  if (name == "f") return r.f;
  if (name == "h2") return r.h2;
  if (name == "h3") return r.h3;
  throw std::invalid_argument("unknown reference polynomial '" + name + "' (expected f, h2 or h3)");
}

double solve_threshold(const DeltaPoly& poly, double scale) {
  // Only downward crossings count: F goes from >= 0 (the map 1 - scale*poly
  // lies below the diagonal) to < 0. An upward crossing also appears right next
  // to 0 whenever scale < 1, since poly(0) = 1 makes F(0) slightly negative.
  auto F = [&](double d) { return scale * poly(d) - (1.0 - d); };
  const int steps = 10000;
  int changes = 0;
  double lo = 0, hi = 0;
  double prev_x = 1.0 / steps, prev = F(prev_x);
  for (int k = 2; k < steps; ++k) {
    double x = static_cast<double>(k) / steps, y = F(x);
    if (prev >= 0 && y < 0) {
      ++changes;
      lo = prev_x, hi = x;
    }
    prev_x = x, prev = y;
  }
  if (changes != 1)
    throw std::domain_error("expected exactly one downward crossing of scale*poly(d) = 1-d on (0,1), found " +
                            std::to_string(changes));
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (F(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> iterate_map(const DeltaPoly& poly, double scale, double delta0, int steps) {
  if (!(delta0 > 0 && delta0 < 1)) throw std::domain_error("starting value must lie in (0,1)");
  std::vector<double> out{delta0};
  for (int i = 0; i < steps; ++i) {
    double next = 1.0 - scale * poly(out.back());
    if (!(next >= 0 && next <= 1)) throw std::domain_error("iterate left [0,1] at step " + std::to_string(i + 1));
    out.push_back(next);
  }
  return out;
}

bool monotone_scan(const DeltaPoly& poly, double scale, double grid_step) {
  if (!(grid_step > 0 && grid_step <= 1e-3)) throw std::domain_error("grid step must lie in (0, 1e-3]");
  double prev = 1.0 - scale * poly(grid_step);
  for (long k = 2; k * grid_step < 1.0; ++k) {
    double cur = 1.0 - scale * poly(k * grid_step);
    if (cur < prev) return false;
    prev = cur;
  }
  return true;
}

nlohmann::ordered_json poly_to_json(const DeltaPoly& poly) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : poly.terms()) {
    nlohmann::ordered_json t;
    t["p"] = k.first;
    t["l"] = k.second;
    t["num"] = static_cast<long long>(numerator(c));
    t["den"] = static_cast<long long>(denominator(c));
    terms.push_back(t);
  }
  nlohmann::ordered_json j;
  j["terms"] = terms;
  return j;
}

DeltaPoly poly_from_json(const nlohmann::json& j) {
  DeltaPoly p;
  for (const auto& t : j.at("terms")) {
    long long den = t.at("den").get<long long>();
    if (den == 0) throw std::invalid_argument("zero denominator");
    p.add(t.at("p").get<int>(), t.at("l").get<int>(), Rational(t.at("num").get<long long>(), den));
  }
  return p;
}

PolyDiff compare_polys(const DeltaPoly& got, const DeltaPoly& want) {
  PolyDiff d;
  DeltaPoly delta = got - want;
  for (const auto& [k, c] : delta.terms()) {
    if (c > 0)
      d.surplus.add(k.first, k.second, c);
    else
      d.missing.add(k.first, k.second, -c);
  }
  return d;
}

}  // namespace symdiam
