#include <algorithm>
#include <cmath>

#include "symdiam/reducer.hpp"

namespace symdiam {

std::string verdict_name(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::sym: return "sym";
    case GroupVerdict::alt: return "alt";
    case GroupVerdict::proper: return "proper";
  }
  return "?";
}

namespace {

// One level of a stabilizer chain, with a Schreier vector for the orbit of its base point.
struct Level {
  int base;
  std::vector<Perm> gens, invs;
  std::vector<int> via;  // generator index reaching the point, -2 for the base, -1 outside the orbit
  std::vector<int> orbit;

  void rebuild(int n) {
    via.assign(n, -1);
    orbit = {base};
    via[base] = -2;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      int x = orbit[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int y = gens[g][x];
        if (via[y] == -1) {
          via[y] = static_cast<int>(g);
          orbit.push_back(y);
        }
      }
    }
  }

  // inverse of the transversal element carrying the base point to x
  std::vector<int> inverse_transversal(int x, int n) const {
    std::vector<int> path;
    while (via[x] != -2) {
      path.push_back(via[x]);
      x = invs[via[x]][x];
    }
    // transversal u = g_k ... g_1 in action order; its inverse applies inverses in reverse
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int gi : path)
      for (auto& v : img) v = invs[gi][v];
    return img;
  }
};

// Product replacement generator of (nearly) uniform random group elements.
class RandomElements {
 public:
  RandomElements(const std::vector<Perm>& gens, Rng& rng) : rng_(rng), acc_(gens.front().n()) {
    for (std::size_t i = 0; i < std::max<std::size_t>(10, gens.size()); ++i) pool_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 60; ++i) next();
  }
  Perm next() {
    std::size_t s = rng_.below(pool_.size()), t = rng_.below(pool_.size() - 1);
    if (t >= s) ++t;
    pool_[s] = rng_.below(2) ? compose(pool_[s], pool_[t]) : compose(pool_[s], inverse(pool_[t]));
    acc_ = compose(acc_, pool_[s]);
    return acc_;
  }

 private:
  Rng& rng_;
  std::vector<Perm> pool_;
  Perm acc_;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool transitive(const std::vector<Perm>& gens, int n) {
  std::vector<char> seen(n, 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  int count = 1;
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (const auto& g : gens)
      if (!seen[g[x]]) seen[g[x]] = 1, ++count, todo.push_back(g[x]);
  }
  return count == n;
}

// A transitive group is primitive iff the least block containing {0, b} is
// everything for every b != 0.
bool primitive(const std::vector<Perm>& gens, int n) {
  for (int b = 1; b < n; ++b) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> todo{{0, b}};
    parent[find(b)] = find(0);
    int classes = n - 1;
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        int u = find(g[x]), v = find(g[y]);
        if (u != v) {
          parent[u] = v;
          --classes;
          todo.push_back({g[x], g[y]});
        }
      }
    }
    if (classes > 1) return false;
  }
  return true;
}

// Jordan: a primitive group containing a p-cycle, p prime and p <= n-3, contains Alt(n).
// A random element has a cycle of prime length in (n/2, n-3] with probability about
// sum 1/p over those primes, so enough draws make a miss less likely than 2^-40.
bool giant_by_jordan(const std::vector<Perm>& gens, int n, Rng& rng) {
  double hit = 0;
  for (int p = n / 2 + 1; p <= n - 3; ++p)
    if (is_prime(p)) hit += 1.0 / p;
  if (hit <= 0) return false;
  const int draws = static_cast<int>(std::ceil(40 * std::log(2.0) / -std::log1p(-0.9 * hit)));
  RandomElements random(gens, rng);
  for (int i = 0; i < draws; ++i)
    for (int l : cycle_lengths(random.next()))
      if (2 * l > n && l <= n - 3 && is_prime(l)) return true;
  return false;
}

BigInt chain_order(const std::vector<Level>& levels) {
  BigInt o = 1;
  for (const auto& l : levels) o *= l.orbit.size();
  return o;
}

}  // namespace

BigInt random_schreier_sims_order(const std::vector<Perm>& S, Rng& rng, const BigInt& stop_at) {
  std::vector<Perm> gens;
  for (const auto& s : S)
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return 1;
  const int n = gens.front().n();
  std::vector<Level> levels;
  RandomElements random(gens, rng);

  auto sift = [&](Perm g, std::size_t& depth) {
    std::vector<int> cur = g.raw();
    for (depth = 0; depth < levels.size(); ++depth) {
      const Level& l = levels[depth];
      int x = cur[l.base];
      if (l.via[x] == -1) return Perm::from_raw(cur);
      std::vector<int> uinv = l.inverse_transversal(x, n);
      for (auto& v : cur) v = uinv[v];
    }
    return Perm::from_raw(cur);
  };
  auto add_generator = [&](const Perm& h, std::size_t depth) {
    if (depth == levels.size()) {
      int b = 0;
      while (h[b] == b) ++b;
      levels.push_back({b, {}, {}, {}, {}});
    }
    for (std::size_t i = 0; i <= depth; ++i) {
      levels[i].gens.push_back(h);
      levels[i].invs.push_back(inverse(h));
      levels[i].rebuild(n);
    }
  };

  for (const auto& g : gens) {
    std::size_t depth;
    Perm h = sift(g, depth);
    if (!h.is_identity()) add_generator(h, depth);
  }
  // 48 consecutive successful sifts bound the chance of a short chain below 2^-40
  int quiet = 0;
  while (quiet < 48) {
    if (stop_at > 0 && chain_order(levels) >= stop_at) break;
    std::size_t depth;
    Perm h = sift(random.next(), depth);
    if (h.is_identity()) {
      ++quiet;
    } else {
      quiet = 0;
      add_generator(h, depth);
    }
  }
  return chain_order(levels);
}

GenerationResult check_generates(const std::vector<Perm>& S, Rng& rng, bool trim) {
  if (S.empty()) throw std::invalid_argument("empty generating set");
  const int n = S.front().n();
  for (const auto& s : S)
    if (s.n() != n) throw std::invalid_argument("generators act on different domains");
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  auto judge = [&](const std::vector<Perm>& gens, Rng& r, BigInt& order_out) {
    bool all_even = std::all_of(gens.begin(), gens.end(), [](const Perm& p) { return is_even(p); });
    BigInt full = all_even ? (n >= 2 ? fact / 2 : fact) : fact;
    std::vector<Perm> moving;
    for (const auto& g : gens)
      if (!g.is_identity()) moving.push_back(g);
    if (n > 12) {
      // a full stabilizer chain of a giant group costs about n^3 per sift
      if (moving.empty() || !transitive(moving, n) || !primitive(moving, n)) {
        order_out = random_schreier_sims_order(gens, r, full);
        return GroupVerdict::proper;
      }
      if (giant_by_jordan(moving, n, r)) {
        order_out = full;
        return all_even ? GroupVerdict::alt : GroupVerdict::sym;
      }
    }
    order_out = random_schreier_sims_order(gens, r, full);
    if (order_out != full || n < 2) return n < 2 ? GroupVerdict::sym : GroupVerdict::proper;
    return all_even ? GroupVerdict::alt : GroupVerdict::sym;
  };

  GenerationResult res;
  Rng first = rng.split(0);
  res.verdict = judge(S, first, res.order);
  if (trim && res.verdict != GroupVerdict::proper) {
    std::vector<int> keep(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) keep[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < S.size(); ++i) {
      std::vector<int> trial;
      for (int k : keep)
        if (k != static_cast<int>(i)) trial.push_back(k);
      if (trial.size() == keep.size() || trial.empty()) continue;
      std::vector<Perm> gens;
      for (int k : trial) gens.push_back(S[k]);
      Rng r = rng.split(i + 1);
      BigInt o;
      if (judge(gens, r, o) == res.verdict) keep = trial;
    }
    res.generating_subset = keep;
  }
  return res;
}

}  // namespace symdiam
