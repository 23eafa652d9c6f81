#include "symdiam/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace symdiam {

Perm::Perm(int n) : img_(n) {
  if (n < 0) throw std::invalid_argument("negative domain size");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_raw(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x])
      throw std::invalid_argument("image list is not a bijection");
    seen[x] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images_1based) {
  std::vector<int> raw(images_1based.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = images_1based[i] - 1;
  return from_raw(std::move(raw));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x < 1 || x > n) throw std::invalid_argument("cycle point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (used[x - 1]) throw std::invalid_argument("point " + std::to_string(x) + " repeated in cycle notation");
      used[x - 1] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) p.img_[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

Perm Perm::parse(int n, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "()" || t == "id") return Perm(n);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
    std::size_t close = t.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + text);
    std::vector<int> cyc;
    std::stringstream body(t.substr(i + 1, close - i - 1));
    std::string item;
    while (std::getline(body, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw std::invalid_argument("bad point '" + item + "' in " + text);
      cyc.push_back(std::stoi(item));
    }
    cycles.push_back(cyc);
    i = close + 1;
  }
  return from_cycles(n, cycles);
}

std::vector<int> Perm::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string s;
  for (const auto& c : cycle_structure(*this).cycles) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

static void require_same(const Perm& p, const Perm& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("domain size mismatch: " + std::to_string(p.n()) + " vs " + std::to_string(q.n()));
}

Perm compose(const Perm& p, const Perm& q) {
  require_same(p, q);
  std::vector<int> r(p.n());
  for (int i = 0; i < p.n(); ++i) r[i] = q[p[i]];
  return Perm::from_raw(std::move(r));
}

Perm inverse(const Perm& p) {
  std::vector<int> r(p.n());
  for (int i = 0; i < p.n(); ++i) r[p[i]] = i;
  return Perm::from_raw(std::move(r));
}

Perm conjugate(const Perm& a, const Perm& r) {
  require_same(a, r);
  // r^-1 a r sends r(i) to r(a(i))
  std::vector<int> out(a.n());
  for (int i = 0; i < a.n(); ++i) out[r[i]] = r[a[i]];
  return Perm::from_raw(std::move(out));
}

Perm power(const Perm& p, long long k) {
  std::vector<int> out(p.n());
  for (const auto& c : cycle_structure(p).cycles) {
    long long len = static_cast<long long>(c.size());
    long long shift = ((k % len) + len) % len;
    for (std::size_t i = 0; i < c.size(); ++i) out[c[i]] = c[(i + shift) % len];
  }
  return Perm::from_raw(std::move(out));
}

CycleStructure cycle_structure(const Perm& p) {
  CycleStructure cs;
  std::vector<char> seen(p.n(), 0);
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    if (c.size() > 1) cs.support_size += static_cast<int>(c.size());
    cs.cycles.push_back(std::move(c));
  }
  cs.fixed_count = p.n() - cs.support_size;
  return cs;
}

std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<int> out;
  std::vector<char> seen(p.n(), 0);
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int support_size(const Perm& p) {
  int s = 0;
  for (int i = 0; i < p.n(); ++i) s += p[i] != i;
  return s;
}

int fixed_count(const Perm& p) { return p.n() - support_size(p); }

bool has_cycle_of_length(const Perm& p, int len) {
  for (int l : cycle_lengths(p))
    if (l == len) return true;
  return false;
}

int points_in_short_cycles(const Perm& p, int max_len) {
  int total = 0;
  for (int l : cycle_lengths(p))
    if (l <= max_len) total += l;
  return total;
}

BigInt order(const Perm& p) {
  BigInt o = 1;
  for (int l : cycle_lengths(p)) o = boost::multiprecision::lcm(o, BigInt(l));
  return o;
}

bool is_even(const Perm& p) {
  int transpositions = 0;
  for (int l : cycle_lengths(p)) transpositions += l - 1;
  return transpositions % 2 == 0;
}

std::pair<Perm, std::uint64_t> power_coprime6(const Perm& a) {
  int e1 = 0, e2 = 0;
  bool big_prime = false;
  for (int l : cycle_lengths(a)) {
    int x = l, t = 0, u = 0;
    while (x % 2 == 0) x /= 2, ++t;
    while (x % 3 == 0) x /= 3, ++u;
    e1 = std::max(e1, t);
    e2 = std::max(e2, u);
    if (x > 1) big_prime = true;
  }
  if (!big_prime) throw SpecialCaseOrder("order of " + a.to_string() + " has no prime factor >= 5");
  std::uint64_t e = 1;
  for (int i = 0; i < e1; ++i) e *= 2;
  for (int i = 0; i < e2; ++i) e *= 3;
  return {power(a, static_cast<long long>(e)), e};
}

bool support_feasible(int s, CycleMode mode) {
  if (s < 0) return false;
  if (mode.kind == CycleMode::all_cycles_len) return mode.len >= 2 && s % mode.len == 0;
  return s == 0 || s >= std::max(mode.len, 2);
}

namespace {

constexpr int kExactPartitionLimit = 2000;

// q[t][j]: partitions of t with all parts in [m, j], for j <= t (clamped).
struct PartitionTable {
  int m;
  std::vector<std::vector<double>> q;

  PartitionTable(int s, int m_) : m(m_), q(s + 1) {
    q[0] = {1.0};
    for (int t = 1; t <= s; ++t) {
      q[t].assign(t + 1, 0.0);
      for (int j = 1; j <= t; ++j) {
        double v = q[t][j - 1];
        if (j >= m) v += at(t - j, j);
        q[t][j] = v;
      }
    }
  }
  double at(int t, int j) const { return q[t][std::min(j, t)]; }
};

std::shared_ptr<const PartitionTable> table_for(int s, int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PartitionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end() && static_cast<int>(it->second->q.size()) > s) return it->second;
  int size = std::max(s, std::min(kExactPartitionLimit, 1200));
  auto t = std::make_shared<const PartitionTable>(size, m);
  cache[m] = t;
  return t;
}

std::vector<int> exact_partition(int s, int m, Rng& rng) {
  auto tab = table_for(s, m);
  std::vector<int> parts;
  int t = s, j = s;
  while (t > 0) {
    j = std::min(j, t);
    double total = tab->at(t, j);
    double with_j = j >= m ? tab->at(t - j, j) : 0.0;
    if (rng.uniform() * total < with_j) {
      parts.push_back(j);
      t -= j;
    } else {
      --j;
    }
  }
  return parts;
}

// Boltzmann sampling with rejection; multiplicities of parts > m are free
// geometrics and the residual is filled with parts equal to m.
std::vector<int> boltzmann_partition(int s, int m, Rng& rng) {
  const double x = std::exp(-M_PI / std::sqrt(6.0 * s));
  const double logx = std::log(x);
  for (;;) {
    std::vector<int> parts;
    long long used = 0;
    for (int k = s; k > m && used <= s; --k) {
      double u = 1.0 - rng.uniform();
      long long z = static_cast<long long>(std::floor(std::log(u) / (k * logx)));
      for (long long c = 0; c < z && used <= s; ++c) {
        parts.push_back(k);
        used += k;
      }
    }
    long long r = s - used;
    if (r < 0 || r % m != 0) continue;
    if (rng.uniform() >= std::pow(x, static_cast<double>(r))) continue;
    for (long long c = 0; c < r / m; ++c) parts.push_back(m);
    return parts;
  }
}

}  // namespace

std::vector<int> random_partition(int s, CycleMode mode, Rng& rng) {
  if (!support_feasible(s, mode))
    throw std::invalid_argument("support " + std::to_string(s) + " cannot be split into cycles of the requested lengths");
  if (s == 0) return {};
  if (mode.kind == CycleMode::all_cycles_len) return std::vector<int>(s / mode.len, mode.len);
  int m = std::max(mode.len, 2);
  return s <= kExactPartitionLimit ? exact_partition(s, m, rng) : boltzmann_partition(s, m, rng);
}

Perm random_perm(int n, Rng& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  rng.shuffle(img);
  return Perm::from_raw(std::move(img));
}

Perm random_with_support(int n, int s, CycleMode mode, Rng& rng) {
  if (s > n) throw std::invalid_argument("support larger than the domain");
  std::vector<int> parts = random_partition(s, mode, rng);
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 0);
  rng.shuffle(points);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  int at = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i) img[points[at + i]] = points[at + (i + 1) % len];
    at += len;
  }
  return Perm::from_raw(std::move(img));
}

nlohmann::ordered_json to_json(const Perm& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& c : cycle_structure(p).cycles) {
    if (c.size() < 2) continue;
    auto arr = nlohmann::ordered_json::array();
    for (int x : c) arr.push_back(x + 1);
    cycles.push_back(arr);
  }
  j["cycles"] = cycles;
  return j;
}

Perm perm_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  if (j.contains("images")) {
    auto imgs = j.at("images").get<std::vector<int>>();
    if (static_cast<int>(imgs.size()) != n) throw std::invalid_argument("images length differs from n");
    return Perm::from_images(imgs);
  }
  return Perm::from_cycles(n, j.at("cycles").get<std::vector<std::vector<int>>>());
}

}  // namespace symdiam
