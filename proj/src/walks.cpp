#include "symdiam/walks.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace symdiam {

int WalkSpec::n() const { return gens.empty() ? 0 : gens.front().n(); }

void WalkSpec::check() const {
  if (gens.empty()) throw std::invalid_argument("walk needs at least one generator");
  for (const auto& g : gens)
    if (g.n() != n()) throw std::invalid_argument("generators act on different domains");
  if (k < 1 || k > n()) throw std::invalid_argument("tuple arity must lie in 1..n");
  if (length < 0) throw std::invalid_argument("negative walk length");
}

void Anchor::check(int n) const {
  if (g.n() != n) throw std::invalid_argument("anchor permutation has the wrong domain size");
  std::vector<char> in(n, 0);
  for (int x : lambda_points) {
    if (x < 0 || x >= n) throw std::invalid_argument("anchor point outside the domain");
    if (in[x]) throw std::invalid_argument("anchor points repeat");
    in[x] = 1;
  }
  for (int x : lambda_points)
    if (!in[g[x]]) throw std::invalid_argument("anchor permutation does not preserve its point set");
}

BigInt mixing_length(int n, int k, double eps) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  if (n < 2 || k < 1 || k >= n || !(eps > 0 && eps < 1)) throw std::invalid_argument("mixing_length needs n >= 2, 1 <= k < n, 0 < eps < 1");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, eps);
  Dec e(std::string(buf, res.ptr));
  BigInt pw = boost::multiprecision::pow(BigInt(n), 2 * k + 1);
  Dec value = 2 * Dec(pw) * (k * boost::multiprecision::log(Dec(n)) - boost::multiprecision::log(e));
  Dec c = boost::multiprecision::ceil(value);
  return c.convert_to<BigInt>();
}

std::vector<Perm> symmetric_generators(const std::vector<Perm>& gens) {
  std::vector<Perm> out;
  std::set<Perm> seen;
  for (const auto& g : gens)
    if (seen.insert(g).second) out.push_back(g);
  for (const auto& g : gens) {
    Perm gi = inverse(g);
    if (seen.insert(gi).second) out.push_back(gi);
  }
  return out;
}

WalkResult realize_lazy_walk(const WalkSpec& spec, Rng& rng) {
  spec.check();
  const BigInt limit = 10'000'000;
  if (spec.length > limit)
    throw SymbolicLength("walk length " + spec.length.str() + " is too long to execute; keep it symbolic");
  auto steps = static_cast<std::uint64_t>(spec.length);
  std::vector<Perm> sym = symmetric_generators(spec.gens);
  WalkResult res{Perm(spec.n()), 0, {}};
  if (steps == 0) return res;
  // The moving steps J form a uniform subset of size |J| ~ Bin(steps, 1/2) and
  // the factors are i.i.d., so only |J| matters for the product's law.
  std::binomial_distribution<std::uint64_t> bin(steps, 0.5);
  std::uint64_t j = bin(rng);
  res.word_length_used = j;
  res.factors.reserve(j);
  std::vector<int> cur(spec.n());
  std::iota(cur.begin(), cur.end(), 0);
  for (std::uint64_t i = 0; i < j; ++i) {
    int idx = static_cast<int>(rng.below(sym.size()));
    res.factors.push_back(idx);
    const Perm& g = sym[idx];
    for (auto& x : cur) x = g[x];
  }
  res.r = Perm::from_raw(std::move(cur));
  return res;
}

TupleSpace::TupleSpace(int n, int k) : n_(n), k_(k), size_(1), radix_(k) {
  if (k < 1 || k > n) throw std::invalid_argument("tuple arity must lie in 1..n");
  for (int i = k - 1; i >= 0; --i) {
    radix_[i] = size_;
    size_ *= static_cast<std::uint64_t>(n - i);
    if (size_ > (1ULL << 40)) throw std::length_error("tuple space too large");
  }
}

std::uint64_t TupleSpace::index(const std::vector<int>& t) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < k_; ++i) {
    int rank = t[i];
    for (int j = 0; j < i; ++j) rank -= t[j] < t[i];
    idx += radix_[i] * static_cast<std::uint64_t>(rank);
  }
  return idx;
}

std::vector<int> TupleSpace::tuple(std::uint64_t idx) const {
  std::vector<int> free(n_);
  std::iota(free.begin(), free.end(), 0);
  std::vector<int> t(k_);
  for (int i = 0; i < k_; ++i) {
    auto rank = idx / radix_[i];
    idx %= radix_[i];
    t[i] = free[rank];
    free.erase(free.begin() + static_cast<long>(rank));
  }
  return t;
}

namespace {

struct TupleGraph {
  TupleSpace space;
  std::vector<std::vector<std::uint64_t>> moves;  // moves[x] = neighbours with multiplicity
  double stay = 0.5, move = 0;

  explicit TupleGraph(const WalkSpec& spec) : space(spec.n(), spec.k) {
    if (space.size() > kMaxTupleStates) throw std::length_error("tuple state space too large to materialise");
    std::vector<Perm> sym = symmetric_generators(spec.gens);
    move = 0.5 / static_cast<double>(sym.size());
    moves.resize(space.size());
    for (std::uint64_t x = 0; x < space.size(); ++x) {
      auto t = space.tuple(x);
      for (const auto& g : sym) {
        std::vector<int> u(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) u[i] = g[t[i]];
        moves[x].push_back(space.index(u));
      }
    }
  }
};

std::uint64_t executed_length(const WalkSpec& spec) {
  if (spec.length > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw SymbolicLength("walk length does not fit a machine integer");
  return static_cast<std::uint64_t>(spec.length);
}

Eigen::MatrixXd matrix_power(const TupleGraph& tg, std::uint64_t e) {
  const auto N = static_cast<Eigen::Index>(tg.space.size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index x = 0; x < N; ++x) {
    P(x, x) += tg.stay;
    for (auto y : tg.moves[x]) P(x, static_cast<Eigen::Index>(y)) += tg.move;
  }
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(N, N);
  while (e) {
    if (e & 1) R = R * P;
    e >>= 1;
    if (e) P = P * P;
  }
  return R;
}

constexpr std::uint64_t kDenseLimit = 1500;

}  // namespace

std::vector<std::vector<double>> exact_walk_matrix(const WalkSpec& spec) {
  spec.check();
  TupleGraph tg(spec);
  if (tg.space.size() > kDenseLimit) throw std::length_error("state space too large for the full matrix");
  Eigen::MatrixXd R = matrix_power(tg, executed_length(spec));
  std::vector<std::vector<double>> rows(R.rows(), std::vector<double>(R.cols()));
  for (Eigen::Index i = 0; i < R.rows(); ++i)
    for (Eigen::Index j = 0; j < R.cols(); ++j) rows[i][j] = R(i, j);
  return rows;
}

std::vector<double> exact_walk_distribution(const WalkSpec& spec, const std::vector<int>& start) {
  spec.check();
  TupleGraph tg(spec);
  if (static_cast<int>(start.size()) != spec.k) throw std::invalid_argument("start tuple has the wrong arity");
  std::set<int> distinct(start.begin(), start.end());
  if (static_cast<int>(distinct.size()) != spec.k || *distinct.begin() < 0 || *distinct.rbegin() >= spec.n())
    throw std::invalid_argument("start tuple must hold distinct points of the domain");
  const std::uint64_t x0 = tg.space.index(start);
  const std::uint64_t steps = executed_length(spec);
  const std::uint64_t N = tg.space.size();
  if (N <= kDenseLimit) {
    Eigen::MatrixXd R = matrix_power(tg, steps);
    std::vector<double> row(N);
    for (std::uint64_t j = 0; j < N; ++j) row[j] = R(static_cast<Eigen::Index>(x0), static_cast<Eigen::Index>(j));
    return row;
  }
  if (static_cast<double>(steps) * static_cast<double>(N) * tg.moves[0].size() > 1e10)
    throw std::length_error("walk too long to propagate over this state space");
  std::vector<double> cur(N, 0.0), nxt(N);
  cur[x0] = 1.0;
  for (std::uint64_t s = 0; s < steps; ++s) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (std::uint64_t x = 0; x < N; ++x) {
      if (cur[x] == 0.0) continue;
      nxt[x] += tg.stay * cur[x];
      for (auto y : tg.moves[x]) nxt[y] += tg.move * cur[x];
    }
    cur.swap(nxt);
  }
  return cur;
}

Perm sample_conditioned(int n, const Anchor& anchor, Rng& rng) {
  anchor.check(n);
  std::vector<char> in(n, 0);
  for (int x : anchor.lambda_points) in[x] = 1;
  std::vector<int> rest;
  for (int x = 0; x < n; ++x)
    if (!in[x]) rest.push_back(x);
  std::vector<int> targets = rest;
  rng.shuffle(targets);
  std::vector<int> img(n);
  for (int x : anchor.lambda_points) img[x] = anchor.g[x];
  for (std::size_t i = 0; i < rest.size(); ++i) img[rest[i]] = targets[i];
  return Perm::from_raw(std::move(img));
}

}  // namespace symdiam
