#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace symdiam {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable generator whose child streams depend only on (seed, stream id),
// never on which thread happens to consume them.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream * 0xd1342543de82ef95ULL + 1)));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return eng_(); }

  // uniform on [0, bound), bound > 0
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // uniform on [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace symdiam
