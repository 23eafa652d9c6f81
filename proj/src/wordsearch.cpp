#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "symdiam/parallel.hpp"
#include "symdiam/reducer.hpp"

namespace symdiam {

std::vector<Word> balanced_alternating_words(int length) {
  if (length <= 0 || length % 4) throw std::invalid_argument("balanced alternating words need a length divisible by 4");
  const int half = length / 2;
  // sign patterns with equally many +1 and -1 on one symbol's positions
  std::vector<std::vector<int>> signs;
  for (unsigned mask = 0; mask < (1u << half); ++mask) {
    if (__builtin_popcount(mask) != half / 2) continue;
    std::vector<int> s(half);
    for (int i = 0; i < half; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
    signs.push_back(s);
  }
  std::vector<Word> out;
  for (int first = 0; first < 2; ++first)
    for (const auto& sa : signs)
      for (const auto& sb : signs) {
        std::vector<Letter> letters;
        for (int i = 0; i < length; ++i) {
          int sym = (first + i) % 2;
          int e = (sym == 0 ? sa : sb)[i / 2];
          letters.push_back({sym, e});
        }
        out.emplace_back(std::move(letters));
      }
  return out;
}

std::vector<Word> symmetry_class(const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  while (!todo.empty()) {
    Word x = todo.back();
    todo.pop_back();
    // rotation by one letter conjugates the word, so the cycle type never changes
    for (const Word& y : {x.rotated(1), x.inverse(), x.swapped()})
      if (seen.insert(y).second) todo.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

Word class_representative(const Word& w) { return symmetry_class(w).front(); }

double paired_std_error(const std::vector<int>& x, const std::vector<int>& y) {
  const std::size_t m = x.size();
  if (m < 2) return 0;
  double mean = 0;
  for (std::size_t i = 0; i < m; ++i) mean += x[i] - y[i];
  mean /= m;
  double ss = 0;
  for (std::size_t i = 0; i < m; ++i) ss += (x[i] - y[i] - mean) * (x[i] - y[i] - mean);
  return std::sqrt(ss / (m - 1) / m);
}

WordSearchResult word_search(int min_len, int max_len, int n, double delta, int samples, Rng& rng, unsigned workers,
                             const std::vector<Word>& extra) {
  if (samples <= 0) throw std::invalid_argument("word search needs at least one sample");
  if (max_len > 20 || min_len < 4 || min_len > max_len || min_len % 4 || max_len % 4)
    throw std::invalid_argument("word lengths must be multiples of 4 with 4 <= min_len <= max_len <= 20");
  std::map<Word, int> classes;
  auto add = [&](const Word& w) {
    Word rep = class_representative(w);
    if (!classes.count(rep)) classes[rep] = static_cast<int>(symmetry_class(rep).size());
  };
  for (int len = min_len; len <= max_len; len += 4)
    for (const auto& w : balanced_alternating_words(len)) add(w);
  for (const auto& w : extra) add(w);

  std::vector<Word> words;
  for (const auto& [w, size] : classes) words.push_back(w);
  const int s = static_cast<int>(std::lround(delta * n));
  Rng base(rng());
  // counts[sample][word]: the same (a, b) pair is shared by every word
  std::vector<std::vector<int>> per_sample(samples);
  parallel_for(samples, workers, [&](std::size_t i) {
    Rng t = base.split(i);
    Perm a = random_with_support(n, s, CycleMode::at_least(7), t);
    Perm b = conjugate(a, random_perm(n, t));
    std::vector<int> row;
    for (const auto& w : words) {
      Perm c = evaluate_word(w, a, b);
      int longer = 0;
      for (int l : cycle_lengths(c))
        if (l > 6) longer += l;
      row.push_back(n - longer);
    }
    per_sample[i] = std::move(row);
  });

  std::vector<WordScore> scores;
  std::vector<std::vector<int>> counts(words.size(), std::vector<int>(samples));
  for (std::size_t w = 0; w < words.size(); ++w) {
    double sum = 0, sq = 0;
    for (int i = 0; i < samples; ++i) {
      counts[w][i] = per_sample[i][w];
      sum += per_sample[i][w];
      sq += static_cast<double>(per_sample[i][w]) * per_sample[i][w];
    }
    double mean = sum / samples;
    double var = samples > 1 ? (sq - samples * mean * mean) / (samples - 1) : 0;
    scores.push_back({words[w], classes[words[w]], mean, std::sqrt(std::max(var, 0.0) / samples)});
  }
  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return scores[x].mean > scores[y].mean; });
  WordSearchResult res;
  for (auto i : order) {
    res.ranking.push_back(scores[i]);
    res.counts.push_back(counts[i]);
  }
  return res;
}

}  // namespace symdiam
