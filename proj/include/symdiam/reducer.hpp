#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symdiam/walks.hpp"
#include "symdiam/word.hpp"

namespace symdiam {

struct LedgerEntry {
  enum Kind { multiply, add };
  std::string description;
  Kind kind;
  BigInt amount;
};

// Bound on the word length over S u S^-1 u {1} of the current element.
class Ledger {
 public:
  const BigInt& length_bound() const { return bound_; }
  const std::vector<LedgerEntry>& history() const { return history_; }
  void multiply(std::string what, const BigInt& factor);
  void add(std::string what, const BigInt& term);
  BigInt replay() const;

 private:
  BigInt bound_ = 1;
  std::vector<LedgerEntry> history_;
};

enum class CaseId { generic_long_cycle, five_cycle, order2, order3 };
std::string case_name(CaseId id);

struct CaseSelection {
  CaseId case_id;
  Anchor anchor;
  int kappa;
  int lambda;
};

struct SelectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CaseSelection select_case(const Perm& a);

struct Lemma5Check {
  std::string name;
  bool passed;
  std::string detail;
};
std::vector<Lemma5Check> verify_lemma5();

using Sampler = std::function<Perm(int, const Anchor&, Rng&)>;

struct StepResult {
  Perm a_next;
  Perm chosen_r;
  int fixed = 0;
  bool has_seven_cycle = false;
  bool degenerate = false;
  int trials_used = 0;
};

// w0^60(a, a^r)
Perm contraction_image(const Perm& a, const Perm& r);

StepResult reduce_step(const Perm& a, const CaseSelection& sel, int trials, Rng& rng,
                       const Sampler& sampler = sample_conditioned, unsigned workers = 1);

struct StepRecord {
  int step = 0;
  std::string case_name;
  std::uint64_t power_exponent = 1;
  double delta_before = 0;
  double delta_after = 0;
  int fixed = 0;
  bool has_seven_cycle = false;
  bool degenerate = false;
  int trials_used = 0;
  Perm a_in;  // the powered element fed to the step
  Perm r;
  Perm a_out;
};

struct ReductionResult {
  Perm a_final;
  Ledger ledger;
  std::vector<double> delta_trace;
  std::vector<StepRecord> steps;
  bool reached_target = false;
  bool special_branch_used = false;
  std::string diagnostic;
};

ReductionResult run_reduction(const std::vector<Perm>& S, const Perm& a0, double target_fraction, int trials_per_step,
                              int max_steps, Rng& rng, unsigned workers = 1);

enum class GroupVerdict { sym, alt, proper };
std::string verdict_name(GroupVerdict v);

struct GenerationResult {
  GroupVerdict verdict;
  BigInt order;  // n! or n!/2 for giants, otherwise a lower bound from the randomized chain
  std::vector<int> generating_subset;  // indices into S, filled when trimming
};

GenerationResult check_generates(const std::vector<Perm>& S, Rng& rng, bool trim = false);
BigInt random_schreier_sims_order(const std::vector<Perm>& S, Rng& rng, const BigInt& stop_at);

struct WordScore {
  Word word;  // canonical representative of its symmetry class
  int class_size = 0;
  double mean = 0;
  double std_error = 0;
};

std::vector<Word> balanced_alternating_words(int length);
std::vector<Word> symmetry_class(const Word& w);
Word class_representative(const Word& w);

struct WordSearchResult {
  std::vector<WordScore> ranking;
  std::vector<std::vector<int>> counts;  // counts[word][sample], ranking order
};

// Balanced alternating words of every length in [min_len, max_len] plus extra.
WordSearchResult word_search(int min_len, int max_len, int n, double delta, int samples, Rng& rng, unsigned workers = 1,
                             const std::vector<Word>& extra = {});

// Paired standard error of the mean difference between two rows of counts.
double paired_std_error(const std::vector<int>& x, const std::vector<int>& y);

}  // namespace symdiam
