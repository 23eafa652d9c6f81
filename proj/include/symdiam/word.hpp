#pragma once

#include <string>
#include <vector>

#include "symdiam/perm.hpp"

namespace symdiam {

// symbol 0 is alpha, 1 is beta; exp is +1 or -1
struct Letter {
  int sym;
  int exp;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // 'a' alpha, 'A' alpha^-1, 'b' beta, 'B' beta^-1; "w0" and "w0^k" are accepted too
  static Word parse(const std::string& text);
  static Word w0();

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word repeat(int k) const;
  Word inverse() const;
  Word swapped() const;  // alpha <-> beta
  Word rotated(std::size_t k) const;
  bool is_reduced() const;
  bool is_cyclically_reduced() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

Perm evaluate_word(const Word& w, const Perm& a, const Perm& b);
// w^k evaluated as the k-th power of the image of w
Perm evaluate_power(const Word& w, long long k, const Perm& a, const Perm& b);

}  // namespace symdiam
