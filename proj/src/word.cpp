#include "symdiam/word.hpp"

#include <stdexcept>

namespace symdiam {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if ((l.sym != 0 && l.sym != 1) || (l.exp != 1 && l.exp != -1)) throw std::invalid_argument("bad letter");
}

Word Word::w0() { return parse("AbaBABab"); }

Word Word::parse(const std::string& text) {
  if (text.rfind("w0", 0) == 0) {
    if (text == "w0") return w0();
    if (text.size() > 3 && text[2] == '^') return w0().repeat(std::stoi(text.substr(3)));
    throw std::invalid_argument("bad word: " + text);
  }
  std::vector<Letter> out;
  for (char c : text) {
    switch (c) {
      case 'a': out.push_back({0, 1}); break;
      case 'A': out.push_back({0, -1}); break;
      case 'b': out.push_back({1, 1}); break;
      case 'B': out.push_back({1, -1}); break;
      default: throw std::invalid_argument(std::string("bad letter '") + c + "' in word " + text);
    }
  }
  return Word(std::move(out));
}

Word Word::repeat(int k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return Word(std::move(out));
}

Word Word::swapped() const {
  std::vector<Letter> out = letters_;
  for (auto& l : out) l.sym = 1 - l.sym;
  return Word(std::move(out));
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> out(letters_.begin() + k, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + k);
  return Word(std::move(out));
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].sym == letters_[i - 1].sym && letters_[i].exp == -letters_[i - 1].exp) return false;
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  if (letters_.size() < 2) return true;
  const auto& f = letters_.front();
  const auto& l = letters_.back();
  return !(f.sym == l.sym && f.exp == -l.exp);
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    char c = l.sym == 0 ? 'a' : 'b';
    s += l.exp > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return s;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Perm evaluate_word(const Word& w, const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("domain size mismatch");
  const int n = a.n();
  Perm ai = inverse(a), bi = inverse(b);
  const Perm* table[2][2] = {{&ai, &a}, {&bi, &b}};
  // track where each point goes letter by letter
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  for (const auto& l : w.letters()) {
    const Perm& g = *table[l.sym][l.exp > 0];
    for (int i = 0; i < n; ++i) cur[i] = g[cur[i]];
  }
  return Perm::from_raw(std::move(cur));
}

Perm evaluate_power(const Word& w, long long k, const Perm& a, const Perm& b) {
  return power(evaluate_word(w, a, b), k);
}

}  // namespace symdiam
