#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace singiter {

// A finite binary symbol prefix. The empty word stands for the whole
// sequence space.
class Word {
 public:
  Word() = default;

  Word(std::initializer_list<int> symbols) {
    s_.reserve(symbols.size());
    for (int v : symbols) append(v);
  }

  explicit Word(const std::vector<int>& symbols) {
    s_.reserve(symbols.size());
    for (int v : symbols) append(v);
  }

  // Word of length n whose i-th symbol is bit i of `bits` (LSB first).
  static Word from_index(std::size_t n, std::uint64_t bits) {
    if (n > 64) throw std::invalid_argument("word: from_index supports length <= 64");
    Word w;
    w.s_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.s_.push_back(static_cast<std::uint8_t>((bits >> i) & 1u));
    return w;
  }

  static Word parse(const std::string& bits) {
    Word w;
    w.s_.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("word: symbols must be 0 or 1");
      w.s_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
  }

  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  int operator[](std::size_t i) const { return s_[i]; }

  void append(int symbol) {
    if (symbol != 0 && symbol != 1) throw std::invalid_argument("word: symbols must be 0 or 1");
    s_.push_back(static_cast<std::uint8_t>(symbol));
  }

  std::size_t ones() const noexcept {
    std::size_t k = 0;
    for (auto v : s_) k += v;
    return k;
  }

  Word flipped() const {
    Word w;
    w.s_.reserve(s_.size());
    for (auto v : s_) w.s_.push_back(static_cast<std::uint8_t>(1u - v));
    return w;
  }

  friend Word operator+(const Word& lhs, const Word& rhs) {
    Word w = lhs;
    w.s_.insert(w.s_.end(), rhs.s_.begin(), rhs.s_.end());
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

  std::string str() const {
    std::string out;
    out.reserve(s_.size());
    for (auto v : s_) out.push_back(static_cast<char>('0' + v));
    return out;
  }

  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }

 private:
  std::vector<std::uint8_t> s_;
};

inline Word flip_word(const Word& w) { return w.flipped(); }

}  // namespace singiter
