#pragma once

// Bijective enumerations and their rank/unrank codecs: digital inversion of
// the integers into [0, 1), the anti-diagonal traversal of all binary
// writable numbers, subset selectors, and the lexicographic and applicative
// orders on words over a finite alphabet.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diaglab/numeral.hpp"

namespace diaglab {

class OutOfAlphabet : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Digital inversion

/// 0.x_k...x_1 for n = x_1...x_k in the given base; di(0) = "0.0".
WritableNumber di(const Index& n, Base base = Base(2));

/// Inverse of di. The prefix is canonicalized first, so trailing zeros of a
/// truncated stream do not change its rank.
Index di_inverse(const WritableNumber& prefix);

/// Number of base-b digits of n (1 for n = 0).
std::size_t digit_count(const Index& n, Base base);

// ---------------------------------------------------------------------------
// All binary writable numbers, integer part x L_DI traversed by anti-diagonals

WritableNumber w2_list(const Index& n);
Index w2_rank(const WritableNumber& w);

// ---------------------------------------------------------------------------
// Selectors: bit i of the code marks element i of an ordered set

class SelectorCode {
 public:
  SelectorCode() = default;
  explicit SelectorCode(mpz_class value);

  const mpz_class& value() const noexcept { return value_; }

  friend bool operator==(const SelectorCode& a, const SelectorCode& b) {
    return a.value_ == b.value_;
  }

 private:
  mpz_class value_{0};
};

std::set<std::size_t> selector_decode(const SelectorCode& c);
SelectorCode selector_encode(const std::set<std::size_t>& s);

/// Elements of `items` whose positions are selected by c.
template <typename T>
std::vector<T> select(const SelectorCode& c, std::span<const T> items) {
  std::vector<T> out;
  for (std::size_t i : selector_decode(c)) {
    if (i >= items.size()) throw OutOfRange("selector bit beyond the listed set");
    out.push_back(items[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words over the alphabet {1..n}

using Word = std::vector<unsigned>;

/// Concatenated decimal symbols ("312"); symbols above 9 are space separated.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

/// Every nonempty word of length <= max_len over {1..symbols}, by length and
/// then lexicographically.
std::vector<Word> lex_list(unsigned symbols, unsigned max_len);

/// The applicative block order App(n): App(n-1), then the shorter words
/// containing symbol n, then all words of length n. Only square (n, n)
/// blocks are defined.
std::vector<Word> applicative_list(unsigned symbols, unsigned max_len);

/// 1-based position of w in App(symbols).
Index applicative_rank(const Word& w, unsigned symbols);
Word applicative_unrank(const Index& position, unsigned symbols);

/// n + n^2 + ... + n^d
Index applicative_count(unsigned symbols, unsigned max_len);

}  // namespace diaglab
