#include "diaglab/enumerations.hpp"

#include <algorithm>

namespace diaglab {

namespace {

mpz_class power(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Words of length < k over {1..k} that contain k.
mpz_class middle_block_size(unsigned k) {
  mpz_class total = 0;
  for (unsigned len = 1; len < k; ++len) total += power(k, len) - power(k - 1, len);
  return total;
}

void validate_word(const Word& w, unsigned symbols) {
  if (w.empty()) throw std::invalid_argument("empty word");
  for (unsigned s : w)
    if (s < 1 || s > symbols)
      throw OutOfAlphabet("symbol " + std::to_string(s) + " outside {1.." +
                          std::to_string(symbols) + "}");
}

}  // namespace

// ---------------------------------------------------------------------------

WritableNumber di(const Index& n, Base base) {
  std::vector<Digit> digits = integer_digits(n, base);
  std::reverse(digits.begin(), digits.end());
  return WritableNumber(base, {0}, std::move(digits));
}

Index di_inverse(const WritableNumber& prefix) {
  if (!prefix.integer_part_is_zero())
    throw std::invalid_argument("digital inversion applies to fractional numbers: " +
                                prefix.to_string());
  std::vector<Digit> digits = prefix.canonical().fractional_digits();
  std::reverse(digits.begin(), digits.end());
  return integer_from_digits(digits, prefix.base());
}

std::size_t digit_count(const Index& n, Base base) {
  return integer_digits(n, base).size();
}

// ---------------------------------------------------------------------------

WritableNumber w2_list(const Index& n) {
  if (sgn(n) < 0) throw std::invalid_argument("negative index");
  // Anti-diagonal s holds the cells (i, s - i), i = 0..s.
  mpz_class root;
  mpz_class disc = 8 * n + 1;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  mpz_class s = (root - 1) / 2;
  const mpz_class i = n - s * (s + 1) / 2;
  const mpz_class j = s - i;
  const Base two(2);
  return WritableNumber(two, integer_digits(i, two), di(j, two).fractional_digits());
}

Index w2_rank(const WritableNumber& w) {
  if (w.base() != Base(2)) throw std::invalid_argument("w2_rank expects base 2");
  const auto [whole, frac] = split(w.canonical());
  const mpz_class i = integer_from_digits(whole.integer_digits(), w.base());
  const mpz_class j = di_inverse(frac);
  const mpz_class s = i + j;
  return s * (s + 1) / 2 + i;
}

// ---------------------------------------------------------------------------

SelectorCode::SelectorCode(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::invalid_argument("selector codes are non-negative");
}

std::set<std::size_t> selector_decode(const SelectorCode& c) {
  std::set<std::size_t> out;
  if (c.value() == 0) return out;
  const std::size_t bits = mpz_sizeinbase(c.value().get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i)
    if (mpz_tstbit(c.value().get_mpz_t(), i)) out.insert(i);
  return out;
}

SelectorCode selector_encode(const std::set<std::size_t>& s) {
  mpz_class v = 0;
  for (std::size_t i : s) mpz_setbit(v.get_mpz_t(), i);
  return SelectorCode(v);
}

// ---------------------------------------------------------------------------

std::string to_string(const Word& w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](unsigned s) { return s > 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(' ') != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ') ++j;
      if (j > i) w.push_back(static_cast<unsigned>(std::stoul(std::string(text.substr(i, j - i)))));
      i = j;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed word");
      w.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

std::vector<Word> lex_list(unsigned symbols, unsigned max_len) {
  if (symbols < 1 || max_len < 1) throw std::invalid_argument("lex_list needs n, d >= 1");
  std::vector<Word> out;
  for (unsigned len = 1; len <= max_len; ++len) {
    Word w(len, 1);
    for (;;) {
      out.push_back(w);
      // Odometer increment, last position fastest.
      std::size_t i = len;
      while (i > 0 && w[i - 1] == symbols) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return out;
}

std::vector<Word> applicative_list(unsigned symbols, unsigned max_len) {
  if (symbols != max_len)
    throw InvalidShape("applicative blocks are defined for square (n, n) shapes only");
  if (symbols < 1) throw std::invalid_argument("applicative_list needs n >= 1");
  std::vector<Word> out;
  for (unsigned k = 1; k <= symbols; ++k) {
    if (k > 1) {
      for (Word& w : lex_list(k, k - 1))
        if (std::find(w.begin(), w.end(), k) != w.end()) out.push_back(std::move(w));
    }
    for (Word& w : lex_list(k, k))
      if (w.size() == k) out.push_back(std::move(w));
  }
  return out;
}

Index applicative_count(unsigned symbols, unsigned max_len) {
  if (symbols < 1 || max_len < 1) throw std::invalid_argument("count needs n, d >= 1");
  mpz_class total = 0;
  for (unsigned k = 1; k <= max_len; ++k) total += power(symbols, k);
  return total;
}

Index applicative_rank(const Word& w, unsigned symbols) {
  validate_word(w, symbols);
  if (w.size() > symbols)
    throw OutOfRange("word longer than " + std::to_string(symbols) + " symbols");
  const unsigned len = static_cast<unsigned>(w.size());
  const unsigned k = std::max(len, *std::max_element(w.begin(), w.end()));
  mpz_class pos = k > 1 ? applicative_count(k - 1, k - 1) : mpz_class(0);

  if (len == k) {
    pos += middle_block_size(k);
    for (unsigned i = 0; i < len; ++i) pos += (w[i] - 1) * power(k, len - 1 - i);
    return pos + 1;
  }

  for (unsigned l = 1; l < len; ++l) pos += power(k, l) - power(k - 1, l);
  bool seen = false;
  for (unsigned i = 0; i < len; ++i) {
    const unsigned rem = len - 1 - i;
    const mpz_class completions = seen ? power(k, rem) : power(k, rem) - power(k - 1, rem);
    pos += (w[i] - 1) * completions;
    seen = seen || w[i] == k;
  }
  return pos + 1;
}

Word applicative_unrank(const Index& position, unsigned symbols) {
  if (symbols < 1) throw std::invalid_argument("applicative_unrank needs n >= 1");
  if (position < 1 || position > applicative_count(symbols, symbols))
    throw OutOfRange("position " + position.get_str() + " outside App(" +
                     std::to_string(symbols) + ")");
  unsigned k = 1;
  while (applicative_count(k, k) < position) ++k;
  mpz_class r = position - 1 - (k > 1 ? applicative_count(k - 1, k - 1) : mpz_class(0));

  const mpz_class middle = middle_block_size(k);
  if (r >= middle) {
    r -= middle;
    Word w(k, 1);
    for (unsigned i = k; i-- > 0;) {
      const mpz_class d = r % k;
      w[i] = static_cast<unsigned>(d.get_ui()) + 1;
      r /= k;
    }
    return w;
  }

  unsigned len = 1;
  for (;; ++len) {
    const mpz_class block = power(k, len) - power(k - 1, len);
    if (r < block) break;
    r -= block;
  }
  Word w;
  bool seen = false;
  for (unsigned i = 0; i < len; ++i) {
    const unsigned rem = len - 1 - i;
    for (unsigned c = 1; c <= k; ++c) {
      const bool has = seen || c == k;
      const mpz_class count = has ? power(k, rem) : power(k, rem) - power(k - 1, rem);
      if (r < count) {
        w.push_back(c);
        seen = has;
        break;
      }
      r -= count;
    }
  }
  return w;
}

}  // namespace diaglab
