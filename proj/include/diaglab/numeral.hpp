#pragma once

// Positional numerals in an arbitrary base b >= 2: exact valuation,
// rendering, canonical forms and integer/fractional splitting.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace diaglab {

using Digit = unsigned;
using Index = mpz_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotWritable : public Error {
 public:
  using Error::Error;
};

class NoSuchRepresentation : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kDefaultSymbols =
    "0123456789abcdefghijklmnopqrstuvwxyz";

class Base {
 public:
  explicit Base(unsigned b);

  unsigned value() const noexcept { return b_; }
  Digit max_digit() const noexcept { return b_ - 1; }

  friend bool operator==(Base, Base) = default;

 private:
  unsigned b_;
};

/// Which of the two digit strings of a nonzero writable value is meant:
/// the terminating one (...000) or the one ending in (b-1)(b-1)(b-1)...
enum class Ending { Zero, MaxDigit };

std::string to_string(Ending e);

/// Exact non-negative rational in lowest terms.
class RationalValue {
 public:
  RationalValue() = default;
  explicit RationalValue(const mpq_class& q);
  RationalValue(const mpz_class& numerator, const mpz_class& denominator);
  RationalValue(long numerator, unsigned long denominator);

  /// Parses "p/q" or "p".
  static RationalValue parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  friend bool operator==(const RationalValue& a, const RationalValue& b) {
    return a.q_ == b.q_;
  }
  friend bool operator<(const RationalValue& a, const RationalValue& b) {
    return a.q_ < b.q_;
  }

 private:
  mpq_class q_{0};
};

/// A finite digit string w_p...w_0.w_-1...w_-q in base b.
///
/// The integer part never carries leading zeros (zero is the single digit
/// 0) and the fractional part always has at least one digit. Trailing
/// fractional zeros are kept as given, so truncated prefixes such as
/// "0.110" survive; canonical() strips them.
class WritableNumber {
 public:
  WritableNumber(Base base, std::vector<Digit> integer_digits,
                 std::vector<Digit> fractional_digits);

  /// Parses "<int>.<frac>" (or "<int>") using the default symbol table.
  static WritableNumber parse(std::string_view text, Base base);

  Base base() const noexcept { return base_; }
  const std::vector<Digit>& integer_digits() const noexcept { return int_; }
  const std::vector<Digit>& fractional_digits() const noexcept { return frac_; }

  bool integer_part_is_zero() const noexcept {
    return int_.size() == 1 && int_[0] == 0;
  }
  bool is_zero() const noexcept;
  bool is_canonical() const noexcept;
  WritableNumber canonical() const;

  std::string to_string(std::string_view symbols = kDefaultSymbols) const;

  friend bool operator==(const WritableNumber&, const WritableNumber&) = default;

 private:
  Base base_;
  std::vector<Digit> int_;
  std::vector<Digit> frac_;
};

RationalValue value_of(const WritableNumber& w);

/// Canonical digit string of x in the given base; throws NotWritable when
/// the reduced denominator has a prime factor that does not divide the base.
WritableNumber render(const RationalValue& x, Base base);

bool is_writable(const RationalValue& x, Base base);

/// floor(w) and {w} as writable numbers of the same base.
std::pair<WritableNumber, WritableNumber> split(const WritableNumber& w);

/// Digits of the non-negative integer n in the given base, most significant
/// first; zero yields the single digit 0.
std::vector<Digit> integer_digits(const mpz_class& n, Base base);

mpz_class integer_from_digits(const std::vector<Digit>& digits, Base base);

std::string digit_symbol(Digit d, Base base,
                         std::string_view symbols = kDefaultSymbols);

}  // namespace diaglab
