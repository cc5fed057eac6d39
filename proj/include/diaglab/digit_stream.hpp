#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "diaglab/numeral.hpp"

namespace diaglab {

/// Eventual behaviour of a fractional digit sequence. For Zero and Max,
/// every digit at position >= from is 0, respectively b-1.
struct Tail {
  enum class Kind { Zero, Max, Unknown };

  Kind kind = Kind::Unknown;
  std::size_t from = 0;

  static Tail zero(std::size_t from) { return {Kind::Zero, from}; }
  static Tail max(std::size_t from) { return {Kind::Max, from}; }
  static Tail unknown() { return {}; }

  friend bool operator==(const Tail&, const Tail&) = default;
};

/// Preperiod/period of an eventually periodic expansion. Digits at
/// positions >= start repeat with the given length.
struct Period {
  std::size_t start = 1;
  std::size_t length = 1;

  friend bool operator==(const Period&, const Period&) = default;
};

/// A possibly infinite sequence of fractional digits 0.d1 d2 d3 ... given by
/// a position -> digit oracle. Positions are 1-based. Copies share the
/// oracle; digit_at behaves as a pure function.
class DigitStream {
 public:
  using Oracle = std::function<Digit(std::size_t)>;

  DigitStream(Base base, Oracle oracle, Tail tail,
              std::optional<RationalValue> value_hint = std::nullopt,
              std::optional<Period> period = std::nullopt);

  Base base() const noexcept { return base_; }
  const Tail& tail() const noexcept { return tail_; }
  const std::optional<RationalValue>& value_hint() const noexcept {
    return value_hint_;
  }
  const std::optional<Period>& period() const noexcept { return period_; }

  Digit digit_at(std::size_t position) const;

  /// Exact limit when it follows from the hint or the tail metadata.
  std::optional<RationalValue> limit_value() const;

  /// "0.d1d2...dk..." with k digits.
  std::string render_prefix(std::size_t digits, bool ellipsis = true) const;

 private:
  Base base_;
  std::shared_ptr<const Oracle> oracle_;
  Tail tail_;
  std::optional<RationalValue> value_hint_;
  std::optional<Period> period_;
};

/// Digits of w followed by zeros. w must have a zero integer part.
DigitStream stream_of_writable(const WritableNumber& w);

/// Long-division expansion of 0 <= x < 1. With Ending::MaxDigit a nonzero
/// writable x is expanded with its (b-1) tail instead.
DigitStream stream_of_rational(const RationalValue& x, Base base,
                               Ending ending = Ending::Zero);

/// The digit stream of w in the requested ending. Zero has no MaxDigit form
/// and raises NoSuchRepresentation.
DigitStream convert_ending(const WritableNumber& w, Ending target);

/// The first k + 1 fractional digits of s, as "0.d1...d(k+1)".
WritableNumber truncate(const DigitStream& s, std::size_t k);

/// truncate(x, k); its value is within b^-k of the stream's limit.
WritableNumber approximate(const DigitStream& x, std::size_t k);

/// The canonical finite digit string with the same value as s, when the
/// stream's limit is known and writable.
std::optional<WritableNumber> writable_form(const DigitStream& s);

/// Re-expresses a stream with a known writable limit in another ending.
/// Zero and streams without a writable limit are returned unchanged.
DigitStream with_ending(const DigitStream& s, Ending ending);

}  // namespace diaglab
