#pragma once

// Guaranteed digits of a fixed inventory of constants in (0, 1), obtained
// from exact rational enclosures. Every constant has two independent
// enclosure methods so that their digit streams can be cross-checked.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diaglab/digit_stream.hpp"

namespace diaglab {

enum class Constant { Sqrt2Minus1, Sqrt3Minus1, Log2, PiMinus3, EMinus2 };

inline constexpr Constant kAllConstants[] = {
    Constant::Sqrt2Minus1, Constant::Sqrt3Minus1, Constant::Log2,
    Constant::PiMinus3, Constant::EMinus2};

/// Primary:   integer square root / sum 1/(k 2^k) / Machin arctangents / sum 1/k!
/// Secondary: continued-fraction convergents / 2 atanh(1/3) / BBP series /
///            continued fraction of e
enum class Method { Primary, Secondary };

class RefinementBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// lo <= c <= hi.
struct Enclosure {
  mpq_class lo;
  mpq_class hi;
};

/// An enclosure of width at most 2^-bits.
Enclosure enclose(Constant c, Method method, unsigned bits);

/// Command-line name, e.g. "pi-3".
std::string name(Constant c);
/// Display label, e.g. "pi-3" or "log(2)".
std::string label(Constant c);
std::optional<Constant> parse_constant(std::string_view text);

/// Digit stream of the constant. Digits are memoized behind a mutex, so the
/// stream may be queried from several threads.
DigitStream stream_of_constant(Constant c, Base base, Method method = Method::Primary);

/// Interval refinement budget: starting width 2^-32, precision doubled per
/// round.
inline constexpr unsigned kInitialPrecisionBits = 32;
inline constexpr unsigned kMaxRefinementRounds = 20;

}  // namespace diaglab
