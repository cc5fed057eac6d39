#pragma once

// The diagonal method as a black box: read digit n of row n, replace it,
// and collect the partial antidiagonals. Tail detection is proof-based: it
// relies on the list's significant-digit law, never on a finite window.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diaglab/shuffles.hpp"

namespace diaglab {

class RuleBaseMismatch : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

struct ReplacementRule {
  enum class Kind { BinaryFlip, AddOneMod10, SubOneMod10, PenroseTwoOne, DunhamRandom };

  Kind kind = Kind::BinaryFlip;
  std::uint64_t seed = 0;

  static ReplacementRule flip() { return {Kind::BinaryFlip, 0}; }
  static ReplacementRule add_one() { return {Kind::AddOneMod10, 0}; }
  static ReplacementRule sub_one() { return {Kind::SubOneMod10, 0}; }
  static ReplacementRule penrose() { return {Kind::PenroseTwoOne, 0}; }
  static ReplacementRule dunham(std::uint64_t seed) { return {Kind::DunhamRandom, seed}; }

  unsigned base() const noexcept { return kind == Kind::BinaryFlip ? 2 : 10; }
  bool deterministic() const noexcept { return kind != Kind::DunhamRandom; }
  /// "flip", "add1", "sub1", "penrose", "dunham".
  std::string name() const;
  /// Formula as printed in the tables, e.g. "(x+1) mod 10".
  std::string formula() const;
};

/// Accepts the canonical names and the aliases hawking (add1) and
/// hofstadter (sub1).
ReplacementRule parse_rule(std::string_view name, std::uint64_t seed = 0);

/// Applies a rule row by row. The Dunham generator is owned by the
/// instance, so a fresh applier replays the same digits.
class RuleApplier {
 public:
  explicit RuleApplier(const ReplacementRule& rule) : rule_(rule), gen_(rule.seed) {}

  Digit operator()(Digit x);

 private:
  ReplacementRule rule_;
  std::mt19937_64 gen_;
};

struct DMConfig {
  ListSpec list;
  ReplacementRule rule;
  std::size_t depth = 0;
  /// Entries are re-expressed in this ending before their digits are read.
  std::optional<Ending> ending;
  std::optional<Shuffle> shuffle;
  /// Rank every partial antidiagonal (needs list.rank_of).
  bool positions = true;
};

struct ConstantTail {
  Digit digit;
  std::size_t from;

  friend bool operator==(const ConstantTail&, const ConstantTail&) = default;
};

/// Constant tail of a digit other than 0 or b-1: the limit is a rational
/// with no finite expansion.
struct RepeatingTail {
  Digit digit;
  std::size_t from;
  RationalValue value;

  friend bool operator==(const RepeatingTail&, const RepeatingTail&) = default;
};

struct Membership {
  enum class Kind { InList, NotInListPrefix, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<Index> position;

  friend bool operator==(const Membership&, const Membership&) = default;
};

std::string to_string(Membership::Kind k);

struct DMReport {
  std::string list;
  unsigned base = 2;
  std::string rule;
  std::optional<std::string> shuffle;
  Ending ending = Ending::Zero;
  std::size_t depth = 0;
  std::optional<std::uint64_t> seed;
  unsigned start_index = 0;

  /// Antidiagonal digits, position 1 first. Row start_index + i contributes
  /// digits[i]; the partial antidiagonal of that row is digits[0..i].
  std::vector<Digit> digits;
  std::vector<std::optional<Index>> positions;

  std::optional<ConstantTail> tail;
  std::optional<RepeatingTail> repeating_tail;
  std::optional<RationalValue> limit;
  Membership membership;

  std::size_t rows() const noexcept { return digits.size(); }
  Index row_index(std::size_t i) const { return Index(static_cast<unsigned long>(start_index + i)); }
  /// Partial antidiagonal D|_n for the i-th scanned row.
  WritableNumber prefix(std::size_t i) const;

  friend bool operator==(const DMReport&, const DMReport&) = default;
};

/// The list the configuration actually diagonalizes: shuffled, then
/// re-expressed in the configured ending.
ListSpec effective_list(const DMConfig& cfg);

/// D|_n: digits from row start_index through row n.
WritableNumber antidiagonal_prefix(const DMConfig& cfg, const Index& n);

/// Index of the entry equal to the canonicalized prefix.
Index position_of_prefix(const ListSpec& list, const WritableNumber& prefix);

/// Antidiagonal scan plus tail verdict and membership, without positions.
DMReport detect_tail(const DMConfig& cfg);

DMReport run_dm(const DMConfig& cfg);

nlohmann::json to_json(const DMReport& r);
DMReport report_from_json(const nlohmann::json& j);

/// Aligned table of the trace followed by the verdict lines.
std::string to_text(const DMReport& r);

}  // namespace diaglab
