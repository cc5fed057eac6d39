#pragma once

// Enumerated lists of digit streams: an index -> stream map with an optional
// exact rank function, the ending convention its entries are written in,
// and the first valid index.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaglab/digit_stream.hpp"

namespace diaglab {

/// Structural guarantee used to prove the shape of a diagonal: every row
/// n >= from_row holds a nonzero writable number whose significant digits
/// all lie strictly before the diagonal position of row n. Past that
/// position the row reads 0 (zero ending) or b-1 (max-digit ending).
struct SignificantDigitLaw {
  Index from_row;
};

struct ListSpec {
  Base base{2};
  unsigned start_index = 0;
  Ending ending = Ending::Zero;
  std::string description;

  std::function<DigitStream(const Index&)> entry_at;
  /// Empty when the list has no rank function. Returns nullopt for values
  /// that are not listed.
  std::function<std::optional<Index>(const WritableNumber&)> rank_of;
  std::optional<SignificantDigitLaw> law;
  /// Number of rows, for finite lists.
  std::optional<Index> size;
  std::function<std::string(const Index&)> label_at;

  DigitStream entry(const Index& n) const;
  bool has_rank() const noexcept { return static_cast<bool>(rank_of); }
  std::optional<Index> rank(const WritableNumber& w) const;
  bool contains_row(const Index& n) const;

  /// Fractional digit read by the diagonal at row n: n + 1 - start_index.
  std::size_t diagonal_position(std::size_t row) const noexcept {
    return row + 1 - start_index;
  }
};

/// Table-1 list: 0.1, 0.0, 0.01, 0.011, 0.0111, ...
ListSpec l1_list();

/// Digital inversion of 0, 1, 2, ... in the given base. With drop_zero the
/// list starts at index 1 and omits 0.0.
ListSpec ldi_list(Base base, Ending ending = Ending::Zero, bool drop_zero = false);

/// A finite list of labelled streams starting at start_index; rank_of
/// matches exact writable values.
ListSpec finite_list(Base base, unsigned start_index,
                     std::vector<std::pair<std::string, DigitStream>> entries,
                     Ending ending, std::string description);

/// Same values, entries re-expressed in another ending convention. Zero and
/// non-writable entries are unchanged.
ListSpec reexpress(const ListSpec& list, Ending ending);

}  // namespace diaglab
