#pragma once

// Index permutations applied to lists, and the reordering of a pool of
// numbers so that its diagonal imitates the diagonal of a skeleton list.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diaglab/lists.hpp"

namespace diaglab {

class PoolExhausted : public Error {
 public:
  using Error::Error;
};

/// A bijection on indices. With a support bound B, map(n) = n for n > B.
struct Shuffle {
  std::function<Index(const Index&)> map;
  std::function<Index(const Index&)> inverse;
  std::optional<Index> support_bound;
  std::string description;
};

/// S0(n) = 1 - n for n <= 1, n otherwise.
Index s0(const Index& n);

Shuffle identity_shuffle();
Shuffle s0_shuffle();
Shuffle swap_shuffle(const Index& i, const Index& j);
/// (first then second): map(n) = second.map(first.map(n)).
Shuffle compose(const Shuffle& first, const Shuffle& second);

/// "s0", "id", "swap:i,j", or "compose:A+B+..." of those.
Shuffle parse_shuffle(std::string_view text);

/// entry'(n) = entry(map(n)), rank'(w) = inverse(rank(w)).
ListSpec apply_shuffle(const Shuffle& s, const ListSpec& list);

/// Place the pool entry whose exact value is `value` at row `line`.
struct Pin {
  RationalValue value;
  std::size_t line;
};

/// Reorders the first rows of `pool` so that, for every unpinned row k among
/// the first `depth` rows, the diagonal digit of row k matches the skeleton's.
/// Pinned entries are moved into place first (remove, then insert). When row
/// k does not match, the first later unpinned row that does is swapped in; at
/// most `scan_budget` rows past the depth are consulted for infinite pools.
/// Pool digits are read in the skeleton's ending convention.
ListSpec skeleton_reorder(const ListSpec& pool, const ListSpec& skeleton,
                          const std::vector<Pin>& pins, std::size_t depth,
                          std::size_t scan_budget = 4096);

}  // namespace diaglab
