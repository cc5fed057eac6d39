#include "diaglab/lists.hpp"

#include <algorithm>
#include <memory>

#include "diaglab/enumerations.hpp"

namespace diaglab {

DigitStream ListSpec::entry(const Index& n) const {
  if (!contains_row(n))
    throw std::out_of_range("row " + n.get_str() + " outside list " + description);
  return entry_at(n);
}

std::optional<Index> ListSpec::rank(const WritableNumber& w) const {
  if (!rank_of) return std::nullopt;
  return rank_of(w);
}

bool ListSpec::contains_row(const Index& n) const {
  if (n < start_index) return false;
  return !size || n < *size + start_index;
}

namespace {

DigitStream expressed(const WritableNumber& w, Ending ending) {
  if (ending == Ending::MaxDigit && !w.is_zero()) return convert_ending(w, ending);
  return stream_of_writable(w);
}

}  // namespace

ListSpec l1_list() {
  const Base two(2);
  ListSpec list;
  list.base = two;
  list.description = "l1";
  list.entry_at = [two](const Index& n) {
    if (n == 0) return stream_of_writable(WritableNumber(two, {0}, {1}));
    if (n == 1) return stream_of_writable(WritableNumber(two, {0}, {0}));
    std::vector<Digit> digits(n.get_ui(), 1);
    digits[0] = 0;
    return stream_of_writable(WritableNumber(two, {0}, std::move(digits)));
  };
  list.rank_of = [](const WritableNumber& w) -> std::optional<Index> {
    if (w.base() != Base(2) || !w.integer_part_is_zero()) return std::nullopt;
    const auto c = w.canonical();
    const auto& d = c.fractional_digits();
    if (c.is_zero()) return Index(1);
    if (d.size() == 1 && d[0] == 1) return Index(0);
    if (d[0] != 0 || d.size() < 2) return std::nullopt;
    if (!std::all_of(d.begin() + 1, d.end(), [](Digit x) { return x == 1; }))
      return std::nullopt;
    return Index(static_cast<unsigned long>(d.size()));
  };
  // Row n >= 2 is 0.01...1 with its last 1 at position n.
  list.law = SignificantDigitLaw{2};
  return list;
}

ListSpec ldi_list(Base base, Ending ending, bool drop_zero) {
  ListSpec list;
  list.base = base;
  list.ending = ending;
  list.start_index = drop_zero ? 1 : 0;
  list.description = "ldi";
  list.entry_at = [base, ending](const Index& n) { return expressed(di(n, base), ending); };
  list.rank_of = [base, drop_zero](const WritableNumber& w) -> std::optional<Index> {
    if (w.base() != base || !w.integer_part_is_zero()) return std::nullopt;
    if (drop_zero && w.is_zero()) return std::nullopt;
    return di_inverse(w);
  };
  // di(n) has digit_count(n) significant digits; n - digit_count(n) never
  // decreases, so the first row where the diagonal clears them starts the law.
  std::size_t row = std::max<std::size_t>(list.start_index, 1);
  while (list.diagonal_position(row) <= digit_count(Index(static_cast<unsigned long>(row)), base))
    ++row;
  list.law = SignificantDigitLaw{Index(static_cast<unsigned long>(row))};
  return list;
}

ListSpec finite_list(Base base, unsigned start_index,
                     std::vector<std::pair<std::string, DigitStream>> entries,
                     Ending ending, std::string description) {
  auto shared = std::make_shared<const std::vector<std::pair<std::string, DigitStream>>>(
      std::move(entries));
  ListSpec list;
  list.base = base;
  list.start_index = start_index;
  list.ending = ending;
  list.description = std::move(description);
  list.size = Index(static_cast<unsigned long>(shared->size()));
  list.entry_at = [shared, start_index](const Index& n) {
    return (*shared)[n.get_ui() - start_index].second;
  };
  list.label_at = [shared, start_index](const Index& n) {
    return (*shared)[n.get_ui() - start_index].first;
  };
  list.rank_of = [shared, start_index, base](const WritableNumber& w) -> std::optional<Index> {
    if (w.base() != base) return std::nullopt;
    const WritableNumber target = w.canonical();
    for (std::size_t i = 0; i < shared->size(); ++i) {
      const auto form = writable_form((*shared)[i].second);
      if (form && *form == target) return Index(static_cast<unsigned long>(i + start_index));
    }
    return std::nullopt;
  };
  return list;
}

ListSpec reexpress(const ListSpec& list, Ending ending) {
  if (list.ending == ending) return list;
  ListSpec out = list;
  out.ending = ending;
  out.entry_at = [inner = list.entry_at, ending](const Index& n) {
    return with_ending(inner(n), ending);
  };
  return out;
}

}  // namespace diaglab
