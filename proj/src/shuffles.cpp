#include "diaglab/shuffles.hpp"

#include <algorithm>
#include <set>

namespace diaglab {

Index s0(const Index& n) {
  if (sgn(n) < 0) throw std::invalid_argument("negative index");
  return n <= 1 ? Index(1 - n) : n;
}

Shuffle identity_shuffle() {
  auto id = [](const Index& n) { return n; };
  return {id, id, Index(0), "id"};
}

Shuffle s0_shuffle() { return {s0, s0, Index(1), "s0"}; }

Shuffle swap_shuffle(const Index& i, const Index& j) {
  if (sgn(i) < 0 || sgn(j) < 0) throw std::invalid_argument("negative index");
  auto f = [i, j](const Index& n) -> Index {
    if (n == i) return j;
    if (n == j) return i;
    return n;
  };
  return {f, f, std::max(i, j), "swap:" + i.get_str() + "," + j.get_str()};
}

Shuffle compose(const Shuffle& first, const Shuffle& second) {
  Shuffle out;
  out.map = [a = first.map, b = second.map](const Index& n) { return b(a(n)); };
  out.inverse = [a = first.inverse, b = second.inverse](const Index& n) { return a(b(n)); };
  if (first.support_bound && second.support_bound)
    out.support_bound = std::max(*first.support_bound, *second.support_bound);
  out.description = first.description + "+" + second.description;
  return out;
}

namespace {

Index parse_index(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("malformed index '" + std::string(text) + "'");
  return Index(std::string(text));
}

Shuffle parse_single(std::string_view text) {
  if (text == "s0") return s0_shuffle();
  if (text == "id") return identity_shuffle();
  if (text.starts_with("swap:")) {
    text.remove_prefix(5);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("swap expects 'swap:i,j'");
    return swap_shuffle(parse_index(text.substr(0, comma)), parse_index(text.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown shuffle '" + std::string(text) + "'");
}

}  // namespace

Shuffle parse_shuffle(std::string_view text) {
  if (!text.starts_with("compose:")) return parse_single(text);
  text.remove_prefix(8);
  std::optional<Shuffle> acc;
  while (!text.empty()) {
    const auto plus = text.find('+');
    Shuffle next = parse_single(text.substr(0, plus));
    acc = acc ? compose(*acc, next) : next;
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  if (!acc) throw std::invalid_argument("empty composition");
  acc->description = "compose:" + acc->description;
  return *acc;
}

ListSpec apply_shuffle(const Shuffle& s, const ListSpec& list) {
  ListSpec out = list;
  out.entry_at = [inner = list.entry_at, map = s.map](const Index& n) { return inner(map(n)); };
  if (list.rank_of) {
    out.rank_of = [inner = list.rank_of, inv = s.inverse](const WritableNumber& w) -> std::optional<Index> {
      auto r = inner(w);
      if (!r) return std::nullopt;
      return inv(*r);
    };
  }
  if (list.label_at)
    out.label_at = [inner = list.label_at, map = s.map](const Index& n) { return inner(map(n)); };
  if (list.law && s.support_bound)
    out.law = SignificantDigitLaw{std::max(list.law->from_row, Index(*s.support_bound + 1))};
  else
    out.law.reset();
  out.description = list.description + "*" + s.description;
  return out;
}

namespace {

std::string default_label(const DigitStream& s) {
  if (auto v = s.limit_value()) return v->to_string();
  return s.render_prefix(11);
}

}  // namespace

ListSpec skeleton_reorder(const ListSpec& pool, const ListSpec& skeleton,
                          const std::vector<Pin>& pins, std::size_t depth,
                          std::size_t scan_budget) {
  if (pool.base != skeleton.base)
    throw std::invalid_argument("pool and skeleton bases differ");
  const std::size_t start = skeleton.start_index;

  std::size_t window = depth + scan_budget;
  if (pool.size) window = std::min<std::size_t>(window, pool.size->get_ui());

  std::vector<std::pair<std::string, DigitStream>> rows;
  rows.reserve(window);
  for (std::size_t i = 0; i < window; ++i) {
    const Index n(static_cast<unsigned long>(pool.start_index + i));
    DigitStream s = with_ending(pool.entry(n), skeleton.ending);
    std::string label = pool.label_at ? pool.label_at(n) : default_label(s);
    rows.emplace_back(std::move(label), std::move(s));
  }

  // Step 2: move each pinned value to its line, shifting the rows between.
  std::set<std::size_t> pinned;
  for (const Pin& p : pins) {
    if (p.line < start || p.line - start >= window)
      throw PoolExhausted("pinned line " + std::to_string(p.line) + " is outside the pool");
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
      const auto v = r.second.limit_value();
      return v && *v == p.value;
    });
    if (it == rows.end())
      throw PoolExhausted("pinned value " + p.value.to_string() + " not found in the pool");
    auto moved = std::move(*it);
    rows.erase(it);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(p.line - start), std::move(moved));
    pinned.insert(p.line - start);
  }

  // Steps 3 and 4: match the skeleton's diagonal digit row by row.
  const std::size_t rows_out = std::min(depth, rows.size());
  for (std::size_t i = 0; i < rows_out; ++i) {
    if (pinned.count(i)) continue;
    const std::size_t row = start + i;
    const std::size_t pos = skeleton.diagonal_position(row);
    const Digit want = skeleton.entry(Index(static_cast<unsigned long>(row))).digit_at(pos);
    if (rows[i].second.digit_at(pos) == want) continue;
    std::size_t m = i + 1;
    while (m < rows.size() && (pinned.count(m) || rows[m].second.digit_at(pos) != want)) ++m;
    if (m == rows.size())
      throw PoolExhausted("no pool entry has digit " + std::to_string(want) + " at position " +
                          std::to_string(pos) + " for row " + std::to_string(row));
    std::swap(rows[i], rows[m]);
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(rows_out), rows.end());
  return finite_list(skeleton.base, skeleton.start_index, std::move(rows), skeleton.ending,
                     "reordered");
}

}  // namespace diaglab
