#include "diaglab/tables.hpp"

#include <algorithm>
#include <sstream>

#include "diaglab/constants.hpp"
#include "diaglab/enumerations.hpp"

namespace diaglab {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::size_t default_rows(int id) {
  switch (id) {
    case 1: return 5;
    case 2: return 9;
    case 4: return 10;
    case 5: return 9;
    case 6: return 4;
    case 7: return 7;
    case 8: return 17;
    case 9: return 39;
  }
  throw UnknownTable("no table " + std::to_string(id));
}

namespace {

constexpr std::size_t kTable6Depth = 64;

Index idx(std::size_t n) { return Index(static_cast<unsigned long>(n)); }

std::string pos_string(const std::optional<Index>& p) { return p ? p->get_str() : "-"; }

std::string binary(std::size_t n) {
  std::string out;
  for (Digit d : integer_digits(idx(n), Base(2))) out += static_cast<char>('0' + d);
  return out;
}

Table table1(std::size_t rows) {
  const ListSpec l1 = l1_list();
  const DMReport r = run_dm({l1, ReplacementRule::flip(), rows});
  Table t{"L1 and its partial antidiagonals",
          {"n", "L1(n)", "D(L1)|n", "Pos(D|n)", "L1(Pos)|n"},
          {}};
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& p = r.positions[i];
    t.rows.push_back({std::to_string(i), l1.entry(idx(i)).render_prefix(std::max<std::size_t>(8, i + 1)),
                      r.prefix(i).to_string(), pos_string(p),
                      p ? truncate(l1.entry(*p), i).to_string() : "-"});
  }
  return t;
}

Table table2(std::size_t rows) {
  const ListSpec l = ldi_list(Base(2));
  Table t{"The list LDI of all binary writable fractions", {"n", "Base2(n)", "LDI(n)"}, {}};
  for (std::size_t n = 0; n < rows; ++n)
    t.rows.push_back({std::to_string(n), binary(n),
                      l.entry(idx(n)).render_prefix(std::max<std::size_t>(8, digit_count(idx(n), Base(2))))});
  return t;
}

Table table4(std::size_t rows) {
  const DMConfig cfg{ldi_list(Base(2)), ReplacementRule::flip(), rows, std::nullopt, s0_shuffle()};
  const ListSpec l = effective_list(cfg);
  const DMReport r = run_dm(cfg);
  Table t{"S0-shuffled LDI and the diagonal method",
          {"n", "S0(n)", "L'DI(n)", "D(L'DI)|n", "Pos(D|n)"},
          {}};
  for (std::size_t i = 0; i < rows; ++i)
    t.rows.push_back({std::to_string(i), s0(idx(i)).get_str(),
                      l.entry(idx(i)).render_prefix(std::max<std::size_t>(11, i + 1)),
                      r.prefix(i).to_string(), pos_string(r.positions[i])});
  return t;
}

Table table5(std::size_t rows) {
  const ListSpec l = ldi_list(Base(2), Ending::MaxDigit, true);
  const DMReport r = run_dm({l, ReplacementRule::flip(), rows});
  Table t{"1-ending LDI without zero and the diagonal method",
          {"n", "L''DI(n)", "D(L''DI)|n", "Pos(D|n)"},
          {}};
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t n = i + 1;
    t.rows.push_back({std::to_string(n), l.entry(idx(n)).render_prefix(std::max<std::size_t>(11, n)),
                      r.prefix(i).to_string(), pos_string(r.positions[i])});
  }
  return t;
}

Table table6(std::size_t rows) {
  const auto variants = table6_variants(kTable6Depth);
  if (rows > variants.size()) throw std::invalid_argument("table 6 has 4 rows");
  Table t{"Base-10 variants of the diagonal method applied to LDI",
          {"Author", "Replacement digit", "Can be forced to fail?", "Ending", "S0 applied", "Val(D)"},
          {}};
  for (std::size_t i = 0; i < rows; ++i) {
    const Variant& v = variants[i];
    const DMReport r = detect_tail(v.config);
    std::string value = "-";
    if (r.limit) value = r.limit->to_string();
    else if (r.repeating_tail) value = "rational";
    else if (!v.config.rule.deterministic()) value = "random";
    t.rows.push_back({v.author, v.config.rule.formula(),
                      r.membership.kind == Membership::Kind::InList ? "yes" : "no",
                      v.ending_label, v.s0_label, value});
  }
  return t;
}

Table table7(std::size_t rows) {
  const ListSpec pool = table7_pool();
  if (rows > pool.size->get_ui()) throw std::invalid_argument("table 7 has 7 rows");
  const ListSpec reordered = table7_reordered(rows);
  Table t{"Reordering a list of reals to match the diagonal of L''DI",
          {"n", "LR(n)", "Base2(LR(n))", "L'R(n)", "Base2(L'R(n))"},
          {}};
  for (std::size_t n = 1; n <= rows; ++n) {
    const Index i = idx(n);
    t.rows.push_back({std::to_string(n), pool.label_at(i),
                      with_ending(pool.entry(i), Ending::MaxDigit).render_prefix(11),
                      reordered.label_at(i), reordered.entry(i).render_prefix(11)});
  }
  return t;
}

Table table8(std::size_t rows) {
  const std::size_t bits = std::max<std::size_t>(7, binary(rows - 1).size());
  Table t{"Non-negative integers and their binary choice functions", {"n"}, {}};
  for (std::size_t k = bits; k-- > 0;)
    t.columns.push_back(k == 0 ? "0" : k == 1 ? "s(0)" : "s^" + std::to_string(k) + "(0)");
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<std::string> row{successor_notation(n)};
    const auto chosen = selector_decode(SelectorCode(idx(n)));
    for (std::size_t k = bits; k-- > 0;) row.push_back(chosen.count(k) ? "1" : "0");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table9(std::size_t rows) {
  unsigned k = 3;
  while (applicative_count(k, k) < rows) ++k;
  const auto lex = lex_list(k, k);
  const auto app = applicative_list(k, k);
  const std::string shape = " (" + std::to_string(k) + "x" + std::to_string(k) + ")";
  Table t{"Lexicographic and applicative orderings", {"n", "Standard" + shape, "Applicative" + shape}, {}};
  for (std::size_t i = 0; i < rows; ++i)
    t.rows.push_back({std::to_string(i + 1), to_string(lex[i]), to_string(app[i])});
  return t;
}

}  // namespace

std::string successor_notation(std::size_t n) {
  if (n == 0) return "0";
  if (n <= 3) {
    std::string s = "0";
    for (std::size_t i = 0; i < n; ++i) s = "s(" + s + ")";
    return s;
  }
  return "s^" + std::to_string(n) + "(0)";
}

Table make_table(int id, std::optional<std::size_t> rows) {
  const std::size_t n = rows.value_or(default_rows(id));
  if (n == 0) throw std::invalid_argument("a table needs at least one row");
  switch (id) {
    case 1: return table1(n);
    case 2: return table2(n);
    case 4: return table4(n);
    case 5: return table5(n);
    case 6: return table6(n);
    case 7: return table7(n);
    case 8: return table8(n);
    case 9: return table9(n);
  }
  throw UnknownTable("no table " + std::to_string(id));
}

Table make_grid(std::size_t integer_rows, std::size_t fraction_columns) {
  if (integer_rows == 0 || fraction_columns == 0)
    throw std::invalid_argument("grid needs at least one row and column");
  const Base two(2);
  Table t{"Integer and fractional parts of W2", {""}, {}};
  std::vector<std::string> fracs;
  for (std::size_t j = 0; j < fraction_columns; ++j) {
    const std::string f = di(idx(j), two).to_string();
    fracs.push_back(f.substr(1));
    t.columns.push_back(f.substr(1));
  }
  for (std::size_t i = 0; i < integer_rows; ++i) {
    std::vector<std::string> row{binary(i)};
    for (const auto& f : fracs) row.push_back(binary(i) + f);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) s += "  ";
      s += cells[c];
      s.append(width[c] - cells[c].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(t.columns);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  for (const auto& row : t.rows) line(row);
  return out.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

nlohmann::json render_json(const Table& t) {
  return {{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}};
}

std::string render(const Table& t, Format f) {
  switch (f) {
    case Format::Text: return render_text(t);
    case Format::Csv: return render_csv(t);
    case Format::Json: return render_json(t).dump(2) + "\n";
  }
  return {};
}

ListSpec table7_pool() {
  const Base two(2);
  std::vector<std::pair<std::string, DigitStream>> entries{
      {"3/4", stream_of_rational(RationalValue(3, 4), two)},
      {label(Constant::Log2), stream_of_constant(Constant::Log2, two)},
      {"0", stream_of_rational(RationalValue(0, 1), two)},
      {label(Constant::Sqrt2Minus1), stream_of_constant(Constant::Sqrt2Minus1, two)},
      {label(Constant::Sqrt3Minus1), stream_of_constant(Constant::Sqrt3Minus1, two)},
      {label(Constant::PiMinus3), stream_of_constant(Constant::PiMinus3, two)},
      {label(Constant::EMinus2), stream_of_constant(Constant::EMinus2, two)},
  };
  return finite_list(two, 1, std::move(entries), Ending::Zero, "table7-pool");
}

ListSpec table7_reordered(std::size_t depth) {
  return skeleton_reorder(table7_pool(), ldi_list(Base(2), Ending::MaxDigit, true),
                          {{RationalValue(3, 4), 3}}, depth);
}

std::vector<Variant> table6_variants(std::size_t depth, std::uint64_t dunham_seed) {
  const ListSpec l = ldi_list(Base(10));
  return {
      {"S. Hawking", "9-ending", "yes", {l, ReplacementRule::add_one(), depth, Ending::MaxDigit, s0_shuffle()}},
      {"D. R. Hofstadter", "0-ending", "yes", {l, ReplacementRule::sub_one(), depth, Ending::Zero, s0_shuffle()}},
      {"R. Penrose", "any", "-", {l, ReplacementRule::penrose(), depth}},
      {"W. Dunham", "any", "-", {l, ReplacementRule::dunham(dunham_seed), depth}},
  };
}

}  // namespace diaglab
