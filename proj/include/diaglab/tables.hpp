#pragma once

// Reference tables as data, with text, CSV and JSON renderers. Default row
// counts reproduce the printed tables; larger counts extend them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diaglab/diagonalizer.hpp"

namespace diaglab {

class UnknownTable : public Error {
 public:
  using Error::Error;
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline constexpr int kTableIds[] = {1, 2, 4, 5, 6, 7, 8, 9};

/// Printed row count of a table.
std::size_t default_rows(int id);

/// Builds table `id` with `rows` rows (default_rows(id) when absent).
Table make_table(int id, std::optional<std::size_t> rows = std::nullopt);

/// Integer part x L_DI grid traversed by w2_list.
Table make_grid(std::size_t integer_rows = 7, std::size_t fraction_columns = 6);

std::string render(const Table& t, Format f);
std::string render_text(const Table& t);
std::string render_csv(const Table& t);
nlohmann::json render_json(const Table& t);

/// The unordered pool of reals used for the reordering table.
ListSpec table7_pool();
/// The pool reordered against the 1-ending, zero-free DI list with 3/4
/// pinned at line 3.
ListSpec table7_reordered(std::size_t depth = 7);

/// One replacement-rule variant of the base-10 diagonal method.
struct Variant {
  std::string author;
  std::string ending_label;
  std::string s0_label;
  DMConfig config;
};

std::vector<Variant> table6_variants(std::size_t depth, std::uint64_t dunham_seed = 42);

/// Successor notation: 0, s(0), s(s(0)), s(s(s(0))), s^4(0), ...
std::string successor_notation(std::size_t n);

}  // namespace diaglab
