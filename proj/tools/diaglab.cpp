// diaglab: tables, diagonal-method runs, constant digits and self-checks.
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diaglab/constants.hpp"
#include "diaglab/diagonalizer.hpp"
#include "diaglab/enumerations.hpp"
#include "diaglab/tables.hpp"
#include "diaglab/verify.hpp"

#ifndef DIAGLAB_GOLDEN_DIR
#define DIAGLAB_GOLDEN_DIR ""
#endif

namespace {

using namespace diaglab;

// User input that names nothing we know; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_depth() {
  const char* v = std::getenv("DIAGLAB_DEPTH");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long d = std::stoul(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw UsageError(std::string("DIAGLAB_DEPTH is not a non-negative integer: ") + v);
  }
}

Ending parse_ending(const std::string& s) {
  if (s == "zero" || s == "0") return Ending::Zero;
  if (s == "max" || s == "nine" || s == "one" || s == "9" || s == "1") return Ending::MaxDigit;
  throw UsageError("unknown ending '" + s + "' (zero, max, nine, one)");
}

ListSpec named_list(const std::string& name, unsigned base) {
  const Base b(base);
  if (name == "l1") {
    if (base != 2) throw UsageError("l1 is a binary list");
    return l1_list();
  }
  if (name == "ldi") return ldi_list(b);
  if (name == "ldi-prime") {
    ListSpec l = apply_shuffle(s0_shuffle(), ldi_list(b));
    l.description = "ldi-prime";
    return l;
  }
  if (name == "ldi-dprime") {
    ListSpec l = ldi_list(b, Ending::MaxDigit, true);
    l.description = "ldi-dprime";
    return l;
  }
  if (name == "table7") {
    if (base != 2) throw UsageError("table7 is a binary list");
    return table7_reordered();
  }
  if (name == "table7-pool") {
    if (base != 2) throw UsageError("table7-pool is a binary list");
    return table7_pool();
  }
  throw UsageError("unknown list '" + name + "'");
}

void print_csv_trace(const DMReport& r) {
  std::cout << "n,prefix,position\n";
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto& p = r.positions[i];
    std::cout << r.start_index + i << "," << r.prefix(i).to_string() << "," << (p ? p->get_str() : "")
              << "\n";
  }
}

// -- table -------------------------------------------------------------------

struct TableArgs {
  int id = 0;
  std::optional<std::size_t> rows;
  std::string format = "text";
  bool grid = false;
  std::size_t columns = 6;
};

int cmd_table(const TableArgs& a) {
  const Format f = parse_format(a.format);
  if (a.grid) {
    if (a.id != 2 && a.id != 3) throw UsageError("--grid applies to table 2");
    std::cout << render(make_grid(a.rows.value_or(7), a.columns), f);
    return 0;
  }
  try {
    std::cout << render(make_table(a.id, a.rows), f);
  } catch (const UnknownTable& e) {
    throw UsageError(std::string(e.what()) + " (available: 1 2 4 5 6 7 8 9, grid via 'table 2 --grid')");
  }
  return 0;
}

// -- diagonal ----------------------------------------------------------------

struct DiagonalArgs {
  std::string list = "ldi";
  unsigned base = 2;
  std::string rule = "flip";
  std::optional<std::string> shuffle;
  std::optional<std::string> ending;
  std::optional<std::size_t> depth;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_positions = false;
};

int cmd_diagonal(const DiagonalArgs& a) {
  DMConfig cfg;
  cfg.list = named_list(a.list, a.base);
  try {
    cfg.rule = parse_rule(a.rule, a.seed);
    if (a.shuffle) cfg.shuffle = parse_shuffle(*a.shuffle);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.ending) cfg.ending = parse_ending(*a.ending);
  cfg.depth = a.depth ? *a.depth : env_depth().value_or(20);
  cfg.positions = !a.no_positions;
  DMReport r;
  try {
    r = run_dm(cfg);
  } catch (const RuleBaseMismatch& e) {
    throw UsageError(e.what());
  }
  const Format f = parse_format(a.format);
  if (f == Format::Json)
    std::cout << to_json(r).dump(2) << "\n";
  else if (f == Format::Csv)
    print_csv_trace(r);
  else
    std::cout << to_text(r);
  return 0;
}

// -- digits ------------------------------------------------------------------

struct DigitsArgs {
  std::string what;
  unsigned base = 2;
  std::size_t count = 11;
  std::string method = "primary";
  std::string ending = "zero";
  std::string format = "text";
};

int cmd_digits(const DigitsArgs& a) {
  const Base b(a.base);
  std::optional<DigitStream> s;
  if (auto c = parse_constant(a.what)) {
    if (a.method != "primary" && a.method != "secondary")
      throw UsageError("unknown method '" + a.method + "'");
    s = stream_of_constant(*c, b, a.method == "primary" ? Method::Primary : Method::Secondary);
  } else {
    RationalValue x;
    try {
      x = RationalValue::parse(a.what);
    } catch (const std::exception&) {
      throw UsageError("'" + a.what + "' is neither a known constant nor a rational p/q");
    }
    if (!(x < RationalValue(1, 1))) throw UsageError("digit streams cover [0, 1)");
    s = stream_of_rational(x, b, parse_ending(a.ending));
  }
  const Format f = parse_format(a.format);
  const std::string text = s->render_prefix(a.count);
  if (f == Format::Json) {
    std::vector<Digit> digits;
    for (std::size_t i = 1; i <= a.count; ++i) digits.push_back(s->digit_at(i));
    std::cout << nlohmann::json{{"value", a.what}, {"base", a.base}, {"digits", digits}, {"text", text}}.dump(2)
              << "\n";
  } else if (f == Format::Csv) {
    std::cout << "position,digit\n";
    for (std::size_t i = 1; i <= a.count; ++i) std::cout << i << "," << s->digit_at(i) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

// -- list --------------------------------------------------------------------

struct ListArgs {
  std::string name;
  unsigned base = 2;
  std::size_t count = 16;
  unsigned symbols = 3;
  std::string format = "text";
};

int cmd_list(const ListArgs& a) {
  Table t{a.name, {"n", "entry"}, {}};
  if (a.name == "w2") {
    for (std::size_t n = 0; n < a.count; ++n)
      t.rows.push_back({std::to_string(n), w2_list(Index(static_cast<unsigned long>(n))).to_string()});
  } else if (a.name == "lex" || a.name == "applicative") {
    const auto words = a.name == "lex" ? lex_list(a.symbols, a.symbols) : applicative_list(a.symbols, a.symbols);
    for (std::size_t i = 0; i < std::min(a.count, words.size()); ++i)
      t.rows.push_back({std::to_string(i + 1), to_string(words[i])});
  } else if (a.name == "selectors") {
    t.columns = {"code", "subset"};
    for (std::size_t c = 0; c < a.count; ++c) {
      std::string subset = "{";
      for (std::size_t i : selector_decode(SelectorCode(Index(static_cast<unsigned long>(c)))))
        subset += (subset.size() > 1 ? " " : "") + std::to_string(i);
      t.rows.push_back({std::to_string(c), subset + "}"});
    }
  } else {
    const ListSpec l = named_list(a.name, a.base);
    std::size_t rows = a.count;
    if (l.size) rows = std::min<std::size_t>(rows, l.size->get_ui());
    for (std::size_t i = 0; i < rows; ++i) {
      const Index n(static_cast<unsigned long>(l.start_index + i));
      const std::string entry = l.entry(n).render_prefix(std::max<std::size_t>(11, i + 1));
      t.rows.push_back({n.get_str(), l.label_at ? l.label_at(n) + "  " + entry : entry});
    }
  }
  std::cout << render(t, parse_format(a.format));
  return 0;
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  std::string format = "text";
  std::string golden = DIAGLAB_GOLDEN_DIR;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.only = a.only;
  opt.golden_dir = a.golden;
  opt.parallel = !a.serial;
  if (auto d = env_depth()) opt.penrose_depth = *d;
  std::vector<CheckResult> results;
  try {
    results = run_checks(opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  const Format f = parse_format(a.format);
  if (f == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    std::cout << nlohmann::json{{"passed", ok}, {"checks", j}}.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  [" << r.detail << "]\n";
    std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact writable-number arithmetic, enumerations and the diagonal method"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "csv", "json"};

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Render one of the tables");
  table->add_option("id", ta.id, "Table number: 1 2 4 5 6 7 8 9")->required();
  table->add_option("--rows", ta.rows, "Row count (defaults to the printed table)");
  table->add_option("--format", ta.format)->check(CLI::IsMember(formats));
  table->add_flag("--grid", ta.grid, "Integer x fraction grid of binary writable numbers");
  table->add_option("--columns", ta.columns, "Grid columns");

  DiagonalArgs da;
  auto* diagonal = app.add_subcommand("diagonal", "Run the diagonal method on a named list");
  diagonal->add_option("--list", da.list, "l1, ldi, ldi-prime, ldi-dprime, table7, table7-pool");
  diagonal->add_option("--base", da.base)->check(CLI::Range(2u, 36u));
  diagonal->add_option("--rule", da.rule, "flip, add1|hawking, sub1|hofstadter, penrose, dunham");
  diagonal->add_option("--shuffle", da.shuffle, "s0, swap:i,j, compose:A+B");
  diagonal->add_option("--ending", da.ending, "zero, max (nine, one)");
  diagonal->add_option("--depth", da.depth, "Rows to scan (default 20 or DIAGLAB_DEPTH)");
  diagonal->add_option("--seed", da.seed, "Seed for the dunham rule");
  diagonal->add_option("--format", da.format)->check(CLI::IsMember(formats));
  diagonal->add_flag("--no-positions", da.no_positions, "Skip ranking the partial antidiagonals");

  DigitsArgs ga;
  auto* digits = app.add_subcommand("digits", "Digits of a constant or of a rational p/q");
  digits->add_option("value", ga.what, "sqrt2-1, sqrt3-1, log2, pi-3, e-2, or p/q")->required();
  digits->add_option("--base", ga.base)->check(CLI::Range(2u, 36u));
  digits->add_option("--count", ga.count, "Number of fractional digits");
  digits->add_option("--method", ga.method, "primary or secondary");
  digits->add_option("--ending", ga.ending, "Ending for writable rationals");
  digits->add_option("--format", ga.format)->check(CLI::IsMember(formats));

  ListArgs la;
  auto* list = app.add_subcommand("list", "Print the first entries of an enumeration");
  list->add_option("name", la.name,
                   "l1, ldi, ldi-prime, ldi-dprime, table7, table7-pool, w2, lex, applicative, selectors")
      ->required();
  list->add_option("--base", la.base)->check(CLI::Range(2u, 36u));
  list->add_option("--count", la.count);
  list->add_option("--symbols", la.symbols, "Alphabet size for lex and applicative")->check(CLI::Range(1u, 9u));
  list->add_option("--format", la.format)->check(CLI::IsMember(formats));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the self-checks");
  verify->add_option("--only", va.only, "Check ids: " + [] {
    std::string s;
    for (const auto& id : check_ids()) s += (s.empty() ? "" : " ") + id;
    return s;
  }())->delimiter(',');
  verify->add_option("--format", va.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  verify->add_option("--golden", va.golden, "Directory of golden text tables");
  verify->add_flag("--serial", va.serial, "Run checks one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) return cmd_table(ta);
    if (*diagonal) return cmd_diagonal(da);
    if (*digits) return cmd_digits(ga);
    if (*list) return cmd_list(la);
    if (*verify) return cmd_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
