#include "diaglab/diagonalizer.hpp"

#include <algorithm>
#include <sstream>

namespace diaglab {

std::string ReplacementRule::name() const {
  switch (kind) {
    case Kind::BinaryFlip: return "flip";
    case Kind::AddOneMod10: return "add1";
    case Kind::SubOneMod10: return "sub1";
    case Kind::PenroseTwoOne: return "penrose";
    case Kind::DunhamRandom: return "dunham";
  }
  return "?";
}

std::string ReplacementRule::formula() const {
  switch (kind) {
    case Kind::BinaryFlip: return "1-x";
    case Kind::AddOneMod10: return "(x+1) mod 10";
    case Kind::SubOneMod10: return "(x-1) mod 10";
    case Kind::PenroseTwoOne: return "(x=2)? 1 : 2";
    case Kind::DunhamRandom: return "rand(1..8) != x";
  }
  return "?";
}

ReplacementRule parse_rule(std::string_view name, std::uint64_t seed) {
  if (name == "flip") return ReplacementRule::flip();
  if (name == "add1" || name == "hawking") return ReplacementRule::add_one();
  if (name == "sub1" || name == "hofstadter") return ReplacementRule::sub_one();
  if (name == "penrose") return ReplacementRule::penrose();
  if (name == "dunham") return ReplacementRule::dunham(seed);
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

Digit RuleApplier::operator()(Digit x) {
  using K = ReplacementRule::Kind;
  switch (rule_.kind) {
    case K::BinaryFlip: return 1 - x;
    case K::AddOneMod10: return (x + 1) % 10;
    case K::SubOneMod10: return (x + 9) % 10;
    case K::PenroseTwoOne: return x == 2 ? 1 : 2;
    case K::DunhamRandom: {
      Digit choices[8];
      unsigned count = 0;
      for (Digit d = 1; d <= 8; ++d)
        if (d != x) choices[count++] = d;
      return choices[gen_() % count];
    }
  }
  return x;
}

std::string to_string(Membership::Kind k) {
  switch (k) {
    case Membership::Kind::InList: return "in-list";
    case Membership::Kind::NotInListPrefix: return "not-in-list-prefix";
    case Membership::Kind::Undetermined: return "undetermined";
  }
  return "?";
}

WritableNumber DMReport::prefix(std::size_t i) const {
  return WritableNumber(Base(base), {0},
                        std::vector<Digit>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(i + 1)));
}

ListSpec effective_list(const DMConfig& cfg) {
  if (cfg.rule.base() != cfg.list.base.value())
    throw RuleBaseMismatch("rule " + cfg.rule.name() + " works in base " +
                           std::to_string(cfg.rule.base()) + ", list is base " +
                           std::to_string(cfg.list.base.value()));
  ListSpec list = cfg.shuffle ? apply_shuffle(*cfg.shuffle, cfg.list) : cfg.list;
  if (cfg.ending) list = reexpress(list, *cfg.ending);
  return list;
}

namespace {

std::size_t rows_in_depth(const ListSpec& list, std::size_t depth) {
  if (list.size && *list.size < depth) return list.size->get_ui();
  return depth;
}

DMReport skeleton_report(const DMConfig& cfg, const ListSpec& list) {
  DMReport r;
  r.list = cfg.list.description;
  r.base = list.base.value();
  r.rule = cfg.rule.name();
  if (cfg.shuffle) r.shuffle = cfg.shuffle->description;
  r.ending = list.ending;
  r.depth = cfg.depth;
  if (!cfg.rule.deterministic()) r.seed = cfg.rule.seed;
  r.start_index = list.start_index;
  return r;
}

// Value of the first k digits, exactly.
mpq_class prefix_value(const std::vector<Digit>& digits, std::size_t k, Base base) {
  std::vector<Digit> head(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(k));
  if (head.empty()) head.push_back(0);
  return value_of(WritableNumber(base, {0}, std::move(head))).get();
}

mpq_class weight(Base base, std::size_t exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base.value(), exponent);
  return mpq_class(1, p);
}

void scan(const ListSpec& list, const ReplacementRule& rule, std::size_t rows, DMReport& r) {
  RuleApplier apply(rule);
  r.digits.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Index n(static_cast<unsigned long>(list.start_index + i));
    const Digit x = list.entry(n).digit_at(i + 1);
    const Digit y = apply(x);
    if (y == x) throw std::logic_error("replacement rule returned the diagonal digit");
    r.digits.push_back(y);
  }
}

void resolve_tail(const ListSpec& list, const ReplacementRule& rule, DMReport& r) {
  const std::size_t rows = r.rows();
  if (rows == 0) return;
  const std::size_t last_row = list.start_index + rows - 1;
  if (!list.law || !rule.deterministic() || list.law->from_row > last_row) return;

  // From law.from_row on, every row reads its ending digit on the diagonal.
  const Base base = list.base;
  const Digit tail_in = list.ending == Ending::MaxDigit ? base.max_digit() : 0;
  RuleApplier apply(rule);
  const Digit d = apply(tail_in);
  std::size_t from = list.diagonal_position(list.law->from_row.get_ui());
  while (from > 1 && r.digits[from - 2] == d) --from;

  const mpq_class head = prefix_value(r.digits, from - 1, base);
  if (d == 0 || d == base.max_digit()) {
    r.tail = ConstantTail{d, from};
    mpq_class limit = head;
    if (d == base.max_digit()) limit += weight(base, from - 1);
    limit.canonicalize();
    r.limit = RationalValue(limit);
  } else {
    mpq_class value = head + mpq_class(d, base.max_digit()) * weight(base, from - 1);
    value.canonicalize();
    r.repeating_tail = RepeatingTail{d, from, RationalValue(value)};
  }
}

void resolve_membership(const ListSpec& list, DMReport& r) {
  if (r.rows() == 0) return;
  if (!r.limit) {
    // Each scanned row differs from the antidiagonal at its own diagonal
    // digit, which scan() has checked.
    r.membership = {Membership::Kind::NotInListPrefix, std::nullopt};
    return;
  }
  if (!list.rank_of) return;
  const WritableNumber w = render(*r.limit, list.base);
  const auto pos = list.rank_of(w);
  if (!pos) {
    r.membership = {Membership::Kind::NotInListPrefix, std::nullopt};
    return;
  }
  const auto form = writable_form(list.entry(*pos));
  if (!form || value_of(*form) != *r.limit)
    throw std::logic_error("rank function disagrees with the listed value");
  r.membership = {Membership::Kind::InList, *pos};
}

}  // namespace

WritableNumber antidiagonal_prefix(const DMConfig& cfg, const Index& n) {
  const ListSpec list = effective_list(cfg);
  if (n < list.start_index) throw std::out_of_range("row before the start of the list");
  const std::size_t rows = n.get_ui() - list.start_index + 1;
  if (rows > cfg.depth) throw std::out_of_range("row beyond the configured depth");
  if (list.size && rows > *list.size) throw std::out_of_range("row beyond the end of the list");
  DMReport r = skeleton_report(cfg, list);
  scan(list, cfg.rule, rows, r);
  return r.prefix(rows - 1);
}

Index position_of_prefix(const ListSpec& list, const WritableNumber& prefix) {
  if (!list.rank_of) throw NotFound("list " + list.description + " has no rank function");
  const auto pos = list.rank_of(prefix.canonical());
  if (!pos) throw NotFound(prefix.to_string() + " is not listed in " + list.description);
  return *pos;
}

DMReport detect_tail(const DMConfig& cfg) {
  const ListSpec list = effective_list(cfg);
  DMReport r = skeleton_report(cfg, list);
  scan(list, cfg.rule, rows_in_depth(list, cfg.depth), r);
  resolve_tail(list, cfg.rule, r);
  resolve_membership(list, r);
  return r;
}

DMReport run_dm(const DMConfig& cfg) {
  DMReport r = detect_tail(cfg);
  const ListSpec list = effective_list(cfg);
  r.positions.assign(r.rows(), std::nullopt);
  if (cfg.positions && list.rank_of) {
    // Extend the prefix digit by digit instead of copying it per row.
    std::vector<Digit> frac;
    frac.reserve(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
      frac.push_back(r.digits[i]);
      r.positions[i] = list.rank_of(WritableNumber(list.base, {0}, frac).canonical());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const DMReport& r) {
  using nlohmann::json;
  json config = {
      {"list", r.list},
      {"base", r.base},
      {"rule", r.rule},
      {"shuffle", r.shuffle ? json(*r.shuffle) : json(nullptr)},
      {"ending", to_string(r.ending)},
      {"depth", r.depth},
      {"seed", r.seed ? json(*r.seed) : json(nullptr)},
      {"start_index", r.start_index},
  };
  json trace = json::array();
  std::string prefix = "0.";
  for (std::size_t i = 0; i < r.rows(); ++i) {
    prefix += digit_symbol(r.digits[i], Base(r.base));
    const auto& pos = i < r.positions.size() ? r.positions[i] : std::nullopt;
    trace.push_back({{"n", r.start_index + i},
                     {"prefix", prefix},
                     {"position", pos ? json(pos->get_str()) : json(nullptr)}});
  }
  json out = {{"config", config}, {"trace", trace}};
  out["tail"] = r.tail ? json{{"digit", r.tail->digit}, {"from", r.tail->from}} : json(nullptr);
  out["repeating_tail"] =
      r.repeating_tail ? json{{"digit", r.repeating_tail->digit},
                              {"from", r.repeating_tail->from},
                              {"value", r.repeating_tail->value.to_string()}}
                       : json(nullptr);
  out["limit"] = r.limit ? json(r.limit->to_string()) : json(nullptr);
  out["membership"] = {
      {"verdict", to_string(r.membership.kind)},
      {"position", r.membership.position ? json(r.membership.position->get_str()) : json(nullptr)}};
  return out;
}

namespace {

Ending parse_ending_name(const std::string& s) {
  if (s == "zero") return Ending::Zero;
  if (s == "max") return Ending::MaxDigit;
  throw std::invalid_argument("unknown ending '" + s + "'");
}

Membership::Kind parse_membership(const std::string& s) {
  for (auto k : {Membership::Kind::InList, Membership::Kind::NotInListPrefix,
                 Membership::Kind::Undetermined})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown membership verdict '" + s + "'");
}

}  // namespace

DMReport report_from_json(const nlohmann::json& j) {
  DMReport r;
  const auto& c = j.at("config");
  r.list = c.at("list").get<std::string>();
  r.base = c.at("base").get<unsigned>();
  r.rule = c.at("rule").get<std::string>();
  if (!c.at("shuffle").is_null()) r.shuffle = c.at("shuffle").get<std::string>();
  r.ending = parse_ending_name(c.at("ending").get<std::string>());
  r.depth = c.at("depth").get<std::size_t>();
  if (!c.at("seed").is_null()) r.seed = c.at("seed").get<std::uint64_t>();
  r.start_index = c.at("start_index").get<unsigned>();

  const Base base(r.base);
  const auto& trace = j.at("trace");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& row = trace[i];
    const auto w = WritableNumber::parse(row.at("prefix").get<std::string>(), base);
    if (w.fractional_digits().size() != i + 1 || row.at("n").get<std::size_t>() != r.start_index + i)
      throw std::invalid_argument("inconsistent trace row " + std::to_string(i));
    r.digits.push_back(w.fractional_digits().back());
    const auto& pos = row.at("position");
    r.positions.push_back(pos.is_null() ? std::nullopt
                                        : std::optional<Index>(Index(pos.get<std::string>())));
  }
  if (!j.at("tail").is_null())
    r.tail = ConstantTail{j["tail"].at("digit").get<Digit>(), j["tail"].at("from").get<std::size_t>()};
  if (!j.at("repeating_tail").is_null()) {
    const auto& t = j["repeating_tail"];
    r.repeating_tail = RepeatingTail{t.at("digit").get<Digit>(), t.at("from").get<std::size_t>(),
                                     RationalValue::parse(t.at("value").get<std::string>())};
  }
  if (!j.at("limit").is_null()) r.limit = RationalValue::parse(j["limit"].get<std::string>());
  const auto& m = j.at("membership");
  r.membership.kind = parse_membership(m.at("verdict").get<std::string>());
  if (!m.at("position").is_null()) r.membership.position = Index(m["position"].get<std::string>());
  return r;
}

std::string to_text(const DMReport& r) {
  std::vector<std::string> ns, prefixes, positions;
  std::string prefix = "0.";
  for (std::size_t i = 0; i < r.rows(); ++i) {
    prefix += digit_symbol(r.digits[i], Base(r.base));
    ns.push_back(std::to_string(r.start_index + i));
    prefixes.push_back(prefix);
    const auto& pos = i < r.positions.size() ? r.positions[i] : std::nullopt;
    positions.push_back(pos ? pos->get_str() : "-");
  }
  auto width = [](const std::vector<std::string>& col, std::size_t header) {
    std::size_t w = header;
    for (const auto& s : col) w = std::max(w, s.size());
    return w;
  };
  const std::size_t wn = width(ns, 1), wp = width(prefixes, 4);
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("n", wn) << "  " << pad("D|n", wp) << "  Pos\n";
  for (std::size_t i = 0; i < r.rows(); ++i)
    out << pad(ns[i], wn) << "  " << pad(prefixes[i], wp) << "  " << positions[i] << "\n";

  out << "\nlist: " << r.list << " (base " << r.base << ", " << to_string(r.ending) << "-ending)";
  if (r.shuffle) out << ", shuffle " << *r.shuffle;
  out << "\nrule: " << r.rule;
  if (r.seed) out << " (seed " << *r.seed << ")";
  out << "\ntail: ";
  if (r.tail)
    out << "constant " << r.tail->digit << " from digit " << r.tail->from;
  else
    out << "none within depth " << r.depth;
  if (r.repeating_tail)
    out << " (repeating " << r.repeating_tail->digit << " from digit " << r.repeating_tail->from
        << ", value " << r.repeating_tail->value.to_string() << ")";
  out << "\nlimit: " << (r.limit ? r.limit->to_string() : "-");
  out << "\nmembership: " << to_string(r.membership.kind);
  if (r.membership.position) out << " at " << r.membership.position->get_str();
  out << "\n";
  return out.str();
}

}  // namespace diaglab
