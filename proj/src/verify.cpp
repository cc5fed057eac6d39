#include "diaglab/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "diaglab/constants.hpp"
#include "diaglab/enumerations.hpp"
#include "diaglab/tables.hpp"

namespace diaglab {

namespace {

Index idx(std::size_t n) { return Index(static_cast<unsigned long>(n)); }

class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }

  CheckResult result(std::string id, std::string title) const {
    CheckResult r{std::move(id), std::move(title), failures_.empty(), {}};
    if (failures_.empty()) {
      r.detail = std::to_string(count_) + " assertions";
    } else {
      r.detail = failures_.front();
      if (failures_.size() > 1) r.detail += " (+" + std::to_string(failures_.size() - 1) + " more)";
    }
    return r;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const std::optional<Index>& p) { return p ? p->get_str() : "none"; }

CheckResult check_table1(const VerifyOptions&) {
  Expect expect;
  const std::vector<std::string> prefixes{"0.0", "0.01", "0.011", "0.0111", "0.01111"};
  const std::vector<std::string> entries{"0.10000000...", "0.00000000...", "0.01000000...",
                                         "0.01100000...", "0.01110000..."};
  const ListSpec l1 = l1_list();
  const DMReport r = run_dm({l1, ReplacementRule::flip(), 33});
  for (std::size_t n = 0; n < 5; ++n) {
    expect(l1.entry(idx(n)).render_prefix(8) == entries[n], "L1(" + std::to_string(n) + ")");
    expect(r.prefix(n).to_string() == prefixes[n], "prefix at row " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 32; ++n)
    expect(r.positions[n] == idx(n + 1),
           "Pos at row " + std::to_string(n) + " is " + str(r.positions[n]) + ", want n+1");
  return expect.result("table1", "Table 1: L1 partial antidiagonals, Pos = n+1 to n = 32");
}

CheckResult check_table2(const VerifyOptions&) {
  Expect expect;
  const std::vector<std::string> rows{"0.00000000...", "0.10000000...", "0.01000000...",
                                      "0.11000000...", "0.00100000...", "0.10100000...",
                                      "0.01100000...", "0.11100000...", "0.00010000..."};
  const ListSpec l = ldi_list(Base(2));
  for (std::size_t n = 0; n < rows.size(); ++n)
    expect(l.entry(idx(n)).render_prefix(8) == rows[n], "LDI(" + std::to_string(n) + ")");
  return expect.result("table2", "Table 2: LDI rows 0-8");
}

CheckResult check_table4(const VerifyOptions&) {
  Expect expect;
  const DMConfig cfg{ldi_list(Base(2)), ReplacementRule::flip(), 21, std::nullopt, s0_shuffle()};
  const DMReport r = run_dm(cfg);
  const std::vector<unsigned long> printed{1, 2, 6, 14, 30, 62, 126, 254, 510, 1022};
  for (std::size_t n = 0; n < printed.size(); ++n)
    expect(r.positions[n] == Index(printed[n]), "Pos at row " + std::to_string(n));
  for (std::size_t n = 1; n <= 20; ++n) {
    Index want;
    mpz_ui_pow_ui(want.get_mpz_t(), 2, n + 1);
    want -= 2;
    expect(r.positions[n] == want, "Pos at row " + std::to_string(n) + " is not 2^(n+1)-2");
  }
  expect(r.tail && r.tail->digit == 1 && r.tail->from == 2, "tail is not 1 from digit 2");
  expect(r.limit == RationalValue(1, 2), "limit is not 1/2");
  expect(r.membership.kind == Membership::Kind::InList && r.membership.position == Index(0),
         "membership is not InList(0)");
  return expect.result("table4", "Table 4: S0-shuffled LDI, Pos = 2^(n+1)-2, limit 1/2 at row 0");
}

CheckResult check_table5(const VerifyOptions&) {
  Expect expect;
  const std::vector<std::string> rows{"0.01111111111...", "0.00111111111...", "0.10111111111...",
                                      "0.00011111111...", "0.10011111111...", "0.01011111111...",
                                      "0.11011111111...", "0.00001111111...", "0.10001111111..."};
  const ListSpec l = ldi_list(Base(2), Ending::MaxDigit, true);
  for (std::size_t n = 1; n <= rows.size(); ++n)
    expect(l.entry(idx(n)).render_prefix(11) == rows[n - 1], "L''DI(" + std::to_string(n) + ")");
  const DMReport r = run_dm({l, ReplacementRule::flip(), 20});
  expect(r.positions[0] == Index(1), "Pos at row 1");
  for (std::size_t n = 2; n <= 20; ++n)
    expect(r.positions[n - 1] == Index(3), "Pos at row " + std::to_string(n) + " is not 3");
  expect(r.limit == RationalValue(3, 4), "limit is not 3/4");
  expect(r.membership.kind == Membership::Kind::InList && r.membership.position == Index(3),
         "membership is not InList(3)");
  return expect.result("table5", "Table 5: 1-ending LDI, Pos = 3, limit 3/4 at row 3");
}

CheckResult check_table6(const VerifyOptions& opt) {
  Expect expect;
  const auto variants = table6_variants(64);
  const DMReport hawking = detect_tail(variants[0].config);
  expect(hawking.limit == RationalValue(11, 100), "Hawking limit is not 11/100");
  expect(hawking.membership.kind == Membership::Kind::InList, "Hawking limit is not listed");
  const DMReport hofstadter = detect_tail(variants[1].config);
  expect(hofstadter.limit == RationalValue(1, 10), "Hofstadter limit is not 1/10");
  expect(hofstadter.membership.kind == Membership::Kind::InList, "Hofstadter limit is not listed");

  DMConfig penrose = variants[2].config;
  penrose.depth = opt.penrose_depth;
  const DMReport p = detect_tail(penrose);
  expect(!p.tail && !p.limit, "Penrose run claims a terminating tail");
  expect(p.rows() == opt.penrose_depth, "Penrose run is short");
  expect(p.membership.kind == Membership::Kind::NotInListPrefix, "Penrose membership");
  // D|n differs from entry m <= n at digit m's diagonal position.
  const ListSpec pl = effective_list(penrose);
  bool distinct = true;
  for (std::size_t i = 0; i < p.rows() && distinct; ++i)
    distinct = pl.entry(idx(i)).digit_at(i + 1) != p.digits[i];
  expect(distinct, "a Penrose prefix coincides with a listed prefix");

  DMConfig dunham = variants[3].config;
  dunham.depth = 500;
  const DMReport d1 = detect_tail(dunham), d2 = detect_tail(dunham);
  expect(d1 == d2, "Dunham run is not deterministic for a fixed seed");
  const ListSpec dl = effective_list(dunham);
  for (std::size_t i = 0; i < d1.rows(); ++i) {
    const Digit x = dl.entry(idx(i)).digit_at(i + 1);
    expect(d1.digits[i] != x && d1.digits[i] >= 1 && d1.digits[i] <= 8,
           "Dunham digit at row " + std::to_string(i));
  }
  return expect.result("table6", "Table 6: base-10 variants (11/100, 1/10, Penrose to depth " +
                                     std::to_string(opt.penrose_depth) + ", Dunham)");
}

CheckResult check_table7(const VerifyOptions&) {
  Expect expect;
  const std::vector<std::pair<Constant, std::string>> printed{
      {Constant::Log2, "0.10110001011"},
      {Constant::Sqrt2Minus1, "0.01101010000"},
      {Constant::Sqrt3Minus1, "0.10111011011"},
      {Constant::PiMinus3, "0.00100100001"},
      {Constant::EMinus2, "0.10110111111"}};
  for (const auto& [c, s] : printed) {
    const DigitStream a = stream_of_constant(c, Base(2), Method::Primary);
    const DigitStream b = stream_of_constant(c, Base(2), Method::Secondary);
    expect(truncate(a, 10).to_string() == s, name(c) + " does not match its printed expansion");
    expect(truncate(a, 63) == truncate(b, 63), name(c) + ": the two methods disagree within 64 digits");
  }
  const ListSpec re = table7_reordered();
  const std::vector<std::string> labels{"0", "log(2)", "3/4", "sqrt(3)-1", "sqrt(2)-1", "pi-3", "e-2"};
  for (std::size_t n = 1; n <= 7; ++n)
    expect(re.label_at(idx(n)) == labels[n - 1], "reordered row " + std::to_string(n));
  const DMReport got = run_dm({re, ReplacementRule::flip(), 7});
  const DMReport want = run_dm({ldi_list(Base(2), Ending::MaxDigit, true), ReplacementRule::flip(), 7});
  expect(got.digits == want.digits, "reordered list yields a different antidiagonal");
  return expect.result("table7", "Table 7: constant expansions, dual methods, reordering");
}

CheckResult check_table8(const VerifyOptions&) {
  Expect expect;
  bool roundtrip = true;
  for (unsigned long c = 0; c < (1ul << 16) && roundtrip; ++c)
    roundtrip = selector_encode(selector_decode(SelectorCode(Index(c)))).value() == c;
  expect(roundtrip, "selector roundtrip below 2^16");
  const std::vector<int> items{3, 42, 2, 22};
  const auto chosen = select(SelectorCode(Index(9)), std::span<const int>(items));
  expect(chosen == std::vector<int>{3, 22}, "selector 1001 over {3, 42, 2, 22}");
  expect(selector_encode({0, 3}).value() == 9, "subset {3, 22} does not encode to 1001");
  return expect.result("table8", "Table 8: selector codec below 2^16, subset {3, 22} = 1001");
}

CheckResult check_table9(const VerifyOptions&) {
  Expect expect;
  const std::vector<std::string> printed{
      "1", "2", "11", "12", "21", "22", "3", "13", "23", "31", "32", "33", "111",
      "112", "113", "121", "122", "123", "131", "132", "133", "211", "212", "213", "221", "222",
      "223", "231", "232", "233", "311", "312", "313", "321", "322", "323", "331", "332", "333"};
  const auto app = applicative_list(3, 3);
  expect(app.size() == printed.size(), "App(3) length");
  for (std::size_t i = 0; i < std::min(app.size(), printed.size()); ++i)
    expect(to_string(app[i]) == printed[i], "App(3) row " + std::to_string(i + 1));
  for (unsigned n = 1; n <= 6; ++n) {
    const auto block = applicative_list(n, n);
    expect(applicative_count(n, n) == block.size(), "count of App(" + std::to_string(n) + ")");
    if (n > 1) {
      const auto prev = applicative_list(n - 1, n - 1);
      expect(std::equal(prev.begin(), prev.end(), block.begin()), "App(" + std::to_string(n) + ") prefix");
    }
    if (n <= 5) {
      auto a = block;
      auto l = lex_list(n, n);
      std::sort(a.begin(), a.end());
      std::sort(l.begin(), l.end());
      expect(a == l, "App(" + std::to_string(n) + ") is not a permutation of the lex list");
    }
  }
  return expect.result("table9", "Table 9: App(3) rows, counts, prefix and permutation properties");
}

CheckResult check_writable(const VerifyOptions&) {
  Expect expect;
  std::mt19937_64 gen(20240501);
  for (unsigned b : {2u, 3u, 10u, 16u}) {
    const Base base(b);
    bool ok = true;
    for (int t = 0; t < 10000 && ok; ++t) {
      std::vector<Digit> ip(gen() % 5 + 1), fp(gen() % 12 + 1);
      for (auto& d : ip) d = static_cast<Digit>(gen() % b);
      for (auto& d : fp) d = static_cast<Digit>(gen() % b);
      while (ip.size() > 1 && ip.front() == 0) ip.erase(ip.begin());
      const WritableNumber w(base, ip, fp);
      ok = render(value_of(w), base) == w.canonical();
    }
    expect(ok, "render(value_of(w)) != canonical(w) in base " + std::to_string(b));
  }
  for (unsigned b : {2u, 10u})
    for (unsigned p = 2; p < 100; ++p) {
      bool prime = true;
      for (unsigned q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
      if (!prime || b % p == 0) continue;
      expect(!is_writable(RationalValue(1, p), Base(b)),
             "1/" + std::to_string(p) + " reported writable in base " + std::to_string(b));
    }
  for (unsigned b : {2u, 10u})
    for (int t = 0; t < 200; ++t) {
      const unsigned long q = gen() % 997 + 1, p = gen() % q;
      const RationalValue x(static_cast<long>(p), q);
      const DigitStream s = stream_of_rational(x, Base(b));
      for (std::size_t k = 0; k <= 64; ++k) {
        mpz_class bk;
        mpz_ui_pow_ui(bk.get_mpz_t(), b, k);
        const mpq_class err = abs(x.get() - value_of(approximate(s, k)).get());
        expect(err < mpq_class(1, bk), "approximation bound for " + x.to_string());
      }
    }
  return expect.result("writable", "Writable numbers: roundtrip, 1/p unwritable, approximation bound");
}

CheckResult check_inversion(const VerifyOptions&) {
  Expect expect;
  const Base two(2);
  bool ok = true;
  for (unsigned long n = 0; n < (1ul << 20) && ok; ++n) ok = di_inverse(di(Index(n), two)) == n;
  expect(ok, "DI roundtrip below 2^20");
  for (unsigned n = 1; n <= 12; ++n) {
    std::set<std::vector<Digit>> seen;
    for (unsigned long m = 0; m < (1ul << n); ++m) {
      auto d = di(Index(m), two).fractional_digits();
      d.resize(n, 0);
      seen.insert(d);
    }
    expect(seen.size() == (1ul << n), "block of 2^" + std::to_string(n) + " rows misses a fraction");
  }
  const std::vector<std::string> w2{"0.0",  "0.1",  "1.0",   "0.01", "1.1",
                                    "10.0", "0.11", "1.01",  "10.1", "11.0",
                                    "0.001", "1.11", "10.01", "11.1", "100.0"};
  for (std::size_t n = 0; n < w2.size(); ++n)
    expect(w2_list(idx(n)).to_string() == w2[n], "W2 listing entry " + std::to_string(n));
  return expect.result("inversion", "Digital inversion: roundtrip below 2^20, 2^n blocks, W2 listing");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CheckResult check_golden(const VerifyOptions& opt) {
  Expect expect;
  if (opt.golden_dir.empty()) {
    expect(false, "no golden directory configured");
    return expect.result("golden", "Golden text tables");
  }
  const std::filesystem::path dir(opt.golden_dir);
  for (int id : kTableIds) {
    const auto file = dir / ("table" + std::to_string(id) + ".txt");
    expect(read_file(file) == render_text(make_table(id)), file.filename().string() + " differs");
  }
  expect(read_file(dir / "grid.txt") == render_text(make_grid()), "grid.txt differs");
  return expect.result("golden", "Golden text tables");
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"table1", check_table1}, {"table2", check_table2},     {"table4", check_table4},
      {"table5", check_table5}, {"table6", check_table6},     {"table7", check_table7},
      {"table8", check_table8}, {"table9", check_table9},     {"writable", check_writable},
      {"inversion", check_inversion}, {"golden", check_golden}};
  return checks;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  for (const auto& id : options.only)
    if (std::none_of(registry().begin(), registry().end(), [&](const auto& e) { return e.first == id; }))
      throw std::invalid_argument("unknown check '" + id + "'");

  auto guarded = [&options](const std::string& id, CheckFn fn) {
    try {
      return fn(options);
    } catch (const std::exception& e) {
      return CheckResult{id, id, false, std::string("exception: ") + e.what()};
    }
  };

  std::vector<std::future<CheckResult>> pending;
  for (const auto& [id, fn] : registry()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    pending.push_back(std::async(options.parallel ? std::launch::async : std::launch::deferred,
                                 guarded, id, fn));
  }
  std::vector<CheckResult> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace diaglab
