// Acceptance gate: one PASS/FAIL line per criterion. Expected values are
// either printed in the published tables or recomputed by tests/oracles.hpp.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diaglab/constants.hpp"
#include "diaglab/diagonalizer.hpp"
#include "diaglab/enumerations.hpp"
#include "diaglab/tables.hpp"
#include "oracles.hpp"

using namespace diaglab;

namespace {

Index idx(std::size_t n) { return Index(static_cast<unsigned long>(n)); }

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

void c1(Criterion& c) {
  const std::vector<std::string> entries{"0.10000000...", "0.00000000...", "0.01000000...",
                                         "0.01100000...", "0.01110000..."};
  const std::vector<std::string> prefixes{"0.0", "0.01", "0.011", "0.0111", "0.01111"};
  const std::vector<std::string> found{"0.0", "0.01", "0.011", "0.0111", "0.01111"};
  const ListSpec l1 = l1_list();
  const DMReport r = run_dm({l1, ReplacementRule::flip(), 33});
  for (std::size_t n = 0; n < 5; ++n) {
    c.expect(l1.entry(idx(n)).render_prefix(8) == entries[n], "L1 row " + std::to_string(n));
    c.expect(r.prefix(n).to_string() == prefixes[n], "prefix row " + std::to_string(n));
    c.expect(r.positions[n] == idx(n + 1), "position row " + std::to_string(n));
    c.expect(truncate(l1.entry(idx(n + 1)), n).to_string() == found[n], "L1(Pos)|n row " + std::to_string(n));
  }
  // Position law against a linear search over the list's own entries.
  for (std::size_t n = 0; n <= 32; ++n) {
    const WritableNumber p = r.prefix(n).canonical();
    std::size_t hit = 0;
    while (hit < 40 && !(writable_form(l1.entry(idx(hit))) == p)) ++hit;
    c.expect(hit == n + 1 && r.positions[n] == idx(n + 1), "Pos(D|" + std::to_string(n) + ") != n+1");
  }
}

void c2(Criterion& c) {
  const std::vector<std::string> printed{"0.00000000...", "0.10000000...", "0.01000000...",
                                         "0.11000000...", "0.00100000...", "0.10100000...",
                                         "0.01100000...", "0.11100000...", "0.00010000..."};
  const ListSpec l = ldi_list(Base(2));
  for (std::size_t n = 0; n < printed.size(); ++n) {
    c.expect(l.entry(idx(n)).render_prefix(8) == printed[n], "LDI row " + std::to_string(n));
    std::string o = oracle::di_string(n);
    o.resize(10, '0');
    c.expect(o + "..." == printed[n], "oracle row " + std::to_string(n));
  }
}

void c3(Criterion& c) {
  const DMConfig cfg{ldi_list(Base(2)), ReplacementRule::flip(), 21, std::nullopt, s0_shuffle()};
  const DMReport r = run_dm(cfg);
  const std::vector<unsigned long> printed{1, 2, 6, 14, 30, 62, 126, 254, 510, 1022};
  for (std::size_t n = 0; n < printed.size(); ++n)
    c.expect(r.positions[n] == Index(printed[n]), "printed Pos row " + std::to_string(n));
  for (std::size_t n = 1; n <= 20; ++n) {
    const std::uint64_t want = (std::uint64_t{1} << (n + 1)) - 2;
    // Oracle rank: reverse the prefix, then undo S0.
    std::uint64_t rank = oracle::di_rank(r.prefix(n).to_string());
    if (rank <= 1) rank = 1 - rank;
    c.expect(rank == want, "oracle Pos row " + std::to_string(n));
    c.expect(r.positions[n] == Index(static_cast<unsigned long>(want)), "Pos row " + std::to_string(n));
  }
  c.expect(r.limit == RationalValue(1, 2), "limit != 1/2");
  c.expect(r.membership.kind == Membership::Kind::InList && r.membership.position == Index(0),
           "membership != InList(0)");
  // Limit check by hand: 0.0 followed by 1s sums to 1/2.
  c.expect(r.tail && r.tail->digit == 1 && r.tail->from == 2 &&
               oracle::value_of("0.0", 2) + mpq_class(1, 2) == r.limit->get(),
           "tail 1 from digit 2 does not sum to the limit");
}

void c4(Criterion& c) {
  const std::vector<std::string> printed{"0.01111111111...", "0.00111111111...", "0.10111111111...",
                                         "0.00011111111...", "0.10011111111...", "0.01011111111...",
                                         "0.11011111111...", "0.00001111111...", "0.10001111111..."};
  const ListSpec l = ldi_list(Base(2), Ending::MaxDigit, true);
  for (std::size_t n = 1; n <= 9; ++n)
    c.expect(l.entry(idx(n)).render_prefix(11) == printed[n - 1], "L''DI row " + std::to_string(n));
  const DMReport r = run_dm({l, ReplacementRule::flip(), 20});
  const std::vector<std::string> prefixes{"0.1", "0.11", "0.110", "0.1100", "0.11000"};
  for (std::size_t i = 0; i < prefixes.size(); ++i)
    c.expect(r.prefix(i).to_string() == prefixes[i], "prefix row " + std::to_string(i + 1));
  c.expect(r.positions[0] == Index(1), "Pos row 1");
  for (std::size_t n = 2; n <= 20; ++n) {
    c.expect(r.positions[n - 1] == Index(3), "Pos row " + std::to_string(n));
    c.expect(oracle::di_rank(r.prefix(n - 1).to_string()) == 3, "oracle Pos row " + std::to_string(n));
  }
  c.expect(r.limit == RationalValue(3, 4), "limit != 3/4");
  c.expect(r.membership.kind == Membership::Kind::InList && r.membership.position == Index(3),
           "membership != InList(3)");
}

void c5(Criterion& c) {
  const auto v = table6_variants(64);
  const DMReport hawking = detect_tail(v[0].config);
  c.expect(hawking.limit == RationalValue(11, 100), "Hawking limit != 11/100");
  c.expect(oracle::value_of("0.11", 10) == mpq_class(11, 100), "11/100 oracle");
  const DMReport hofstadter = detect_tail(v[1].config);
  c.expect(hofstadter.limit == RationalValue(1, 10), "Hofstadter limit != 1/10");
  // 0.0999... = 0.0 + 10^-1
  c.expect(hofstadter.tail && hofstadter.tail->digit == 9 && hofstadter.tail->from == 2,
           "Hofstadter tail is not 9 from digit 2");

  const std::size_t depth = 10000;
  DMConfig pc = v[2].config;
  pc.depth = depth;
  const DMReport p = detect_tail(pc);
  c.expect(!p.tail && !p.limit && p.rows() == depth, "Penrose run is not NoTailWithinDepth at 10^4");
  c.expect(p.repeating_tail && p.repeating_tail->value == RationalValue(2, 9), "Penrose repeating value");
  // Entry m differs from D at digit m+1, so D|n differs from the length-(n+1)
  // prefix of every entry m <= n. Entries come from the decimal oracle.
  bool distinct = true;
  for (std::size_t m = 0; m < depth && distinct; ++m) {
    const std::string e = oracle::di10_string(m);
    const char dm = m + 2 < e.size() ? e[m + 2] : '0';
    distinct = static_cast<Digit>(dm - '0') != p.digits[m];
  }
  c.expect(distinct, "a Penrose prefix matches an entry prefix");
  // Literal prefix comparison on a shorter run.
  const std::size_t small = 300;
  bool literal = true;
  std::string dbar = "0.";
  for (std::size_t n = 0; n < small && literal; ++n) {
    dbar += static_cast<char>('0' + p.digits[n]);
    for (std::size_t m = 0; m <= n && literal; ++m) {
      std::string e = oracle::di10_string(m);
      if (e.size() < dbar.size()) e.resize(dbar.size(), '0');
      literal = e.substr(0, dbar.size()) != dbar;
    }
  }
  c.expect(literal, "literal prefix comparison up to 300");

  DMConfig dc = v[3].config;
  dc.depth = 2000;
  const DMReport d1 = detect_tail(dc), d2 = detect_tail(dc);
  c.expect(d1 == d2, "Dunham run is not deterministic");
  dc.rule.seed += 1;
  c.expect(detect_tail(dc).digits != d1.digits, "Dunham ignores its seed");
  for (std::size_t m = 0; m < d1.rows(); ++m) {
    const std::string e = oracle::di10_string(m);
    const Digit diag = m + 2 < e.size() ? static_cast<Digit>(e[m + 2] - '0') : 0;
    c.expect(d1.digits[m] != diag && d1.digits[m] >= 1 && d1.digits[m] <= 8,
             "Dunham digit row " + std::to_string(m));
  }
}

void c6(Criterion& c) {
  struct Row {
    Constant k;
    std::string printed;
    oracle::Bounds bounds;
  };
  const std::vector<Row> rows{
      {Constant::Log2, "10110001011", [](unsigned t) { return oracle::log2(t); }},
      {Constant::Sqrt2Minus1, "01101010000", [](unsigned t) { return oracle::sqrt_minus_one(2, 8 * t); }},
      {Constant::Sqrt3Minus1, "10111011011", [](unsigned t) { return oracle::sqrt_minus_one(3, 8 * t); }},
      {Constant::PiMinus3, "00100100001", [](unsigned t) { return oracle::pi_minus_three(t); }},
      {Constant::EMinus2, "10110111111", [](unsigned t) { return oracle::e_minus_two(t); }},
  };
  for (const auto& row : rows) {
    const auto a = truncate(stream_of_constant(row.k, Base(2), Method::Primary), 63).to_string();
    const auto b = truncate(stream_of_constant(row.k, Base(2), Method::Secondary), 63).to_string();
    const auto o = "0." + oracle::digits(row.bounds, 2, 64);
    c.expect(a.substr(0, 13) == "0." + row.printed, name(row.k) + " != printed expansion");
    c.expect(a == b, name(row.k) + ": primary and secondary disagree");
    c.expect(a == o, name(row.k) + ": library and oracle disagree");
    const auto a10 = truncate(stream_of_constant(row.k, Base(10), Method::Primary), 63).to_string();
    c.expect(a10 == "0." + oracle::digits(row.bounds, 10, 64), name(row.k) + ": base-10 oracle");
  }
  const ListSpec re = table7_reordered();
  const std::vector<std::pair<std::string, std::string>> printed{
      {"0", "0.00000000000..."},         {"log(2)", "0.10110001011..."},
      {"3/4", "0.10111111111..."},       {"sqrt(3)-1", "0.10111011011..."},
      {"sqrt(2)-1", "0.01101010000..."}, {"pi-3", "0.00100100001..."},
      {"e-2", "0.10110111111..."}};
  for (std::size_t n = 1; n <= 7; ++n) {
    c.expect(re.label_at(idx(n)) == printed[n - 1].first, "reordered label row " + std::to_string(n));
    c.expect(re.entry(idx(n)).render_prefix(11) == printed[n - 1].second, "reordered digits row " + std::to_string(n));
  }
  const DMReport r = run_dm({re, ReplacementRule::flip(), 7});
  const std::vector<std::string> t5{"0.1", "0.11", "0.110", "0.1100", "0.11000", "0.110000", "0.1100000"};
  for (std::size_t i = 0; i < 7; ++i)
    c.expect(r.prefix(i).to_string() == t5[i], "reordered trace row " + std::to_string(i + 1));
}

void c7(Criterion& c) {
  bool ok = true;
  for (std::uint64_t code = 0; code < (1u << 16) && ok; ++code) {
    const auto s = selector_decode(SelectorCode(Index(static_cast<unsigned long>(code))));
    ok = s == oracle::bits_of(code) && selector_encode(s).value() == static_cast<unsigned long>(code);
  }
  c.expect(ok, "selector roundtrip below 2^16");
  const std::vector<int> items{3, 42, 2, 22};
  // 1001 read with bit i marking item i.
  c.expect(select(SelectorCode(Index(0b1001)), std::span<const int>(items)) == std::vector<int>{3, 22},
           "1001 does not select {3, 22}");
  c.expect(selector_encode({0, 3}).value() == 0b1001, "{3, 22} does not encode to 1001");
  const auto t8 = make_table(8);
  c.expect(t8.rows.size() == 17 && t8.rows[5][0] == "s^5(0)", "table 8 row labels");
  c.expect(t8.rows[5].back() == "1" && t8.rows[5][t8.rows[5].size() - 3] == "1", "table 8 row for 5");
}

void c8(Criterion& c) {
  const std::vector<std::string> printed{
      "1",   "2",   "11",  "12",  "21",  "22",  "3",   "13",  "23",  "31",  "32",  "33",  "111",
      "112", "113", "121", "122", "123", "131", "132", "133", "211", "212", "213", "221", "222",
      "223", "231", "232", "233", "311", "312", "313", "321", "322", "323", "331", "332", "333"};
  const auto app = applicative_list(3, 3);
  std::vector<std::string> got;
  for (const auto& w : app) got.push_back(to_string(w));
  c.expect(got == printed, "App(3) != printed column");
  std::vector<std::string> lex;
  for (const auto& w : lex_list(3, 3)) lex.push_back(to_string(w));
  c.expect(lex == oracle::all_words(3, 3), "lex(3, 3) != oracle");
  c.expect(lex.size() == 39 && lex[33] == "321", "lex row 34");
  for (unsigned n = 1; n <= 6; ++n) {
    const auto block = applicative_list(n, n);
    unsigned long sum = 0, p = 1;
    for (unsigned k = 1; k <= n; ++k) sum += (p *= n);
    c.expect(applicative_count(n, n) == sum && block.size() == sum, "count for n = " + std::to_string(n));
    if (n > 1) {
      const auto prev = applicative_list(n - 1, n - 1);
      c.expect(std::equal(prev.begin(), prev.end(), block.begin()), "prefix property for n = " + std::to_string(n));
    }
    if (n <= 5) {
      const auto words = oracle::all_words(n, n);
      std::multiset<std::string> a, l(words.begin(), words.end());
      for (const auto& w : block) a.insert(to_string(w));
      c.expect(a == l, "permutation for n = " + std::to_string(n));
    }
  }
}

void c9(Criterion& c) {
  std::mt19937_64 gen(7);
  const std::string sym = "0123456789abcdef";
  for (unsigned b : {2u, 3u, 10u, 16u}) {
    bool ok = true;
    for (int t = 0; t < 10000 && ok; ++t) {
      std::string ip(1, sym[1 + gen() % (b - 1)]), fp;
      for (std::size_t k = gen() % 4; k > 0; --k) ip += sym[gen() % b];
      if (gen() % 4 == 0) ip = "0";
      for (std::size_t k = gen() % 12 + 1; k > 0; --k) fp += sym[gen() % b];
      const std::string text = ip + "." + fp;
      const WritableNumber w = WritableNumber::parse(text, Base(b));
      const RationalValue v = value_of(w);
      std::string canon = fp;
      while (canon.size() > 1 && canon.back() == '0') canon.pop_back();
      ok = v.get() == oracle::value_of(text, b) && render(v, Base(b)).to_string() == ip + "." + canon;
    }
    c.expect(ok, "roundtrip in base " + std::to_string(b));
  }
  for (unsigned b : {2u, 10u})
    for (unsigned p = 2; p < 100; ++p) {
      if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0 || b % p == 0) continue;
      c.expect(!is_writable(RationalValue(1, p), Base(b)), "1/" + std::to_string(p) + " writable");
    }
  for (unsigned b : {2u, 10u})
    for (int t = 0; t < 300; ++t) {
      const unsigned long q = gen() % 2000 + 1, num = gen() % q;
      const mpq_class x(num, q);
      const DigitStream s = stream_of_rational(RationalValue(static_cast<long>(num), q), Base(b));
      for (std::size_t k = 0; k <= 64; ++k) {
        mpz_class bk;
        mpz_ui_pow_ui(bk.get_mpz_t(), b, k);
        const mpq_class got = oracle::value_of(approximate(s, k).to_string(), b);
        c.expect(abs(mpq_class(x) - got) < mpq_class(1, bk), "approximation bound");
      }
    }
}

void c10(Criterion& c) {
  bool ok = true;
  for (std::uint64_t n = 0; n < (1u << 20) && ok; ++n) {
    const WritableNumber w = di(Index(static_cast<unsigned long>(n)));
    ok = w.to_string() == oracle::di_string(n) && di_inverse(w) == static_cast<unsigned long>(n);
  }
  c.expect(ok, "DI roundtrip below 2^20");
  for (unsigned n = 1; n <= 12; ++n) {
    std::set<std::string> block;
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      std::string f = di(Index(static_cast<unsigned long>(m))).to_string().substr(2);
      f.resize(n, '0');
      block.insert(f);
    }
    c.expect(block.size() == (1u << n), "2^" + std::to_string(n) + " block");
  }
  const std::vector<std::string> printed{"0.0",  "0.1",  "1.0",  "0.01",  "1.1",  "10.0",  "0.11",  "1.01",
                                         "10.1", "11.0", "0.001", "1.11", "10.01", "11.1", "100.0"};
  for (std::size_t n = 0; n < printed.size(); ++n)
    c.expect(w2_list(idx(n)).to_string() == printed[n], "W2 entry " + std::to_string(n));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all{
      {"Table 1: L1 antidiagonals and Pos = n+1", c1},
      {"Table 2: LDI rows 0-8", c2},
      {"Table 4: S0 positions, limit 1/2 in list at 0", c3},
      {"Table 5: 1-ending rows, Pos = 3, limit 3/4 in list at 3", c4},
      {"Table 6: Hawking 11/100, Hofstadter 1/10, Penrose, Dunham", c5},
      {"Table 7: expansions, dual oracles, reordering, trace", c6},
      {"Table 8: selector codec and the {3, 22} example", c7},
      {"Table 9: applicative order, counts, prefix, permutation", c8},
      {"Writable numbers: roundtrip, 1/p, approximation bound", c9},
      {"Digital inversion: roundtrip, blocks, W2 listing", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), all[i].first, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      all[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << c.checks << " checks, " << timing << ")\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
