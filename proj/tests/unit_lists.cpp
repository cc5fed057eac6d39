#include <doctest.h>

#include "diaglab/shuffles.hpp"
#include "diaglab/tables.hpp"
#include "oracles.hpp"

using namespace diaglab;

namespace {
Index I(unsigned long n) { return Index(n); }
}  // namespace

TEST_CASE("L1 entries and ranks") {
  const ListSpec l = l1_list();
  CHECK(l.entry(I(0)).render_prefix(4) == "0.1000...");
  CHECK(l.entry(I(1)).render_prefix(4) == "0.0000...");
  CHECK(l.entry(I(4)).render_prefix(4) == "0.0111...");
  for (unsigned long n = 0; n < 40; ++n) CHECK(l.rank(*writable_form(l.entry(I(n)))) == I(n));
  CHECK_FALSE(l.rank(WritableNumber::parse("0.101", Base(2))));
  REQUIRE(l.law);
  CHECK(l.law->from_row == 2);
}

TEST_CASE("LDI in both endings") {
  const ListSpec z = ldi_list(Base(2));
  const ListSpec m = ldi_list(Base(2), Ending::MaxDigit);
  for (std::uint64_t n = 1; n < 200; ++n) {
    const auto w = WritableNumber::parse(oracle::di_string(n), Base(2));
    CHECK(writable_form(z.entry(I(n))) == w.canonical());
    CHECK(writable_form(m.entry(I(n))) == w.canonical());
    CHECK(m.entry(I(n)).tail().kind == Tail::Kind::Max);
    CHECK(z.rank(w) == I(n));
  }
  CHECK(m.entry(I(0)).render_prefix(3) == "0.000...");
  const ListSpec d = ldi_list(Base(2), Ending::MaxDigit, true);
  CHECK(d.start_index == 1);
  CHECK_FALSE(d.contains_row(I(0)));
  CHECK_THROWS_AS(d.entry(I(0)), std::out_of_range);
  REQUIRE(d.law);
  CHECK(d.law->from_row == 3);
  CHECK(ldi_list(Base(10)).law->from_row == 1);
}

TEST_CASE("finite lists") {
  const ListSpec p = table7_pool();
  CHECK(p.size == I(7));
  CHECK(p.label_at(I(1)) == "3/4");
  CHECK(p.rank(WritableNumber::parse("0.11", Base(2))) == I(1));
  CHECK_FALSE(p.rank(WritableNumber::parse("0.1", Base(2))));
  CHECK_THROWS_AS(p.entry(I(8)), std::out_of_range);
  CHECK_FALSE(p.law);
}

TEST_CASE("S0 and swaps are involutions") {
  for (unsigned long n = 0; n < (1ul << 16); ++n) {
    CHECK(s0(s0(I(n))) == I(n));
  }
  const Shuffle s = s0_shuffle();
  const Shuffle w = swap_shuffle(I(3), I(17));
  const Shuffle c = compose(s, w);
  std::vector<bool> hit(1ul << 16);
  for (unsigned long n = 0; n < (1ul << 16); ++n) {
    CHECK(s.inverse(s.map(I(n))) == I(n));
    CHECK(w.inverse(w.map(I(n))) == I(n));
    CHECK(c.inverse(c.map(I(n))) == I(n));
    const Index m = c.map(I(n));
    if (m < (1ul << 16)) hit[m.get_ui()] = true;
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  CHECK(c.map(I(0)) == I(1));
  CHECK(c.map(I(3)) == I(17));
  CHECK(c.support_bound == I(17));
}

TEST_CASE("parse_shuffle") {
  CHECK(parse_shuffle("s0").map(I(0)) == I(1));
  CHECK(parse_shuffle("id").map(I(5)) == I(5));
  CHECK(parse_shuffle("swap:2,9").map(I(9)) == I(2));
  CHECK(parse_shuffle("compose:s0+swap:1,4").map(I(0)) == I(4));
  CHECK_THROWS(parse_shuffle("rotate"));
}

TEST_CASE("shuffled rank stays coherent with entries") {
  const ListSpec l = apply_shuffle(s0_shuffle(), ldi_list(Base(2), Ending::MaxDigit));
  for (unsigned long n = 0; n < (1ul << 12); ++n) {
    const auto w = writable_form(l.entry(I(n)));
    if (!w) continue;
    CHECK(l.rank(*w) == I(n));
  }
  CHECK(l.entry(I(0)).render_prefix(3) == "0.011...");
  REQUIRE(l.law);
  CHECK(l.law->from_row == 2);
}

TEST_CASE("skeleton reorder pins and matches the skeleton diagonal") {
  const ListSpec r = table7_reordered();
  CHECK(r.label_at(I(3)) == "3/4");
  const ListSpec sk = ldi_list(Base(2), Ending::MaxDigit, true);
  for (std::size_t k = 1; k <= 7; ++k) {
    if (k == 3) continue;
    CHECK(r.entry(I(k)).digit_at(k) == sk.entry(I(k)).digit_at(k));
  }
  CHECK_THROWS_AS(skeleton_reorder(table7_pool(), sk, {{RationalValue(1, 3), 2}}, 7), PoolExhausted);
  CHECK_THROWS_AS(skeleton_reorder(table7_pool(), sk, {{RationalValue(3, 4), 9}}, 7), PoolExhausted);
  // Rows past a finite pool are dropped.
  CHECK(skeleton_reorder(table7_pool(), sk, {{RationalValue(3, 4), 3}}, 9).size == Index(7));
}
