#include <doctest.h>

#include <set>

#include "diaglab/enumerations.hpp"
#include "oracles.hpp"

using namespace diaglab;

TEST_CASE("digital inversion") {
  CHECK(di(Index(0)).to_string() == "0.0");
  CHECK(di(Index(6)).to_string() == "0.011");
  CHECK(di(Index(123), Base(10)).to_string() == "0.321");
  CHECK(di(Index(120), Base(10)).to_string() == "0.021");
  for (std::uint64_t n = 0; n < 5000; ++n) {
    CHECK(di(Index(static_cast<unsigned long>(n))).to_string() == oracle::di_string(n));
    CHECK(di(Index(static_cast<unsigned long>(n)), Base(10)).to_string() == oracle::di10_string(n));
  }
  CHECK(di_inverse(WritableNumber::parse("0.0110000", Base(2))) == 6);
  CHECK_THROWS(di_inverse(WritableNumber::parse("1.1", Base(2))));
}

TEST_CASE("digit count") {
  CHECK(digit_count(Index(0), Base(2)) == 1);
  CHECK(digit_count(Index(8), Base(2)) == 4);
  CHECK(digit_count(Index(999), Base(10)) == 3);
}

TEST_CASE("W2 ranks every listed entry") {
  for (unsigned long n = 0; n < 3000; ++n) CHECK(w2_rank(w2_list(Index(n))) == n);
  std::set<std::string> seen;
  for (unsigned long n = 0; n < 3000; ++n) seen.insert(w2_list(Index(n)).to_string());
  CHECK(seen.size() == 3000);
}

TEST_CASE("selectors") {
  CHECK(selector_decode(SelectorCode(Index(0))).empty());
  CHECK(selector_decode(SelectorCode(Index(6))) == std::set<std::size_t>{1, 2});
  const std::vector<int> items{3, 42, 2, 22};
  CHECK(select(SelectorCode(Index(2)), std::span<const int>(items)) == std::vector<int>{42});
  CHECK_THROWS_AS(select(SelectorCode(Index(16)), std::span<const int>(items)), OutOfRange);
  const std::set<std::size_t> big{0, 100};
  CHECK(selector_decode(selector_encode(big)) == big);
}

TEST_CASE("words") {
  CHECK(to_string(Word{3, 1, 2}) == "312");
  CHECK(parse_word("312") == Word{3, 1, 2});
  CHECK(to_string(Word{10, 2}) == "10 2");
  CHECK(parse_word("10 2") == Word{10, 2});
  CHECK_THROWS(parse_word("a"));
  CHECK_THROWS_AS(applicative_rank(Word{1, 4}, 3), OutOfAlphabet);
}

TEST_CASE("lexicographic order matches the oracle") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 4; ++d) {
      std::vector<std::string> got;
      for (const auto& w : lex_list(n, d)) got.push_back(to_string(w));
      CHECK(got == oracle::all_words(n, d));
    }
}

TEST_CASE("applicative rank and unrank") {
  const auto app = applicative_list(3, 3);
  REQUIRE(app.size() == 39);
  for (unsigned long i = 1; i <= 39; ++i) {
    CHECK(applicative_rank(app[i - 1], 3) == i);
    CHECK(applicative_unrank(Index(i), 3) == app[i - 1]);
  }
  const auto app5 = applicative_list(5, 5);
  for (unsigned long i = 1; i <= app5.size(); i += 37) CHECK(applicative_rank(app5[i - 1], 5) == i);
  CHECK_THROWS_AS(applicative_list(3, 2), InvalidShape);
  CHECK_THROWS(applicative_unrank(Index(40), 3));
  CHECK(applicative_count(3, 3) == 39);
}
