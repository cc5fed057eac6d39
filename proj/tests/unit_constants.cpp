#include <doctest.h>

#include <thread>

#include "diaglab/constants.hpp"
#include "diaglab/digit_stream.hpp"
#include "oracles.hpp"

using namespace diaglab;

namespace {

oracle::Bounds bounds_of(Constant c) {
  switch (c) {
    case Constant::Log2: return [](unsigned t) { return oracle::log2(t); };
    case Constant::Sqrt2Minus1: return [](unsigned t) { return oracle::sqrt_minus_one(2, 8 * t); };
    case Constant::Sqrt3Minus1: return [](unsigned t) { return oracle::sqrt_minus_one(3, 8 * t); };
    case Constant::PiMinus3: return [](unsigned t) { return oracle::pi_minus_three(t); };
    case Constant::EMinus2: return [](unsigned t) { return oracle::e_minus_two(t); };
  }
  return {};
}

}  // namespace

TEST_CASE("enclosures are narrow and contain the oracle interval") {
  for (Constant c : kAllConstants)
    for (Method m : {Method::Primary, Method::Secondary}) {
      const Enclosure e = enclose(c, m, 100);
      CHECK(e.lo <= e.hi);
      CHECK(e.hi - e.lo <= mpq_class(1, mpz_class(1) << 100));
      const auto [lo, hi] = bounds_of(c)(64);
      CHECK(e.hi >= lo);
      CHECK(e.lo <= hi);
    }
}

TEST_CASE("digits match the oracle in several bases") {
  for (Constant c : kAllConstants)
    for (unsigned b : {2u, 3u, 10u, 16u}) {
      const std::string want = oracle::digits(bounds_of(c), b, 40);
      REQUIRE(want != "unresolved");
      for (Method m : {Method::Primary, Method::Secondary}) {
        const auto s = stream_of_constant(c, Base(b), m);
        std::string got;
        for (std::size_t i = 1; i <= 40; ++i) got += digit_symbol(s.digit_at(i), Base(b));
        CHECK_MESSAGE(got == want, name(c) << " base " << b);
      }
    }
}

TEST_CASE("names round-trip") {
  for (Constant c : kAllConstants) {
    REQUIRE(parse_constant(name(c)));
    CHECK(*parse_constant(name(c)) == c);
  }
  CHECK(label(Constant::Log2) == "log(2)");
  CHECK_FALSE(parse_constant("tau"));
}

TEST_CASE("streams are usable from several threads") {
  const auto s = stream_of_constant(Constant::PiMinus3, Base(10));
  std::vector<std::thread> ts;
  std::vector<Digit> got(4);
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { got[i] = s.digit_at(200 + i); });
  for (auto& t : ts) t.join();
  const std::string want = oracle::digits(bounds_of(Constant::PiMinus3), 10, 203);
  for (int i = 0; i < 4; ++i) CHECK(got[i] == static_cast<Digit>(want[199 + i] - '0'));
}
