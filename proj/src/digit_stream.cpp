#include "diaglab/digit_stream.hpp"

namespace diaglab {

DigitStream::DigitStream(Base base, Oracle oracle, Tail tail,
                         std::optional<RationalValue> value_hint,
                         std::optional<Period> period)
    : base_(base),
      oracle_(std::make_shared<const Oracle>(std::move(oracle))),
      tail_(tail),
      value_hint_(std::move(value_hint)),
      period_(period) {}

Digit DigitStream::digit_at(std::size_t position) const {
  if (position == 0) throw std::invalid_argument("digit positions start at 1");
  if (tail_.kind == Tail::Kind::Zero && position >= tail_.from) return 0;
  if (tail_.kind == Tail::Kind::Max && position >= tail_.from) return base_.max_digit();
  return (*oracle_)(position);
}

std::optional<RationalValue> DigitStream::limit_value() const {
  if (value_hint_) return value_hint_;
  if (tail_.kind == Tail::Kind::Unknown) return std::nullopt;
  std::vector<Digit> prefix;
  for (std::size_t i = 1; i < tail_.from; ++i) prefix.push_back(digit_at(i));
  mpq_class v = value_of(WritableNumber(base_, {0}, prefix)).get();
  if (tail_.kind == Tail::Kind::Max) {
    mpz_class weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), base_.value(), tail_.from - 1);
    v += mpq_class(1, weight);
  }
  return RationalValue(v);
}

std::string DigitStream::render_prefix(std::size_t digits, bool ellipsis) const {
  std::string out = "0.";
  for (std::size_t i = 1; i <= digits; ++i) out += digit_symbol(digit_at(i), base_);
  if (ellipsis) out += "...";
  return out;
}

namespace {

DigitStream finite_stream(Base base, std::vector<Digit> digits, Tail::Kind kind,
                          const RationalValue& value) {
  const std::size_t from = digits.size() + 1;
  auto shared = std::make_shared<const std::vector<Digit>>(std::move(digits));
  return DigitStream(
      base, [shared](std::size_t pos) { return (*shared)[pos - 1]; },
      Tail{kind, from}, value);
}

void require_fractional(const WritableNumber& w) {
  if (!w.integer_part_is_zero())
    throw std::invalid_argument("digit streams hold fractional values only: " +
                                w.to_string());
}

}  // namespace

DigitStream stream_of_writable(const WritableNumber& w) {
  require_fractional(w);
  const WritableNumber c = w.canonical();
  std::vector<Digit> digits = c.fractional_digits();
  if (c.is_zero()) digits.clear();
  return finite_stream(w.base(), std::move(digits), Tail::Kind::Zero, value_of(c));
}

DigitStream convert_ending(const WritableNumber& w, Ending target) {
  require_fractional(w);
  if (target == Ending::Zero) return stream_of_writable(w);
  const WritableNumber c = w.canonical();
  if (c.is_zero())
    throw NoSuchRepresentation("zero has no representation ending in the maximal digit");
  std::vector<Digit> digits = c.fractional_digits();
  digits.back() -= 1;
  return finite_stream(w.base(), std::move(digits), Tail::Kind::Max, value_of(c));
}

DigitStream stream_of_rational(const RationalValue& x, Base base, Ending ending) {
  if (!(x.get() < 1)) throw std::invalid_argument("expected 0 <= x < 1");
  if (is_writable(x, base)) {
    const WritableNumber w = render(x, base);
    if (ending == Ending::MaxDigit && !x.is_zero()) return convert_ending(w, ending);
    return stream_of_writable(w);
  }

  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  const mpz_class b = base.value();

  // Remainder before position k is num * b^(k-1) mod den.
  auto digit = [num, den, b](std::size_t pos) {
    mpz_class r, e = static_cast<unsigned long>(pos - 1);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
    r = (r * num) % den;
    mpz_class d = (r * b) / den;
    return static_cast<Digit>(d.get_ui());
  };

  // Preperiod: smallest t with (den / coprime part) | b^t.
  mpz_class coprime = den, g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), coprime.get_mpz_t(), b.get_mpz_t());
    if (g == 1) break;
    while (mpz_divisible_p(coprime.get_mpz_t(), g.get_mpz_t())) coprime /= g;
  }
  const mpz_class base_part = den / coprime;
  std::size_t preperiod = 0;
  for (mpz_class p = 1; !mpz_divisible_p(p.get_mpz_t(), base_part.get_mpz_t()); p *= b)
    ++preperiod;

  // Remainder cycle from the first periodic position.
  constexpr std::size_t kCycleCap = 1'000'000;
  std::optional<Period> period;
  mpz_class start, e = static_cast<unsigned long>(preperiod);
  mpz_powm(start.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
  start = (start * num) % den;
  mpz_class r = start;
  for (std::size_t len = 1; len <= kCycleCap; ++len) {
    r = (r * b) % den;
    if (r == start) {
      period = Period{preperiod + 1, len};
      break;
    }
  }
  return DigitStream(base, digit, Tail::unknown(), x, period);
}

WritableNumber truncate(const DigitStream& s, std::size_t k) {
  std::vector<Digit> digits;
  digits.reserve(k + 1);
  for (std::size_t i = 1; i <= k + 1; ++i) digits.push_back(s.digit_at(i));
  return WritableNumber(s.base(), {0}, std::move(digits));
}

WritableNumber approximate(const DigitStream& x, std::size_t k) { return truncate(x, k); }

std::optional<WritableNumber> writable_form(const DigitStream& s) {
  const auto v = s.limit_value();
  if (!v || !is_writable(*v, s.base())) return std::nullopt;
  return render(*v, s.base());
}

DigitStream with_ending(const DigitStream& s, Ending ending) {
  const auto w = writable_form(s);
  if (!w || w->is_zero() || !w->integer_part_is_zero()) return s;
  const bool already = (ending == Ending::Zero && s.tail().kind == Tail::Kind::Zero) ||
                       (ending == Ending::MaxDigit && s.tail().kind == Tail::Kind::Max);
  return already ? s : convert_ending(*w, ending);
}

}  // namespace diaglab
