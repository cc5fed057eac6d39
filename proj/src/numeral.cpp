#include "diaglab/numeral.hpp"

#include <algorithm>

namespace diaglab {

Base::Base(unsigned b) : b_(b) {
  if (b < 2) throw std::invalid_argument("base must be at least 2");
}

std::string to_string(Ending e) {
  return e == Ending::Zero ? "zero" : "max";
}

// ---------------------------------------------------------------------------
// RationalValue

RationalValue::RationalValue(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  if (sgn(q_) < 0) throw std::invalid_argument("negative values are not supported");
}

RationalValue::RationalValue(const mpz_class& numerator,
                             const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
  if (sgn(q_) < 0) throw std::invalid_argument("negative values are not supported");
}

RationalValue::RationalValue(long numerator, unsigned long denominator)
    : RationalValue(mpz_class(numerator), mpz_class(denominator)) {}

RationalValue RationalValue::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    return mpz_class(std::string(s), 10);
  };
  if (slash == std::string_view::npos) return RationalValue(parse_int(text), 1);
  return RationalValue(parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
}

std::string RationalValue::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// WritableNumber

WritableNumber::WritableNumber(Base base, std::vector<Digit> integer_digits,
                               std::vector<Digit> fractional_digits)
    : base_(base), int_(std::move(integer_digits)), frac_(std::move(fractional_digits)) {
  for (Digit d : int_)
    if (d >= base_.value()) throw std::invalid_argument("digit out of range for base");
  for (Digit d : frac_)
    if (d >= base_.value()) throw std::invalid_argument("digit out of range for base");
  auto first = std::find_if(int_.begin(), int_.end(), [](Digit d) { return d != 0; });
  int_.erase(int_.begin(), first);
  if (int_.empty()) int_.push_back(0);
  if (frac_.empty()) frac_.push_back(0);
}

WritableNumber WritableNumber::parse(std::string_view text, Base base) {
  const auto dot = text.find('.');
  const auto int_text = text.substr(0, dot);
  const auto frac_text =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  auto decode = [&](std::string_view s) {
    std::vector<Digit> out;
    out.reserve(s.size());
    for (char c : s) {
      const auto pos = kDefaultSymbols.find(
          static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
      if (pos == std::string_view::npos || pos >= base.value())
        throw std::invalid_argument("invalid digit '" + std::string(1, c) +
                                    "' for base " + std::to_string(base.value()));
      out.push_back(static_cast<Digit>(pos));
    }
    return out;
  };
  if (int_text.empty() && frac_text.empty())
    throw std::invalid_argument("empty numeral");
  return WritableNumber(base, decode(int_text), decode(frac_text));
}

bool WritableNumber::is_zero() const noexcept {
  return integer_part_is_zero() &&
         std::all_of(frac_.begin(), frac_.end(), [](Digit d) { return d == 0; });
}

bool WritableNumber::is_canonical() const noexcept {
  return frac_.back() != 0 || frac_.size() == 1;
}

WritableNumber WritableNumber::canonical() const {
  std::vector<Digit> frac = frac_;
  while (frac.size() > 1 && frac.back() == 0) frac.pop_back();
  return WritableNumber(base_, int_, std::move(frac));
}

std::string WritableNumber::to_string(std::string_view symbols) const {
  std::string out;
  out.reserve(int_.size() + frac_.size() + 1);
  for (Digit d : int_) out += digit_symbol(d, base_, symbols);
  out += '.';
  for (Digit d : frac_) out += digit_symbol(d, base_, symbols);
  return out;
}

// ---------------------------------------------------------------------------

std::string digit_symbol(Digit d, Base base, std::string_view symbols) {
  if (base.value() > symbols.size())
    throw std::invalid_argument("symbol table too small for base " +
                                std::to_string(base.value()));
  return std::string(1, symbols[d]);
}

std::vector<Digit> integer_digits(const mpz_class& n, Base base) {
  if (sgn(n) < 0) throw std::invalid_argument("negative integer");
  if (n == 0) return {0};
  std::vector<Digit> out;
  mpz_class rest = n;
  const mpz_class b = base.value();
  mpz_class q, r;
  while (rest != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
    out.push_back(static_cast<Digit>(r.get_ui()));
    rest = q;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

mpz_class integer_from_digits(const std::vector<Digit>& digits, Base base) {
  if (base.value() <= 36 && digits.size() > 64) {
    // GMP's subquadratic string conversion for long inputs.
    std::string text;
    text.reserve(digits.size());
    for (Digit d : digits) text += kDefaultSymbols[d];
    return mpz_class(text, static_cast<int>(base.value()));
  }
  mpz_class n = 0;
  for (Digit d : digits) {
    n *= base.value();
    n += d;
  }
  return n;
}

RationalValue value_of(const WritableNumber& w) {
  std::vector<Digit> all = w.integer_digits();
  all.insert(all.end(), w.fractional_digits().begin(), w.fractional_digits().end());
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), w.base().value(), w.fractional_digits().size());
  return RationalValue(integer_from_digits(all, w.base()), den);
}

namespace {

// d with every prime factor shared with b removed.
mpz_class strip_base_factors(mpz_class d, Base base) {
  const mpz_class b = base.value();
  mpz_class g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), b.get_mpz_t());
    if (g == 1) return d;
    while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
  }
}

}  // namespace

bool is_writable(const RationalValue& x, Base base) {
  return strip_base_factors(x.denominator(), base) == 1;
}

WritableNumber render(const RationalValue& x, Base base) {
  if (!is_writable(x, base))
    throw NotWritable(x.to_string() + " has no finite expansion in base " +
                      std::to_string(base.value()));
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  mpz_class whole, rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::vector<Digit> frac;
  mpz_class digit;
  while (rem != 0) {
    rem *= base.value();
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    frac.push_back(static_cast<Digit>(digit.get_ui()));
  }
  return WritableNumber(base, integer_digits(whole, base), std::move(frac));
}

std::pair<WritableNumber, WritableNumber> split(const WritableNumber& w) {
  return {WritableNumber(w.base(), w.integer_digits(), {0}),
          WritableNumber(w.base(), {0}, w.fractional_digits())};
}

}  // namespace diaglab
