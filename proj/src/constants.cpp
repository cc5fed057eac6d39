#include "diaglab/constants.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace diaglab {

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fixed-point interval [lo, hi] / 2^scale.
struct Fixed {
  mpz_class lo = 0;
  mpz_class hi = 0;
  unsigned long scale = 0;

  Enclosure to_enclosure() const {
    const mpz_class one = pow2(scale);
    return {mpq_class(lo, one), mpq_class(hi, one)};
  }
};

unsigned long guard_bits(unsigned bits) { return bits + 16 + std::bit_width(bits); }

// ---------------------------------------------------------------------------
// Primary methods

Enclosure sqrt_minus_one_isqrt(unsigned long n, unsigned bits) {
  // s = floor(sqrt(n) * 2^bits), so s <= sqrt(n) 2^bits < s + 1.
  mpz_class scaled = mpz_class(n) * pow2(2ul * bits);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  const mpz_class one = pow2(bits);
  return {mpq_class(s - one, one), mpq_class(s + 1 - one, one)};
}

// log 2 = sum_{k>=1} 1 / (k 2^k); tail after N terms < 1 / ((N+1) 2^N).
Enclosure log2_binary_series(unsigned bits) {
  Fixed f;
  f.scale = guard_bits(bits);
  const unsigned long terms = bits + 4;
  for (unsigned long k = 1; k <= terms; ++k) {
    const mpz_class den = mpz_class(k) * pow2(k);
    f.lo += floor_div(pow2(f.scale), den);
    f.hi += ceil_div(pow2(f.scale), den);
  }
  f.hi += ceil_div(pow2(f.scale), mpz_class(terms + 1) * pow2(terms));
  return f.to_enclosure();
}

// arctan(1/x) with an alternating series; the first omitted term bounds the
// remainder.
Fixed arctan_inverse(unsigned long x, unsigned long scale) {
  Fixed f;
  f.scale = scale;
  const mpz_class one = pow2(scale);
  const mpz_class x2 = mpz_class(x) * x;
  mpz_class power = x;  // x^(2k+1)
  for (unsigned long k = 0;; ++k) {
    const mpz_class den = mpz_class(2 * k + 1) * power;
    const mpz_class tlo = floor_div(one, den);
    const mpz_class thi = ceil_div(one, den);
    if (tlo == 0) {
      // Remainder from this term on is at most thi in absolute value.
      f.lo -= thi;
      f.hi += thi;
      return f;
    }
    if (k % 2 == 0) {
      f.lo += tlo;
      f.hi += thi;
    } else {
      f.lo -= thi;
      f.hi -= tlo;
    }
    power *= x2;
  }
}

// pi = 16 arctan(1/5) - 4 arctan(1/239)
Enclosure pi_minus_three_machin(unsigned bits) {
  const unsigned long scale = guard_bits(bits);
  const Fixed a = arctan_inverse(5, scale);
  const Fixed b = arctan_inverse(239, scale);
  Fixed f;
  f.scale = scale;
  const mpz_class three = 3 * pow2(scale);
  f.lo = 16 * a.lo - 4 * b.hi - three;
  f.hi = 16 * a.hi - 4 * b.lo - three;
  return f.to_enclosure();
}

// e = sum 1/k!; tail after the k = N term < 1 / (N! N).
Enclosure e_minus_two_factorial(unsigned bits) {
  Fixed f;
  f.scale = guard_bits(bits);
  const mpz_class one = pow2(f.scale);
  mpz_class fact = 1;
  unsigned long k = 0;
  for (;; ++k) {
    if (k > 0) fact *= k;
    const mpz_class tlo = floor_div(one, fact);
    f.lo += tlo;
    f.hi += ceil_div(one, fact);
    if (k >= 2 && tlo == 0) break;
  }
  f.hi += ceil_div(one, fact * k);
  const mpz_class two = 2 * one;
  f.lo -= two;
  f.hi -= two;
  return f.to_enclosure();
}

// ---------------------------------------------------------------------------
// Secondary methods

// Consecutive convergents h/k of a continued fraction bracket its value and
// differ by exactly 1 / (k_i k_{i+1}).
template <typename NextTerm>
Enclosure continued_fraction(unsigned long a0, NextTerm next, unsigned bits) {
  mpz_class h_prev = 1, k_prev = 0;
  mpz_class h = a0, k = 1;
  const mpz_class target = pow2(bits);
  for (;;) {
    const unsigned long a = next();
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (k * k_prev >= target) break;
  }
  mpq_class x(h_prev, k_prev), y(h, k);
  x.canonicalize();
  y.canonicalize();
  return x < y ? Enclosure{x, y} : Enclosure{y, x};
}

Enclosure sqrt_minus_one_continued_fraction(unsigned long n, unsigned bits) {
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), mpz_class(n).get_mpz_t());
  const unsigned long a0 = root.get_ui();
  // Periodic expansion of sqrt(n) via the (m, d, a) recurrence.
  unsigned long m = 0, d = 1, a = a0;
  auto next = [&]() {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    return a;
  };
  Enclosure e = continued_fraction(a0, next, bits);
  e.lo -= 1;
  e.hi -= 1;
  return e;
}

// log 2 = 2 atanh(1/3) = 2 sum_{k>=0} 1 / ((2k+1) 3^(2k+1)).
Enclosure log2_atanh_series(unsigned bits) {
  Fixed f;
  f.scale = guard_bits(bits);
  const mpz_class one = pow2(f.scale);
  mpz_class power = 3;
  unsigned long k = 0;
  for (;; ++k) {
    const mpz_class den = mpz_class(2 * k + 1) * power;
    const mpz_class tlo = floor_div(one, den);
    if (tlo == 0) break;
    f.lo += tlo;
    f.hi += ceil_div(one, den);
    power *= 9;
  }
  // Remainder from term k on: < 1 / ((2k+1) 3^(2k+1)) * 9/8.
  f.hi += ceil_div(9 * one, 8 * mpz_class(2 * k + 1) * power);
  f.lo *= 2;
  f.hi *= 2;
  return f.to_enclosure();
}

// pi = sum_k 16^-k (4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6)), all terms
// positive; remainder after N terms < 4 / ((8N+1) 16^N) * 16/15.
Enclosure pi_minus_three_bbp(unsigned bits) {
  Fixed f;
  f.scale = guard_bits(bits);
  const mpz_class one = pow2(f.scale);
  mpz_class power = 1;  // 16^k
  unsigned long k = 0;
  for (;; ++k) {
    const mpz_class lead = floor_div(4 * one, (8 * k + 1) * power);
    if (lead == 0) break;
    f.lo += lead;
    f.hi += ceil_div(4 * one, (8 * k + 1) * power);
    for (unsigned long off : {4ul, 5ul, 6ul}) {
      const mpz_class num = off == 4 ? 2 * one : one;
      f.lo -= ceil_div(num, (8 * k + off) * power);
      f.hi -= floor_div(num, (8 * k + off) * power);
    }
    power *= 16;
  }
  f.hi += ceil_div(64 * one, 15 * (8 * k + 1) * power);
  const mpz_class three = 3 * one;
  f.lo -= three;
  f.hi -= three;
  return f.to_enclosure();
}

// e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]
Enclosure e_minus_two_continued_fraction(unsigned bits) {
  unsigned long i = 0;
  auto next = [&]() -> unsigned long {
    ++i;
    return i % 3 == 2 ? 2 * (i + 1) / 3 : 1;
  };
  Enclosure e = continued_fraction(2, next, bits);
  e.lo -= 2;
  e.hi -= 2;
  return e;
}

// Largest K with b^K <= 2^bits, up to a factor from rounding log2(b) up.
std::size_t digits_resolved_by(unsigned long bits, Base base) {
  const auto per_digit = static_cast<unsigned long>(std::bit_width(base.value() - 1));
  return bits / per_digit;
}

std::vector<Digit> floor_scaled_digits(const mpq_class& x, const mpz_class& scale,
                                       std::size_t count, Base base) {
  mpz_class n = floor_div(x.get_num() * scale, x.get_den());
  std::vector<Digit> digits = integer_digits(n, base);
  if (digits.size() < count) digits.insert(digits.begin(), count - digits.size(), 0);
  return digits;
}

struct ConstantState {
  ConstantState(Constant c, Base b, Method m) : constant(c), base(b), method(m) {}

  Constant constant;
  Base base;
  Method method;
  std::mutex mutex;
  std::vector<Digit> digits;
  unsigned long bits = kInitialPrecisionBits;
};

Digit constant_digit(ConstantState& s, std::size_t pos) {
  std::lock_guard lock(s.mutex);
  for (unsigned round = 0; pos > s.digits.size(); ++round) {
    if (round == kMaxRefinementRounds)
      throw RefinementBudgetExceeded("enclosure of " + name(s.constant) +
                                     " did not separate digit " + std::to_string(pos));
    if (round > 0) s.bits *= 2;
    const std::size_t count = digits_resolved_by(s.bits, s.base);
    if (count < pos) continue;
    const Enclosure e = enclose(s.constant, s.method, static_cast<unsigned>(s.bits));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), s.base.value(), count);
    const auto lo = floor_scaled_digits(e.lo, scale, count, s.base);
    const auto hi = floor_scaled_digits(e.hi, scale, count, s.base);
    if (lo.size() != count || hi.size() != count) continue;
    const auto mismatch = std::mismatch(lo.begin(), lo.end(), hi.begin());
    const auto agreed = static_cast<std::size_t>(mismatch.first - lo.begin());
    if (agreed > s.digits.size()) s.digits.assign(lo.begin(), lo.begin() + agreed);
  }
  return s.digits[pos - 1];
}

}  // namespace

Enclosure enclose(Constant c, Method method, unsigned bits) {
  const bool primary = method == Method::Primary;
  switch (c) {
    case Constant::Sqrt2Minus1:
      return primary ? sqrt_minus_one_isqrt(2, bits)
                     : sqrt_minus_one_continued_fraction(2, bits);
    case Constant::Sqrt3Minus1:
      return primary ? sqrt_minus_one_isqrt(3, bits)
                     : sqrt_minus_one_continued_fraction(3, bits);
    case Constant::Log2:
      return primary ? log2_binary_series(bits) : log2_atanh_series(bits);
    case Constant::PiMinus3:
      return primary ? pi_minus_three_machin(bits) : pi_minus_three_bbp(bits);
    case Constant::EMinus2:
      return primary ? e_minus_two_factorial(bits) : e_minus_two_continued_fraction(bits);
  }
  throw std::logic_error("unknown constant");
}

std::string name(Constant c) {
  switch (c) {
    case Constant::Sqrt2Minus1: return "sqrt2-1";
    case Constant::Sqrt3Minus1: return "sqrt3-1";
    case Constant::Log2: return "log2";
    case Constant::PiMinus3: return "pi-3";
    case Constant::EMinus2: return "e-2";
  }
  return "?";
}

std::string label(Constant c) {
  switch (c) {
    case Constant::Sqrt2Minus1: return "sqrt(2)-1";
    case Constant::Sqrt3Minus1: return "sqrt(3)-1";
    case Constant::Log2: return "log(2)";
    case Constant::PiMinus3: return "pi-3";
    case Constant::EMinus2: return "e-2";
  }
  return "?";
}

std::optional<Constant> parse_constant(std::string_view text) {
  for (Constant c : kAllConstants)
    if (text == name(c) || text == label(c)) return c;
  return std::nullopt;
}

DigitStream stream_of_constant(Constant c, Base base, Method method) {
  auto state = std::make_shared<ConstantState>(c, base, method);
  return DigitStream(
      base, [state](std::size_t pos) { return constant_digit(*state, pos); },
      Tail::unknown());
}

}  // namespace diaglab
