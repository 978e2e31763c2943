#include "legcat/field.hpp"

#include <numeric>

namespace legcat {
namespace {

constexpr std::int64_t kMaxPrime = std::int64_t{1} << 31;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_narrow(__int128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw FieldError(std::string("rational overflow in ") + ctx);
  return static_cast<std::int64_t>(v);
}

// Reduced fraction from 128-bit intermediates; canonical sign on the numerator.
Scalar make_rational(__int128 num, __int128 den, const char* ctx) {
  if (den == 0) throw FieldError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Scalar{0, 1};
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return Scalar{checked_narrow(num / a, ctx), checked_narrow(den / a, ctx)};
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  __int128 acc = 1;
  __int128 b = mod_reduce(base, p);
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
  if (p >= kMaxPrime) throw FieldError("prime too large: " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rationals, 0); }

std::int64_t Field::characteristic() const {
  if (!is_prime_field()) throw FieldError("characteristic of the rationals is 0");
  return p_;
}

Scalar Field::from_integer(std::int64_t v) const {
  if (is_prime_field()) return Scalar{mod_reduce(v, p_), 1};
  return Scalar{v, 1};
}

Scalar Field::fraction(std::int64_t num, std::int64_t den) const {
  if (is_prime_field()) {
    Scalar d = from_integer(den);
    if (is_zero(d)) throw FieldError("zero denominator");
    return mul(from_integer(num), inv(d));
  }
  return make_rational(num, den, "fraction");
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar{mod_reduce(a.num + b.num, p_), 1};
  __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 den = static_cast<__int128>(a.den) * b.den;
  return make_rational(num, den, "add");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field())
    return Scalar{static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.num % p_), 1};
  return make_rational(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den, "mul");
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) return a.num == 0 ? a : Scalar{p_ - a.num, 1};
  return Scalar{-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("inverse of zero");
  if (is_prime_field()) return Scalar{mod_pow(a.num, p_ - 2, p_), 1};
  return make_rational(a.num < 0 ? -a.den : a.den, a.num < 0 ? -a.num : a.num, "inv");
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::str(const Scalar& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse(const std::string& text) const {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return from_integer(std::stoll(text));
    return fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw FieldError("cannot parse field element: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw FieldError("field element out of range: '" + text + "'");
  }
}

}  // namespace legcat
