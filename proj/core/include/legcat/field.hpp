// Exact scalar arithmetic over prime fields F_p and the rationals.
// No floating point anywhere; every value is kept in canonical form
// (residue in [0,p) for F_p, reduced fraction with positive denominator for Q).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace legcat {

class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

// One field element. The meaning of the payload depends on the owning Field:
// over F_p `num` is the canonical residue and `den` is 1; over Q the value is
// num/den with gcd(|num|, den) = 1 and den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

// Field descriptor plus all element operations. Small value type; cheap to
// copy and compare. Every container of Scalars carries exactly one Field.
class Field {
 public:
  static Field prime(std::int64_t p);  // validates primality by trial division
  static Field rationals();

  bool is_prime_field() const { return kind_ == Kind::Prime; }
  // The prime p; only meaningful for prime fields.
  std::int64_t characteristic() const;

  Scalar zero() const { return Scalar{0, 1}; }
  Scalar one() const { return Scalar{1, 1}; }
  Scalar from_integer(std::int64_t v) const;
  Scalar fraction(std::int64_t num, std::int64_t den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws FieldError on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a == one(); }

  std::string str(const Scalar& a) const;
  // Parses "7", "-3" or "2/5"; residues are reduced mod p for prime fields.
  Scalar parse(const std::string& text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  enum class Kind { Prime, Rationals };
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Prime;
  std::int64_t p_ = 2;
};

}  // namespace legcat
