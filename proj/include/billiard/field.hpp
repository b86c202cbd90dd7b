#pragma once

/**
 * Exact scalars over the rationals (arbitrary precision, via GMP) and over
 * prime fields GF(p) with p < 2^63.
 *
 * A Scalar always knows the field it lives in. Mixing fields in one
 * operation raises ErrorKind::FieldMismatch; there is no implicit
 * conversion between Q and GF(p).
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "billiard/error.hpp"

namespace billiard {

enum class FieldKind { Rational, PrimeField };

class FieldSpec {
 public:
  // Q.
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  // Throws InvalidField unless p is prime and below 2^63.
  static FieldSpec prime(std::uint64_t p);
  // "rational" or "gfp:<p>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::Rational; }
  // 0 for Q.
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

class Scalar {
 public:
  // Rational zero.
  Scalar() = default;
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  // Rational: num/den reduced. GF(p): num * den^{-1} mod p.
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }
  // Accepts "<int>" or "<int>/<int>", optional sign, surrounding whitespace.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Q only.
  const mpq_class& rational() const;
  // GF(p) only.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Equal iff same field and same element; never throws.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace billiard
