#include "billiard/field.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <sstream>

namespace billiard {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidField: return "invalid-field";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::RepeatedEigenvalue: return "repeated-eigenvalue";
    case ErrorKind::NotMultiplicityFree: return "not-multiplicity-free";
    case ErrorKind::SeedNotGeneric: return "seed-not-generic";
    case ErrorKind::NotLeonardSystem: return "not-leonard-system";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::ZeroDenominator: return "zero-denominator";
    case ErrorKind::InconsistentLabels: return "inconsistent-labels";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(const mpz_class& value, u64 p) {
  // mpz_fdiv_ui yields the non-negative remainder for a positive divisor.
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (u64{1} << 63)) throw Error(ErrorKind::InvalidField, "modulus must be below 2^63");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.modulus_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q") return rational();
  if (text.starts_with("gfp:")) {
    std::string_view digits = text.substr(4);
    if (digits.empty() || digits.size() > 19)
      throw Error(ErrorKind::InvalidField, "bad field '" + std::string(text) + "'");
    u64 p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::InvalidField, "bad field '" + std::string(text) + "'");
      p = p * 10 + static_cast<u64>(c - '0');
    }
    return prime(p);
  }
  throw Error(ErrorKind::InvalidField, "bad field '" + std::string(text) + "' (expected rational or gfp:<p>)");
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "rational";
  return "gfp:" + std::to_string(modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

Scalar::Scalar(const FieldSpec& field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (field.is_rational()) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const u64 p = field.modulus();
    const u64 d = reduce(den, p);
    if (d == 0)
      throw Error(ErrorKind::DivisionByZero, "denominator " + den.get_str() + " vanishes in " + field.to_string());
    value_ = mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p);
  }
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Scalar(field, parse_integer(body, text));
  const mpz_class num = parse_integer(trim(body.substr(0, slash)), text);
  const mpz_class den = parse_integer(trim(body.substr(slash + 1)), text);
  return Scalar(field, num, den);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<u64>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not in a prime field");
  return std::get<u64>(value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    mpq_class& q = std::get<mpq_class>(out.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  } else {
    const u64 p = field_.modulus();
    out.value_ = pow_mod(std::get<u64>(value_), p - 2, p);
  }
  return out;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1 : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  return std::to_string(std::get<u64>(value_));
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_)
    throw Error(ErrorKind::FieldMismatch, "field mismatch: " + field_.to_string() + " vs " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* q = std::get_if<mpq_class>(&out.value_)) {
    *q = -*q;
  } else {
    u64& r = std::get<u64>(out.value_);
    r = r == 0 ? 0 : field_.modulus() - r;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    const u64 p = field_.modulus();
    u64& r = std::get<u64>(value_);
    const u64 s = std::get<u64>(rhs.value_);
    r = r >= p - s ? r - (p - s) : r + s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    const u64 p = field_.modulus();
    u64& r = std::get<u64>(value_);
    const u64 s = std::get<u64>(rhs.value_);
    r = r >= s ? r - s : r + (p - s);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    u64& r = std::get<u64>(value_);
    r = mul_mod(r, std::get<u64>(rhs.value_), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(rhs.value_);
    return *this;
  }
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<u64>(a.value_) == std::get<u64>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace billiard
