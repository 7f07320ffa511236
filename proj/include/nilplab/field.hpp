#ifndef NILPLAB_FIELD_HPP
#define NILPLAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "nilplab/error.hpp"

namespace nilplab {

/// The coefficient field: the rationals, or a prime field F_p.
///
/// p is checked for primality by trial division at construction and must
/// fit below 2^31 so that products of residues fit in 128-bit intermediates.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() { return FieldDescriptor(0); }
  static FieldDescriptor prime_field(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// 0 for the rationals, p for F_p.
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string str() const;

 private:
  explicit FieldDescriptor(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element: an arbitrary-precision rational in lowest terms
/// with positive denominator, or a canonical residue in [0, p).
///
/// Immutable value type; all arithmetic is pure and exact.
class Scalar {
 public:
  /// Rational zero over Q.
  Scalar() : field_(FieldDescriptor::rationals()) {}

  static Scalar zero(const FieldDescriptor& f) { return from_integer(0, f); }
  static Scalar one(const FieldDescriptor& f) { return from_integer(1, f); }
  static Scalar from_integer(long v, const FieldDescriptor& f);
  static Scalar from_mpz(const mpz_class& v, const FieldDescriptor& f);
  static Scalar rational(const mpq_class& v);
  static Scalar residue(std::uint64_t r, const FieldDescriptor& f);

  /// Parses "n", "-n" or "n/d" over Q; a decimal residue over F_p.
  static Scalar parse(std::string_view text, const FieldDescriptor& f);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;

  /// Multiplicative inverse; throws NotInvertibleError on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Canonical string form: "n" or "n/d" over Q, the residue over F_p.
  std::string str() const;

  /// Rational payload; only meaningful over Q.
  const mpq_class& rational_value() const { return rat_; }
  /// Residue payload; only meaningful over F_p.
  std::uint64_t residue_value() const { return res_; }

 private:
  explicit Scalar(const FieldDescriptor& f) : field_(f) {}
  void require_same_field(const Scalar& rhs) const;

  FieldDescriptor field_;
  mpq_class rat_;
  std::uint64_t res_ = 0;
};

/// C(top, k) as an exact integer binomial, mapped into f.  Valid for any
/// integer top (negative included), via C(-n, k) = (-1)^k C(n+k-1, k).
Scalar binomial_scalar(long top, unsigned long k, const FieldDescriptor& f);

}  // namespace nilplab

#endif
