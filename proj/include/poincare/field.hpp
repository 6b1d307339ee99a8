#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "poincare/integer.hpp"

namespace poincare {

/// The coefficient field: the rationals (characteristic 0) or a prime field.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// 0 selects the rationals, anything else must be prime.
  static Field of_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  /// "Q" or "F<p>".
  std::string name() const;
  /// Parses the CLI selector: "Q" or "p:PRIME".
  static Field parse_selector(const std::string& text);

  friend bool operator==(Field a, Field b) noexcept { return a.characteristic_ == b.characteristic_; }

 private:
  explicit Field(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t p);

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, const Integer& v);
  Scalar(Field f, const mpq_class& v);
  Scalar(Field f, long v) : Scalar(f, Integer(v)) {}

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; for prime fields the canonical residue as an integer.
  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }
  bool is_integral() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2"; residues print as their canonical representative.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

}  // namespace poincare
