#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace poincare {

// Arbitrary precision integer. Values that fit in int64 are stored inline;
// larger ones spill into a heap-allocated mpz. The elimination kernels spend
// almost all their time on small values, so the inline path is the hot one.
class Integer {
 public:
  Integer() noexcept = default;
  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT implicit
  explicit Integer(const mpz_class& v);

  Integer(const Integer& other);
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&& other) noexcept = default;

  static Integer parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool fits_int64() const noexcept { return !big_; }
  int sign() const noexcept;

  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  Integer operator-() const;
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// Truncating division and the matching remainder (C semantics).
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  /// Non-negative gcd; gcd(0, 0) = 0.
  static Integer gcd(const Integer& a, const Integer& b);
  static Integer lcm(const Integer& a, const Integer& b);
  /// a / b where b is known to divide a.
  static Integer divexact(const Integer& a, const Integer& b);
  /// Representative of a modulo m in [0, m).
  static std::uint32_t mod(const Integer& a, std::uint32_t m);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

 private:
  void assign_big(mpz_class v);
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace poincare
