#include "poincare/integer.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "poincare/error.hpp"

namespace poincare {
namespace {

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz_small(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Integer::Integer(const mpz_class& v) { assign_big(v); }

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpz_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

Integer Integer::parse(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw ParseError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("invalid integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(mpz_class(digits, 10));
}

void Integer::assign_big(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    if (big_) {
      *big_ = std::move(v);
    } else {
      big_ = std::make_unique<mpz_class>(std::move(v));
    }
  }
}

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw InputError("integer " + to_string() + " does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_small(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_mpz() * o.to_mpz());
  return *this;
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(r);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::uint64_t g = std::gcd(magnitude(a.small_), magnitude(b.small_));
    if (g <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return Integer(static_cast<long long>(g));
    }
  }
  mpz_class g;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(g);
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return (divexact(a, gcd(a, b)) * b).abs();
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(q);
}

std::uint32_t Integer::mod(const Integer& a, std::uint32_t m) {
  if (!a.big_) {
    std::int64_t r = a.small_ % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
  }
  return static_cast<std::uint32_t>(mpz_fdiv_ui(a.big_->get_mpz_t(), m));
}

}  // namespace poincare
