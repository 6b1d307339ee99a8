#include "poincare/field.hpp"

#include "poincare/error.hpp"

namespace poincare {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(characteristic_); }

Field Field::parse_selector(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("p:", 0) == 0 && text.size() > 2) {
    Integer p = Integer::parse(text.substr(2));
    if (p.sign() <= 0) throw InputError("invalid field selector '" + text + "'");
    return prime(static_cast<std::uint64_t>(p.to_int64()));
  }
  throw InputError("invalid field selector '" + text + "' (expected Q or p:PRIME)");
}

Scalar::Scalar(Field f, const Integer& v) : field_(f) {
  if (f.is_rational()) {
    q_ = mpq_class(v.to_mpz());
  } else {
    r_ = Integer::mod(v, f.characteristic());
    q_ = r_;
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (v.get_den() == 0) throw InputError("zero denominator");
  if (f.is_rational()) {
    // mpq assignment assumes a positive denominator.
    q_.get_num() = v.get_num();
    q_.get_den() = v.get_den();
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = f.characteristic();
  std::uint32_t den = Integer::mod(Integer(v.get_den()), p);
  if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(p));
  Scalar n(f, Integer(v.get_num()));
  *this = n * Scalar(f, Integer(static_cast<long>(den))).inverse();
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

bool Scalar::is_integral() const { return !field_.is_rational() || q_.get_den() == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw InputError("mixed fields: " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.characteristic() - r_;
    s.q_ = s.r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
    return s;
  }
  // Fermat: r^(p-2).
  const std::uint64_t p = field_.characteristic();
  std::uint64_t base = r_, result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  s.r_ = static_cast<std::uint32_t>(result);
  s.q_ = s.r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % field_.characteristic());
    q_ = r_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.characteristic());
    q_ = r_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

}  // namespace poincare
