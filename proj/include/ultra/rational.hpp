#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ultra {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every distance, scale and tolerance in the library is a Rational; there is
/// no floating point anywhere on the computation path.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  /// Accepts "p/q", a plain integer, or a finite decimal such as "0.125".
  /// Throws ultra::Error (ParseError) on anything else.
  static Rational parse(std::string_view text);

  /// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_positive() const { return sgn(value_) > 0; }
  bool is_negative() const { return sgn(value_) < 0; }

  Rational operator+(const Rational& other) const { return Rational(mpq_class(value_ + other.value_)); }
  Rational operator-(const Rational& other) const { return Rational(mpq_class(value_ - other.value_)); }
  Rational operator*(const Rational& other) const { return Rational(mpq_class(value_ * other.value_)); }
  Rational operator/(const Rational& other) const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  bool operator==(const Rational& other) const { return cmp(value_, other.value_) == 0; }
  std::strong_ordering operator<=>(const Rational& other) const {
    const int c = cmp(value_, other.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ultra
