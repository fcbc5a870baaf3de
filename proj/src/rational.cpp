#include "ultra/rational.hpp"

#include <cctype>
#include <ostream>

#include "ultra/error.hpp"

namespace ultra {

namespace {

[[noreturn]] void bad_rational(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, {std::string(text)}, "not a rational: " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view digits) { return mpz_class(std::string(digits), 10); }

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::ParseError, {}, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator/(const Rational& other) const {
  if (other.is_zero()) throw Error(ErrorKind::ParseError, {}, "division by zero");
  return Rational(mpq_class(value_ / other.value_));
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (body.empty()) bad_rational(text, "empty");

  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text, "expected p/q with decimal digits");
    const mpz_class q = to_mpz(den);
    if (q == 0) bad_rational(text, "zero denominator");
    value = mpq_class(to_mpz(num), q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      bad_rational(text, "malformed decimal");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : to_mpz(whole);
    value = mpq_class(w * scale + to_mpz(frac), scale);
  } else {
    if (!all_digits(body)) bad_rational(text, "expected an integer, p/q or decimal");
    value = mpq_class(to_mpz(body));
  }
  if (negative) value = -value;
  return Rational(std::move(value));
}

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ultra
