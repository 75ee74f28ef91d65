#include "rootsuper/rational.hpp"

#include <cctype>
#include <ostream>

#include "rootsuper/errors.hpp"

namespace rootsuper {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string to_string(const Rational& r) {
  return r.numerator().get_str() + "/" + r.denominator().get_str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool has_leading_zero(std::string_view digits) { return digits.size() > 1 && digits.front() == '0'; }

struct Parts {
  bool negative = false;
  std::string_view num;
  std::string_view den;
  bool has_den = false;
};

Parts split(std::string_view text) {
  Parts p;
  std::string_view s = text;
  if (!s.empty() && s.front() == '-') {
    p.negative = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    p.num = s;
  } else {
    p.num = s.substr(0, slash);
    p.den = s.substr(slash + 1);
    p.has_den = true;
  }
  if (!is_digits(p.num) || (p.has_den && !is_digits(p.den))) {
    throw FormatError("malformed rational '" + std::string(text) + "'");
  }
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const Parts p = split(text);
  if (!p.has_den) throw FormatError("rational '" + std::string(text) + "' lacks a denominator");
  if (has_leading_zero(p.num) || has_leading_zero(p.den)) {
    throw FormatError("rational '" + std::string(text) + "' has leading zeros");
  }
  mpz_class num(std::string(p.num), 10);
  const mpz_class den(std::string(p.den), 10);
  if (den == 0) throw FormatError("rational '" + std::string(text) + "' has zero denominator");
  if (p.negative) {
    if (num == 0) throw FormatError("negative zero in '" + std::string(text) + "'");
    num = -num;
  }
  Rational r(num, den);
  if (r.numerator() != num || r.denominator() != den) {
    throw FormatError("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return r;
}

Rational parse_rational_relaxed(std::string_view text) {
  const Parts p = split(text);
  mpz_class num(std::string(p.num), 10);
  const mpz_class den = p.has_den ? mpz_class(std::string(p.den), 10) : mpz_class(1);
  if (den == 0) throw FormatError("rational '" + std::string(text) + "' has zero denominator");
  if (p.negative) num = -num;
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

}  // namespace rootsuper
