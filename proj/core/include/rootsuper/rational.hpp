#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rootsuper {

// Exact fraction backed by GMP. Always stored in lowest terms with a positive
// denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v);

  [[nodiscard]] const mpq_class& value() const noexcept { return v_; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

  [[nodiscard]] bool is_zero() const noexcept { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const noexcept { return sgn(v_); }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  [[nodiscard]] Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

// Canonical text "p/q" (zero is "0/1").
[[nodiscard]] std::string to_string(const Rational& r);

// Accepts only the canonical form produced by to_string.
[[nodiscard]] Rational parse_rational(std::string_view text);

// Accepts "p" or "p/q" with any nonzero q and normalizes.
[[nodiscard]] Rational parse_rational_relaxed(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rootsuper
