#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rootsuper/rational.hpp"

namespace rootsuper {

// Dense coordinate vector over the rationals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static Vector unit(std::size_t dim, std::size_t i);

  [[nodiscard]] std::size_t dim() const noexcept { return c_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  [[nodiscard]] std::span<const Rational> coords() const noexcept { return c_; }
  [[nodiscard]] bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  // this += s * o
  Vector& add_scaled(const Rational& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, const Rational& s) { return a *= s; }

  friend bool operator==(const Vector& a, const Vector& b) = default;
  // Lexicographic on coordinate tuples; shorter vectors first.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  std::vector<Rational> c_;
};

[[nodiscard]] std::string to_string(const Vector& v);

// Integer combination of the names, e.g. "e1-e3" or "(e1-e2)/2".
[[nodiscard]] std::string format_combination(const Vector& v, const std::vector<std::string>& names);

using Matrix = std::vector<std::vector<Rational>>;

// Symmetric bilinear form given by its Gram matrix in the ambient basis.
class GramForm {
 public:
  GramForm() = default;
  explicit GramForm(Matrix entries);

  static GramForm identity(std::size_t dim);
  static GramForm diagonal(const std::vector<Rational>& diag);

  [[nodiscard]] std::size_t dim() const noexcept { return g_.size(); }
  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return g_[i][j]; }
  [[nodiscard]] const Matrix& entries() const noexcept { return g_; }

  [[nodiscard]] Rational evaluate(const Vector& u, const Vector& v) const;
  // G * v, so that evaluate(u, v) == dot(u, apply(v)).
  [[nodiscard]] Vector apply(const Vector& v) const;
  // Gram matrix of the given vectors.
  [[nodiscard]] GramForm restrict_to(std::span<const Vector> basis) const;

  friend bool operator==(const GramForm&, const GramForm&) = default;

 private:
  Matrix g_;
};

[[nodiscard]] Rational evaluate(const GramForm& form, const Vector& u, const Vector& v);
[[nodiscard]] Rational dot(const Vector& u, const Vector& v);

[[nodiscard]] std::size_t rank(std::span<const Vector> vectors);

// Indices of a maximal independent subfamily, chosen greedily in input order.
[[nodiscard]] std::vector<std::size_t> independent_subset(std::span<const Vector> vectors);

// Basis of {x | M x = 0} for a matrix with `cols` columns.
[[nodiscard]] std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);

// Solves linear systems against a fixed independent family.
class SpanSolver {
 public:
  SpanSolver(std::span<const Vector> basis, std::size_t ambient_dim);

  [[nodiscard]] std::size_t size() const noexcept { return k_; }
  [[nodiscard]] bool contains(const Vector& v) const;
  // Coefficients c with sum c_i b_i = v, or nullopt when v is outside the span.
  [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const Vector& v) const;

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  Matrix left_;   // k x n, left inverse on the span
  Matrix check_;  // (n-k) x n, annihilates the span
};

[[nodiscard]] std::vector<Vector> radical(const GramForm& form, std::span<const Vector> basis);

[[nodiscard]] bool is_nondegenerate(const GramForm& form);

[[nodiscard]] std::vector<Vector> nondegenerate_extension(const GramForm& form,
                                                          std::span<const Vector> ambient_basis,
                                                          std::span<const Vector> w);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row-style Hermite normal form of the lattice generated by the rows; zero rows dropped.
[[nodiscard]] IntMatrix hermite_normal_form(IntMatrix rows);

// Same lattice test for rational generators, after clearing denominators.
[[nodiscard]] bool same_lattice(std::span<const Vector> a, std::span<const Vector> b);

// A basis of the Z-span of the given vectors (rows of the HNF, rescaled).
[[nodiscard]] std::vector<Vector> lattice_basis(std::span<const Vector> generators);

}  // namespace rootsuper
