#pragma once

#include <random>
#include <vector>

#include "rootsuper/catalog.hpp"
#include "rootsuper/linalg.hpp"

namespace rootsuper::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

inline Rational random_rational(std::mt19937& rng, long bound = 6) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937& rng, std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng);
  return v;
}

// A spread of catalog systems that keeps the unit suite quick.
inline std::vector<TypeLabel> sample_catalog() {
  return {
      make_label(Family::A, {2}),       make_label(Family::B, {3}),       make_label(Family::C, {3}),
      make_label(Family::D, {4}),       make_label(Family::BC, {2}),      make_label(Family::G2),
      make_label(Family::A0T, {3}),     make_label(Family::C0T, {2}),     make_label(Family::ATP, {2, 3}),
      make_label(Family::A_ll, {1}),    make_label(Family::B_TT, {2, 2}), make_label(Family::BC_TT, {1, 2}),
      make_label(Family::C_1T, {2}),    make_label(Family::AB_13),        make_label(Family::G_12),
      make_label(Family::D_21l, {}, Rational(2)), make_label(Family::D_2T, {2}), make_label(Family::B_T1, {2}),
  };
}

}  // namespace rootsuper::testing
