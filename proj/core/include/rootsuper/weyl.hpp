#pragma once

#include <span>
#include <vector>

#include "rootsuper/system.hpp"

namespace rootsuper {

// Reflection in a non-null vector, with G*alpha cached.
class Reflection {
 public:
  Reflection(const GramForm& form, Vector alpha);

  [[nodiscard]] const Vector& root() const noexcept { return alpha_; }
  // 2(v,alpha)/(alpha,alpha)
  [[nodiscard]] Rational coroot(const Vector& v) const;
  [[nodiscard]] Vector operator()(const Vector& v) const;

 private:
  Vector alpha_;
  Vector g_alpha_;
  Rational scale_;  // 2/(alpha,alpha)
};

[[nodiscard]] Rational cartan_integer(const RootSupersystem& s, const Vector& beta, const Vector& alpha);
[[nodiscard]] Vector reflect(const RootSupersystem& s, const Vector& v, const Vector& alpha);

// One reflection per real root up to sign.
[[nodiscard]] std::vector<Reflection> weyl_generators(const GramForm& form, std::span<const Vector> real_roots);

struct Orbit {
  Vector seed;
  std::vector<Vector> elements;  // canonically sorted

  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  [[nodiscard]] bool contains(const Vector& v) const;
};

[[nodiscard]] Orbit orbit(const RootSupersystem& s, const Vector& v);
[[nodiscard]] Orbit orbit_under(std::span<const Reflection> generators, const Vector& v);

struct RootString {
  int p = 0;
  int q = 0;
  std::vector<Vector> members;  // beta - p alpha, ..., beta + q alpha
};

inline constexpr int kRootStringBound = 16;

[[nodiscard]] RootString root_string(const RootSupersystem& s, const Vector& beta, const Vector& alpha);

enum class StringScope { all_roots, real_roots };

// Every integer i with beta + i*alpha in R (or in R_re), sorted. Exhaustive over
// the finite root set, so gaps are visible.
[[nodiscard]] std::vector<long> string_offsets(const RootSupersystem& s, const Vector& beta, const Vector& alpha,
                                               StringScope scope = StringScope::all_roots);

}  // namespace rootsuper
