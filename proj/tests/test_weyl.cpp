#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rootsuper/catalog.hpp"
#include "rootsuper/errors.hpp"
#include "rootsuper/weyl.hpp"
#include "support.hpp"

using namespace rootsuper;
using rootsuper::testing::vec;

namespace {

// Independent orbit oracle: repeated full sweeps until nothing new appears.
std::set<Vector> sweep_orbit(const RootSupersystem& s, const Vector& v) {
  std::set<Vector> seen{v};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Vector> current(seen.begin(), seen.end());
    for (const auto& x : current) {
      for (const auto& a : s.real_roots()) {
        const Rational c = Rational(2) * s.pair(x, a) / s.pair(a, a);
        if (seen.insert(x - c * a).second) grew = true;
      }
    }
  }
  return seen;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("cartan integers") {
  const RootSupersystem a2 = make_root_system(Family::A, 2);
  const Vector a1 = vec({1, -1});  // e1 - e2 in the (e1-e3, e2-e3) basis
  const Vector a2r = vec({0, 1});  // e2 - e3
  CHECK(cartan_integer(a2, a1, a1) == Rational(2));
  CHECK(cartan_integer(a2, a1, a2r) == Rational(-1));

  const RootSupersystem bc = make_root_system(Family::BC, 2);
  CHECK(cartan_integer(bc, vec({2, 0}), vec({1, 0})) == Rational(4));

  const RootSupersystem a03 = make_imaginary(Family::A0T, 3);
  CHECK_THROWS_AS((void)cartan_integer(a03, a03.real_roots().front(), vec({1, 0, 0})), NullRootError);
}

TEST_CASE("reflections") {
  const RootSupersystem b3 = make_root_system(Family::B, 3);
  std::mt19937 rng(3);
  for (const auto& a : b3.real_roots()) {
    CHECK(reflect(b3, a, a) == -a);
    const Vector v = rootsuper::testing::random_vector(rng, 3);
    CHECK(reflect(b3, reflect(b3, v, a), a) == v);
  }
  const RootSupersystem a03 = make_imaginary(Family::A0T, 3);
  const Vector star = vec({1, 0, 0});
  const Vector alpha = vec({0, 1, -1});  // e1 - e2 with t0 = 1
  REQUIRE(a03.pair(alpha, star) == a03.pair(alpha, alpha) / Rational(2));
  CHECK(reflect(a03, star, alpha) == star - alpha);
  CHECK_THROWS_AS((void)reflect(a03, alpha, star), NullRootError);
}

TEST_CASE("orbits") {
  const RootSupersystem b3 = make_root_system(Family::B, 3);
  CHECK(orbit(b3, vec({0, 0, 0})).elements == std::vector<Vector>{vec({0, 0, 0})});
  CHECK(orbit(b3, vec({1, 0, 0})).size() == 6);

  const RootSupersystem a2 = make_root_system(Family::A, 2);
  const auto w = fundamental_weights(a2, root_base(a2));
  const Orbit o = orbit(a2, w[0]);
  CHECK(o.size() == 3);
  CHECK(o.contains(w[0]));
}

TEST_CASE("orbit output does not depend on traversal") {
  std::mt19937 rng(17);
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    CAPTURE(to_string(l));
    const RootSupersystem s = make_system(l);
    const Vector seed = s.roots()[std::uniform_int_distribution<std::size_t>(0, s.roots().size() - 1)(rng)];
    const Orbit o = orbit(s, seed);
    const auto oracle = sweep_orbit(s, seed);
    CHECK(o.elements == std::vector<Vector>(oracle.begin(), oracle.end()));
    auto gens = weyl_generators(s.form(), s.real_roots());
    std::reverse(gens.begin(), gens.end());
    CHECK(orbit_under(gens, seed).elements == o.elements);
  }
}

TEST_CASE("root strings") {
  const RootSupersystem a2 = make_root_system(Family::A, 2);
  const Vector a1 = vec({1, -1});
  const Vector a2r = vec({0, 1});
  const RootString self = root_string(a2, a1, a1);
  CHECK(self.p == 2);
  CHECK(self.q == 0);
  CHECK(self.members == std::vector<Vector>{-a1, vec({0, 0}), a1});

  const RootString mixed = root_string(a2, a2r, a1);
  CHECK(mixed.p == 0);
  CHECK(mixed.q == 1);

  const RootSupersystem a03 = make_imaginary(Family::A0T, 3);
  const Vector star = vec({1, 0, 0});
  const Vector alpha = vec({0, 1, -1});
  const RootString ns = root_string(a03, star, alpha);
  CHECK(ns.p == 1);
  CHECK(ns.q == 0);
  CHECK(ns.members == std::vector<Vector>{star - alpha, star});

  CHECK_THROWS_AS((void)root_string(a03, alpha, star), Error);
  CHECK_THROWS_AS((void)root_string(a2, vec({5, 5}), a1), Error);
}

TEST_CASE("form invariance and Cartan bounds over the sample") {
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    CAPTURE(to_string(l));
    const RootSupersystem s = make_system(l);
    const auto gens = weyl_generators(s.form(), s.real_roots());
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < s.roots().size(); i += 3) {
        const Vector& u = s.roots()[i];
        const Vector& v = s.roots()[(i * 7 + 1) % s.roots().size()];
        CHECK(s.pair(g(u), g(v)) == s.pair(u, v));
      }
    }
    for (const auto& a : s.real_roots()) {
      for (const auto& b : s.roots()) {
        const Rational c = cartan_integer(s, b, a);
        CHECK(c.abs() <= Rational(9));
        if (b.is_zero()) continue;
        if (s.is_real(b)) {
          CHECK(c.abs() <= Rational(4));
        } else {
          CHECK(c.abs() <= Rational(2));
        }
      }
    }
  }
}

TEST_CASE("nonsingular strings through nonsingular roots are short") {
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    CAPTURE(to_string(l));
    const RootSupersystem s = make_system(l);
    for (const auto& a : s.nonsingular_roots()) {
      for (const auto& b : s.nonsingular_roots()) {
        if (s.pair(a, b).is_zero()) continue;
        const auto offs = string_offsets(s, b, a);
        CHECK(offs.size() <= 3);
        for (long k : offs) CHECK(std::abs(k) <= 1);
      }
    }
  }
}

TEST_CASE("string_offsets sees gaps") {
  const RootSupersystem s(GramForm::identity(1), {vec({-3}), vec({-1}), vec({0}), vec({1}), vec({3})});
  CHECK(string_offsets(s, vec({1}), vec({1})) == std::vector<long>{-4, -2, -1, 0, 2});
  const RootString rs = root_string(s, vec({1}), vec({1}));
  CHECK(rs.p == 2);
  CHECK(rs.q == 0);
}

}
