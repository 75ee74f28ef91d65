#include "rootsuper/orbits.hpp"

#include <algorithm>
#include <set>

#include "rootsuper/catalog.hpp"
#include "rootsuper/classify.hpp"
#include "rootsuper/errors.hpp"

namespace rootsuper {

bool is_weight(const RootSupersystem& s, const Vector& v) {
  for (const auto& a : s.real_roots()) {
    if (!cartan_integer(s, v, a).is_integer()) return false;
  }
  return true;
}

SmallOrbitVerdict is_small_orbit(const RootSupersystem& s, const Orbit& o) {
  const auto gens = weyl_generators(s.form(), s.real_roots());
  for (const auto& x : o.elements) {
    if (!is_weight(s, x)) throw Error("is_small_orbit: " + to_string(x) + " is not a weight");
    for (const auto& g : gens) {
      if (!o.contains(g(x))) throw Error("is_small_orbit: set is not closed under the Weyl group");
    }
  }
  for (const auto& x : o.elements) {
    for (const auto& y : o.elements) {
      if (x == y || x == -y) continue;
      const Vector diff = x - y;
      if (diff.is_zero() || !s.contains(diff)) return SmallOrbitVerdict{false, std::pair{x, y}};
    }
  }
  return {};
}

SmallOrbitReport small_orbit_search(const RootSupersystem& s, int multiple_bound) {
  if (!s.nonsingular_roots().empty()) throw Error("small_orbit_search: input has nonsingular roots");
  if (!is_irreducible(s)) throw Error("small_orbit_search: input is reducible");
  SmallOrbitReport report;
  report.search_bound = multiple_bound;
  const auto gens = weyl_generators(s.form(), s.real_roots());
  const auto weights = fundamental_weights(s, root_base(s));
  std::set<std::vector<Vector>> small;
  for (const auto& w : weights) {
    for (int k = 1; k <= multiple_bound; ++k) {
      for (int sign : {1, -1}) {
        SmallOrbitCandidate c;
        c.seed = w * Rational(sign * k);
        c.is_weight = is_weight(s, c.seed);
        const Orbit o = orbit_under(gens, c.seed);
        c.orbit_size = o.size();
        if (c.is_weight) {
          const auto v = is_small_orbit(s, o);
          c.is_small = v.small;
          c.failing_pair = v.failing_pair;
          if (v.small) small.insert(o.elements);
        }
        report.candidates.push_back(std::move(c));
      }
    }
  }
  for (const auto& elems : small) report.small_orbits.push_back(Orbit{elems.front(), elems});
  return report;
}

}  // namespace rootsuper
