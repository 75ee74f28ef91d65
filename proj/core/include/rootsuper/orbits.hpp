#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rootsuper/system.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper {

[[nodiscard]] bool is_weight(const RootSupersystem& s, const Vector& v);

struct SmallOrbitVerdict {
  bool small = true;
  std::optional<std::pair<Vector, Vector>> failing_pair;
};

// Throws if the orbit is not closed under the Weyl group or contains a non-weight.
[[nodiscard]] SmallOrbitVerdict is_small_orbit(const RootSupersystem& s, const Orbit& o);

struct SmallOrbitCandidate {
  Vector seed;
  std::size_t orbit_size = 0;
  bool is_weight = false;
  bool is_small = false;
  std::optional<std::pair<Vector, Vector>> failing_pair;
};

struct SmallOrbitReport {
  std::vector<SmallOrbitCandidate> candidates;
  int search_bound = 0;
  std::vector<Orbit> small_orbits;  // distinct orbits, sorted by element list
};

// Seeds k*omega_i and -k*omega_i for every fundamental weight and 1 <= k <= multiple_bound.
[[nodiscard]] SmallOrbitReport small_orbit_search(const RootSupersystem& s, int multiple_bound = 4);

}  // namespace rootsuper
