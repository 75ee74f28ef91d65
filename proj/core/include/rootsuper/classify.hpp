#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootsuper/catalog.hpp"
#include "rootsuper/errors.hpp"
#include "rootsuper/label.hpp"
#include "rootsuper/system.hpp"

namespace rootsuper {

// Irreducible pieces of a system. Each component is re-expressed on a basis of
// the span of its roots, with the inherited form.
struct Decomposition {
  std::vector<RootSupersystem> components;
  std::vector<Component> indices;    // nonzero roots of each component, as indices into the source
  std::vector<bool> nondegenerate;   // restricted form nondegenerate on the span

  [[nodiscard]] std::size_t size() const noexcept { return components.size(); }
};

// Union-find on the nonzero roots with an edge whenever (a, b) != 0.
[[nodiscard]] Decomposition connected_components(const RootSupersystem& s);
[[nodiscard]] bool is_irreducible(const RootSupersystem& s);

// Irreducible components of the real roots, ordered by their smallest root index.
[[nodiscard]] std::vector<Component> real_components(const RootSupersystem& s);

// The subsystem on span(roots[indices]) with the restricted form.
[[nodiscard]] RootSupersystem restrict_to_span(const RootSupersystem& s, const Component& indices);

// Names the finite irreducible root system formed by the real roots of s.
// Throws UnrecognizedError when s has nonsingular roots, fails verify_T or is
// reducible, or when the invariants match no supported type.
[[nodiscard]] TypeLabel recognize_real_type(const RootSupersystem& s);

struct ComponentProfile {
  std::size_t dim = 0;
  std::size_t real_rank = 0;
  std::size_t nonsingular_count = 0;
  std::vector<std::string> real_types;  // one per real component, or "?" if unnamed
  std::string reason;
};

class UnrecognizedError : public Error {
 public:
  explicit UnrecognizedError(ComponentProfile profile);
  [[nodiscard]] const ComponentProfile& profile() const noexcept { return profile_; }

 private:
  ComponentProfile profile_;
};

// Identifies s against the root system, imaginary-type and real-type tables,
// ignoring any label carried by s. Throws UnrecognizedError on no match.
[[nodiscard]] TypeLabel classify(const RootSupersystem& s);

// The six values lambda takes under permutations of the three A_1 components.
[[nodiscard]] std::vector<Rational> lambda_orbit(const Rational& lambda);

struct IsoVerdict {
  bool isomorphic = false;
  std::string reason;  // empty on success

  explicit operator bool() const noexcept { return isomorphic; }
};

// Throws when the matrix is singular or r == 0.
[[nodiscard]] IsoVerdict check_isomorphism(const RootSupersystem& a, const RootSupersystem& b, const IsoWitness& w);

inline constexpr std::size_t kDefaultDimLimit = 4;

// Backtracking search over images of a root basis. Throws ConstraintError above dim_limit.
[[nodiscard]] std::optional<IsoWitness> find_isomorphism(const RootSupersystem& a, const RootSupersystem& b,
                                                         std::size_t dim_limit = kDefaultDimLimit);

struct SubsystemVerdict {
  bool ok = true;
  std::string reason;
  std::vector<Vector> witness;

  explicit operator bool() const noexcept { return ok; }
};

// Whether `subset` (coordinates of s) is a sub-supersystem of s: contains 0,
// lies in R, has nondegenerate restricted form on its span, and is closed
// under reflections and the null-root condition.
[[nodiscard]] SubsystemVerdict is_sub_supersystem(const RootSupersystem& s, const std::vector<Vector>& subset);

struct TowerMember {
  TypeLabel label;
  bool irreducible = false;
  std::optional<TypeLabel> classified;
  std::string classify_error;
};

struct TowerStep {
  std::size_t from = 0;
  std::size_t to = 0;
  bool nested = false;         // every root maps to a root of the larger system
  bool form_compatible = false;
  SubsystemVerdict sub;
};

struct TowerReport {
  std::vector<TowerMember> members;
  std::vector<TowerStep> steps;
  bool same_family = false;
  bool pass = false;
};

// Builds family instances for an increasing sequence of parameter tuples and
// checks each inclusion. Throws ConstraintError unless every tuple is
// componentwise >= its predecessor and different from it.
[[nodiscard]] TowerReport truncation_tower(Family family, const std::vector<std::vector<int>>& params);

}  // namespace rootsuper
