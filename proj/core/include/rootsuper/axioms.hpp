#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rootsuper/system.hpp"

namespace rootsuper {

struct AxiomCheck {
  std::string id;
  bool pass = true;
  std::vector<Vector> witness;  // empty on pass
  std::string note;
  std::size_t evaluated = 0;  // number of instances examined
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomCheck> checks;

  [[nodiscard]] const AxiomCheck* find(std::string_view id) const;
  [[nodiscard]] const AxiomCheck* first_failure() const;
};

[[nodiscard]] AxiomReport verify_T(const RootSupersystem& s);
[[nodiscard]] AxiomReport verify_Tprime(const RootSupersystem& s);
[[nodiscard]] AxiomReport check_invariance(const RootSupersystem& s);

// Lattice form: the lattice is Z^dim with the given Gram matrix; roots must have
// integral coordinates.
[[nodiscard]] AxiomReport verify_lattice(const GramForm& gram, std::span<const Vector> roots);

// Re-evaluates a single failing check of verify_T / verify_Tprime / check_invariance
// on its witness. True when the witness still demonstrates the failure.
[[nodiscard]] bool witness_refails(const RootSupersystem& s, const AxiomCheck& check);
[[nodiscard]] bool lattice_witness_refails(const GramForm& gram, std::span<const Vector> roots, const AxiomCheck& check);

struct LatticeSystem {
  GramForm gram;
  std::vector<Vector> roots;  // integral coordinates in a basis of span_Z(R)
  std::vector<Vector> basis;  // that basis, in the source coordinates
};

// Re-expresses the roots in a basis of their Z-span.
[[nodiscard]] LatticeSystem to_lattice(const RootSupersystem& s);

}  // namespace rootsuper
