#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootsuper/label.hpp"
#include "rootsuper/system.hpp"

namespace rootsuper {

// Records how the system's basis sits inside the named free module used to
// build it (generators such as e1, d2, a*). Lets instances of one family with
// different parameters be compared in common coordinates.
struct FreeEmbedding {
  std::vector<std::string> generators;
  std::vector<Vector> basis_images;  // system basis vector j in free coordinates

  [[nodiscard]] Vector to_free(const Vector& v) const;
  // Coordinates in the system basis of a free vector given over `names`;
  // nullopt if a name is unknown or the vector leaves the span.
  [[nodiscard]] std::optional<Vector> from_free(const Vector& free, std::span<const std::string> names) const;
};

struct CatalogInstance {
  RootSupersystem system;
  FreeEmbedding embedding;
};

struct BuildOptions {
  int t0 = 1;  // distinguished index for A0T / C0T
};

[[nodiscard]] CatalogInstance build(const TypeLabel& label, const BuildOptions& options = {});
[[nodiscard]] RootSupersystem make_system(const TypeLabel& label, const BuildOptions& options = {});

[[nodiscard]] RootSupersystem make_root_system(Family family, int rank);
[[nodiscard]] RootSupersystem make_exceptional(Family family);
[[nodiscard]] RootSupersystem make_imaginary(Family family, int t, int p = 0, int t0 = 1);
[[nodiscard]] RootSupersystem make_real(const TypeLabel& label);

// A(l,l) with nonsingular roots +-(e_i - d_j) in place of +-(e_i + d_j).
[[nodiscard]] RootSupersystem make_a_ll_opposite(int l);
// The map fixing the first summand and negating the second; carries
// make_real(A_ll(l)) onto make_a_ll_opposite(l) with scalar 1.
[[nodiscard]] IsoWitness a_ll_flip_witness(int l);

// Simple roots of the (assumed irreducible) real roots of s, from the
// lexicographic positive system, ordered by leading coordinate.
[[nodiscard]] std::vector<Vector> root_base(const RootSupersystem& s);
[[nodiscard]] std::vector<Vector> fundamental_weights(const RootSupersystem& s, std::span<const Vector> base);

// Every label named by the acceptance catalog (families at minimal and
// minimal+1 parameters, plus the listed ranks).
[[nodiscard]] std::vector<TypeLabel> acceptance_catalog();

}  // namespace rootsuper
