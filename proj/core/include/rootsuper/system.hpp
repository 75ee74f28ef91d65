#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootsuper/label.hpp"
#include "rootsuper/linalg.hpp"

namespace rootsuper {

// A finite root supersystem candidate: ambient space with a symmetric form and
// an explicit root set. Construction enforces dimensions, symmetry of the form,
// and 0 in the root set; the axioms themselves are checked by the verifiers.
class RootSupersystem {
 public:
  RootSupersystem(GramForm form, std::vector<Vector> roots, std::vector<std::string> basis_labels = {},
                  std::optional<TypeLabel> label = std::nullopt);

  [[nodiscard]] std::size_t dim() const noexcept { return form_.dim(); }
  [[nodiscard]] const GramForm& form() const noexcept { return form_; }
  [[nodiscard]] const std::vector<Vector>& roots() const noexcept { return roots_; }
  [[nodiscard]] const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  [[nodiscard]] const std::optional<TypeLabel>& label() const noexcept { return label_; }

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] std::size_t index_of(const Vector& v) const;  // throws when absent
  [[nodiscard]] Rational pair(const Vector& u, const Vector& v) const { return form_.evaluate(u, v); }
  [[nodiscard]] bool is_real(const Vector& v) const { return !pair(v, v).is_zero(); }

  // Nonzero roots with (a,a) != 0, and nonzero roots with (a,a) == 0, in canonical order.
  [[nodiscard]] const std::vector<Vector>& real_roots() const noexcept { return real_; }
  [[nodiscard]] const std::vector<Vector>& nonsingular_roots() const noexcept { return nonsingular_; }

  [[nodiscard]] RootSupersystem with_label(std::optional<TypeLabel> label) const;
  [[nodiscard]] RootSupersystem with_roots(std::vector<Vector> roots) const;

 private:
  GramForm form_;
  std::vector<Vector> roots_;
  std::vector<std::string> labels_;
  std::optional<TypeLabel> label_;
  std::vector<Vector> real_;
  std::vector<Vector> nonsingular_;
};

struct RootPartition {
  std::vector<Vector> real;         // includes 0
  std::vector<Vector> nonsingular;  // includes 0
};

[[nodiscard]] RootPartition partition_roots(const RootSupersystem& s);

// Index set into s.roots() describing one irreducible component of the real roots.
using Component = std::vector<std::size_t>;

// Decomposes ambient vectors along the real components, with an optional extra
// line spanned by a nonsingular root when the real roots do not span.
class Projector {
 public:
  Projector(const RootSupersystem& s, std::vector<Component> components,
            std::optional<Vector> star = std::nullopt);

  [[nodiscard]] std::size_t component_count() const noexcept { return blocks_.size(); }
  [[nodiscard]] Vector project(const Vector& v, std::size_t i) const;
  [[nodiscard]] std::vector<std::size_t> support(const Vector& v) const;
  [[nodiscard]] const std::optional<Vector>& star() const noexcept { return star_; }
  [[nodiscard]] Rational star_coordinate(const Vector& v) const;

 private:
  struct Block {
    std::size_t offset;
    std::vector<Vector> basis;
  };
  [[nodiscard]] std::vector<Rational> coords(const Vector& v) const;

  std::size_t dim_;
  std::vector<Block> blocks_;
  std::optional<Vector> star_;
  std::optional<SpanSolver> solver_;
};

[[nodiscard]] Vector project(const RootSupersystem& s, const std::vector<Component>& components, const Vector& alpha,
                             std::size_t i);
[[nodiscard]] std::vector<std::size_t> support(const RootSupersystem& s, const std::vector<Component>& components,
                                               const Vector& alpha);
[[nodiscard]] Rational star_coefficient(const RootSupersystem& s, const Vector& alpha_star, const Vector& alpha);

// Linear map given by its matrix (images of the basis vectors as columns) plus
// the form scalar r with (u,v)_1 = r (phi u, phi v)_2.
struct IsoWitness {
  Matrix matrix;  // dim x dim, row-major: matrix[i][j] is coordinate i of phi(e_j)
  Rational scalar_r{1};
};

[[nodiscard]] Vector apply(const Matrix& m, const Vector& v);

}  // namespace rootsuper
