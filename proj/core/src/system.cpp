#include "rootsuper/system.hpp"

#include <algorithm>

#include "rootsuper/errors.hpp"

namespace rootsuper {

RootSupersystem::RootSupersystem(GramForm form, std::vector<Vector> roots, std::vector<std::string> basis_labels,
                                 std::optional<TypeLabel> label)
    : form_(std::move(form)), roots_(std::move(roots)), labels_(std::move(basis_labels)), label_(std::move(label)) {
  for (const auto& r : roots_) {
    if (r.dim() != dim()) throw DimensionError("root " + to_string(r) + " has wrong dimension");
  }
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  if (!contains(Vector(dim()))) throw Error("root set must contain the zero vector");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim()) throw DimensionError("basis label count does not match dimension");
  for (const auto& r : roots_) {
    if (r.is_zero()) continue;
    (is_real(r) ? real_ : nonsingular_).push_back(r);
  }
}

bool RootSupersystem::contains(const Vector& v) const { return std::binary_search(roots_.begin(), roots_.end(), v); }

std::size_t RootSupersystem::index_of(const Vector& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
  if (it == roots_.end() || *it != v) throw Error("vector " + to_string(v) + " is not a root");
  return static_cast<std::size_t>(it - roots_.begin());
}

RootSupersystem RootSupersystem::with_label(std::optional<TypeLabel> label) const {
  RootSupersystem copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

RootSupersystem RootSupersystem::with_roots(std::vector<Vector> roots) const {
  return RootSupersystem(form_, std::move(roots), labels_, std::nullopt);
}

RootPartition partition_roots(const RootSupersystem& s) {
  RootPartition p;
  const Vector zero(s.dim());
  p.real.push_back(zero);
  p.nonsingular.push_back(zero);
  p.real.insert(p.real.end(), s.real_roots().begin(), s.real_roots().end());
  p.nonsingular.insert(p.nonsingular.end(), s.nonsingular_roots().begin(), s.nonsingular_roots().end());
  std::sort(p.real.begin(), p.real.end());
  std::sort(p.nonsingular.begin(), p.nonsingular.end());
  return p;
}

Projector::Projector(const RootSupersystem& s, std::vector<Component> components, std::optional<Vector> star)
    : dim_(s.dim()), star_(std::move(star)) {
  std::vector<Vector> all;
  for (const auto& comp : components) {
    std::vector<Vector> roots;
    for (auto idx : comp) roots.push_back(s.roots().at(idx));
    Block b{all.size(), {}};
    for (auto i : independent_subset(roots)) b.basis.push_back(roots[i]);
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    blocks_.push_back(std::move(b));
  }
  if (!star_ && rank(all) < dim_) {
    const SpanSolver re(all, dim_);
    for (const auto& r : s.nonsingular_roots()) {
      if (!re.contains(r)) {
        star_ = r;
        break;
      }
    }
  }
  if (star_) all.push_back(*star_);
  if (all.size() != dim_ || rank(all) != dim_) throw Error("decomposition does not span the ambient space");
  solver_.emplace(all, dim_);
}

std::vector<Rational> Projector::coords(const Vector& v) const {
  auto c = solver_->coordinates(v);
  if (!c) throw Error("vector outside the ambient space");
  return *c;
}

Vector Projector::project(const Vector& v, std::size_t i) const {
  const auto c = coords(v);
  const Block& b = blocks_.at(i);
  Vector out(dim_);
  for (std::size_t k = 0; k < b.basis.size(); ++k) out.add_scaled(c[b.offset + k], b.basis[k]);
  return out;
}

std::vector<std::size_t> Projector::support(const Vector& v) const {
  const auto c = coords(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    for (std::size_t k = 0; k < b.basis.size(); ++k) {
      if (!c[b.offset + k].is_zero()) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Rational Projector::star_coordinate(const Vector& v) const {
  if (!star_) throw Error("decomposition has no nonsingular summand");
  return coords(v).back();
}

Vector project(const RootSupersystem& s, const std::vector<Component>& components, const Vector& alpha, std::size_t i) {
  return Projector(s, components).project(alpha, i);
}

std::vector<std::size_t> support(const RootSupersystem& s, const std::vector<Component>& components,
                                 const Vector& alpha) {
  return Projector(s, components).support(alpha);
}

Rational star_coefficient(const RootSupersystem& s, const Vector& alpha_star, const Vector& alpha) {
  if (alpha_star.is_zero() || !s.contains(alpha_star) || s.is_real(alpha_star)) {
    throw Error("star_coefficient: " + to_string(alpha_star) + " is not a nonzero nonsingular root");
  }
  Component all_real;
  for (const auto& r : s.real_roots()) all_real.push_back(s.index_of(r));
  return Projector(s, {all_real}, alpha_star).star_coordinate(alpha);
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.dim()) throw DimensionError("matrix and vector dimensions differ");
    Rational acc;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (!m[i][j].is_zero() && !v[j].is_zero()) acc += m[i][j] * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace rootsuper
