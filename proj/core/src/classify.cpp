#include "rootsuper/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rootsuper/axioms.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Classes of the given root indices under the non-orthogonality relation,
// ordered by smallest index.
std::vector<Component> linked_classes(const RootSupersystem& s, const std::vector<std::size_t>& idx) {
  const auto& roots = s.roots();
  std::vector<Vector> images;
  images.reserve(idx.size());
  for (auto i : idx) images.push_back(s.form().apply(roots[i]));
  DisjointSets ds(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (!dot(roots[idx[a]], images[b]).is_zero()) ds.unite(a, b);
    }
  }
  std::map<std::size_t, Component> groups;
  for (std::size_t a = 0; a < idx.size(); ++a) groups[ds.find(a)].push_back(idx[a]);
  std::vector<Component> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> nonzero_indices(const RootSupersystem& s, bool real_only) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.roots().size(); ++i) {
    const auto& r = s.roots()[i];
    if (r.is_zero()) continue;
    if (real_only && !s.is_real(r)) continue;
    out.push_back(i);
  }
  return out;
}

[[noreturn]] void unrecognized(ComponentProfile profile, std::string reason) {
  profile.reason = std::move(reason);
  throw UnrecognizedError(std::move(profile));
}

ComponentProfile basic_profile(const RootSupersystem& s) {
  ComponentProfile p;
  p.dim = s.dim();
  p.real_rank = rank(s.real_roots());
  p.nonsingular_count = s.nonsingular_roots().size();
  return p;
}

// Also names each real component where possible.
ComponentProfile profile_of(const RootSupersystem& s) {
  ComponentProfile p = basic_profile(s);
  for (const auto& c : real_components(s)) {
    try {
      p.real_types.push_back(to_string(recognize_real_type(restrict_to_span(s, c))));
    } catch (const Error&) {
      p.real_types.emplace_back("?");
    }
  }
  return p;
}

// Finite root system type after collapsing low-rank coincidences.
TypeLabel normalized_type(Family f, int rank) {
  if ((f == Family::C || f == Family::B) && rank == 1) return make_label(Family::A, {1});
  if (f == Family::D && rank == 3) return make_label(Family::A, {3});
  return make_label(f, {rank});
}

std::vector<TypeLabel> expected_components(const TypeLabel& l) {
  const auto& p = l.params;
  const TypeLabel a1 = make_label(Family::A, {1});
  const TypeLabel bc1 = make_label(Family::BC, {1});
  switch (l.family) {
    case Family::A_ll: return {normalized_type(Family::A, p[0]), normalized_type(Family::A, p[0])};
    case Family::B_TT: return {normalized_type(Family::B, p[0]), normalized_type(Family::BC, p[1])};
    case Family::BC_TT: return {normalized_type(Family::BC, p[0]), normalized_type(Family::BC, p[1])};
    case Family::C_TT: return {normalized_type(Family::C, p[0]), normalized_type(Family::C, p[1])};
    case Family::D_TT: return {normalized_type(Family::D, p[0]), normalized_type(Family::C, p[1])};
    case Family::B_1T: return {a1, normalized_type(Family::BC, p[0])};
    case Family::C_1T: return {a1, normalized_type(Family::C, p[0])};
    case Family::AB_13: return {a1, make_label(Family::B, {3})};
    case Family::D_1T: return {a1, normalized_type(Family::D, p[0])};
    case Family::B_T1: return {bc1, normalized_type(Family::B, p[0])};
    case Family::G_12: return {bc1, make_label(Family::G2)};
    case Family::D_21l: return {a1, a1, a1};
    case Family::D_2T: return {a1, a1, normalized_type(Family::C, p[0])};
    default: return {};
  }
}

std::vector<std::string> sorted_names(const std::vector<TypeLabel>& types) {
  std::vector<std::string> out;
  for (const auto& t : types) out.push_back(to_string(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Node-permutation invariant description of the dominant weight in the
// orbit of v under one real component.
using WeightSignature = std::pair<std::vector<std::vector<long>>, std::vector<long>>;

WeightSignature dominant_signature(const RootSupersystem& s, const Component& comp, const Vector& v) {
  std::vector<Vector> roots{Vector(s.dim())};
  for (auto i : comp) roots.push_back(s.roots()[i]);
  const RootSupersystem sub(s.form(), std::move(roots));
  const auto base = root_base(sub);
  std::vector<Reflection> simple;
  for (const auto& a : base) simple.emplace_back(s.form(), a);
  Vector mu = v;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& r : simple) {
      if (r.coroot(mu).sign() < 0) {
        mu = r(mu);
        moved = true;
      }
    }
  }
  const std::size_t k = base.size();
  std::vector<std::vector<long>> cartan(k, std::vector<long>(k));
  std::vector<long> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = simple[i].coroot(mu).numerator().get_si();
    for (std::size_t j = 0; j < k; ++j) cartan[i][j] = simple[j].coroot(base[i]).numerator().get_si();
  }
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  WeightSignature best;
  bool first = true;
  do {
    WeightSignature cand{std::vector<std::vector<long>>(k, std::vector<long>(k)), std::vector<long>(k)};
    for (std::size_t i = 0; i < k; ++i) {
      cand.second[i] = labels[perm[i]];
      for (std::size_t j = 0; j < k; ++j) cand.first[i][j] = cartan[perm[i]][perm[j]];
    }
    if (first || cand > best) best = std::move(cand);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

using RealSignature = std::vector<std::pair<std::string, WeightSignature>>;

struct RealAnalysis {
  std::vector<Component> components;
  std::vector<TypeLabel> types;
  RealSignature signature;
};

// Component types of the real roots, tagged with the dominant labels of the
// projections of the first nonsingular root.
RealAnalysis analyze_real(const RootSupersystem& s, ComponentProfile& profile) {
  RealAnalysis out;
  out.components = real_components(s);
  for (const auto& c : out.components) {
    try {
      out.types.push_back(recognize_real_type(restrict_to_span(s, c)));
    } catch (const UnrecognizedError&) {
      unrecognized(profile, "a real component is not a recognized root system");
    }
  }
  if (s.nonsingular_roots().empty()) return out;
  const Projector proj(s, out.components);
  const Vector& delta = s.nonsingular_roots().front();
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    out.signature.emplace_back(to_string(out.types[i]), dominant_signature(s, out.components[i], proj.project(delta, i)));
  }
  std::sort(out.signature.begin(), out.signature.end());
  return out;
}

bool nonsingular_is_one_orbit(const RootSupersystem& s) {
  const auto& ns = s.nonsingular_roots();
  const Orbit o = orbit(s, ns.front());
  std::set<Vector> both(o.elements.begin(), o.elements.end());
  for (const auto& v : o.elements) both.insert(-v);
  return std::vector<Vector>(both.begin(), both.end()) == ns;
}

std::vector<TypeLabel> real_candidates(std::size_t dim) {
  std::vector<TypeLabel> out;
  std::set<std::string> seen;
  auto push = [&](Family f, std::vector<int> params) {
    try {
      TypeLabel l = make_label(f, std::move(params));
      if (seen.insert(to_string(l)).second) out.push_back(std::move(l));
    } catch (const ConstraintError&) {
    }
  };
  const int n = static_cast<int>(dim);
  for (Family f : all_families()) {
    if (!is_real_super_family(f) || f == Family::D_21l) continue;
    switch (param_count(f)) {
      case 0: push(f, {}); break;
      case 1:
        for (int a = 1; a <= n; ++a) push(f, {a});
        break;
      default:
        for (int a = 1; a <= n; ++a) {
          for (int b = 1; b <= n; ++b) push(f, {a, b});
        }
    }
  }
  return out;
}

TypeLabel classify_imaginary(const RootSupersystem& s, ComponentProfile& profile) {
  if (profile.real_rank + 1 != s.dim()) unrecognized(profile, "real roots have codimension other than 1");
  const RealAnalysis ra = analyze_real(s, profile);
  if (ra.types.empty() || ra.types.size() > 2) unrecognized(profile, "imaginary type needs one or two real components");
  std::optional<TypeLabel> label;
  std::size_t expected_ns = 0;
  if (ra.types.size() == 1) {
    const TypeLabel& t = ra.types[0];
    const int l = t.params.empty() ? 0 : t.params[0];
    if (t.family == Family::A) {
      label = make_label(Family::A0T, {l + 1});
      expected_ns = 2 * static_cast<std::size_t>(l + 1);
    } else if (t.family == Family::C || (t.family == Family::B && l == 2)) {
      label = make_label(Family::C0T, {l});
      expected_ns = 4 * static_cast<std::size_t>(l);
    }
  } else if (ra.types[0].family == Family::A && ra.types[1].family == Family::A &&
             ra.types[0].params[0] != ra.types[1].params[0]) {
    const int m = ra.types[0].params[0] + 1;
    const int n = ra.types[1].params[0] + 1;
    label = make_label(Family::ATP, {m, n});
    expected_ns = 2 * static_cast<std::size_t>(m * n);
  }
  if (!label) unrecognized(profile, "real components match no imaginary-type row");
  if (s.nonsingular_roots().size() != expected_ns) unrecognized(profile, "nonsingular root count does not match");
  if (!nonsingular_is_one_orbit(s)) unrecognized(profile, "nonsingular roots are not a single orbit up to sign");
  return *label;
}

TypeLabel classify_real(const RootSupersystem& s, ComponentProfile& profile) {
  const RealAnalysis ra = analyze_real(s, profile);
  if (ra.types.size() < 2 || ra.types.size() > 3) unrecognized(profile, "real type needs two or three real components");
  const Projector proj(s, ra.components);
  if (proj.support(s.nonsingular_roots().front()).size() != ra.types.size()) {
    unrecognized(profile, "a nonsingular root lacks full support");
  }
  if (!nonsingular_is_one_orbit(s)) unrecognized(profile, "nonsingular roots are not a single orbit up to sign");
  const auto have = sorted_names(ra.types);

  auto matches = [&](const TypeLabel& candidate) {
    if (sorted_names(expected_components(candidate)) != have) return false;
    const RootSupersystem ref = make_system(candidate);
    if (ref.dim() != s.dim() || ref.nonsingular_roots().size() != s.nonsingular_roots().size()) return false;
    ComponentProfile scratch;
    return analyze_real(ref, scratch).signature == ra.signature;
  };

  if (have == std::vector<std::string>(3, "A(1)")) {
    std::vector<Rational> c;
    for (const auto& comp : ra.components) {
      const Vector& a = s.roots()[comp.front()];
      c.push_back(s.pair(a, a));
    }
    if (!(c[0] + c[1] + c[2]).is_zero()) unrecognized(profile, "A_1 length scalars do not sum to zero");
    const TypeLabel l = make_label(Family::D_21l, {}, c[1] / c[0]);
    if (matches(l)) return l;
    unrecognized(profile, "three A_1 components but no matching D(2,1,lambda) row");
  }
  for (const auto& candidate : real_candidates(s.dim())) {
    if (matches(candidate)) return candidate;
  }
  unrecognized(profile, "real components and nonsingular weights match no real-type row");
}

}  // namespace

Decomposition connected_components(const RootSupersystem& s) {
  Decomposition d;
  for (auto& comp : linked_classes(s, nonzero_indices(s, false))) {
    RootSupersystem sub = restrict_to_span(s, comp);
    d.nondegenerate.push_back(is_nondegenerate(sub.form()));
    d.components.push_back(std::move(sub));
    d.indices.push_back(std::move(comp));
  }
  return d;
}

bool is_irreducible(const RootSupersystem& s) {
  return linked_classes(s, nonzero_indices(s, false)).size() == 1;
}

std::vector<Component> real_components(const RootSupersystem& s) {
  return linked_classes(s, nonzero_indices(s, true));
}

RootSupersystem restrict_to_span(const RootSupersystem& s, const Component& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(s.roots()[i]);
  // Prefer the largest roots so that basis names read as positive combinations.
  const std::vector<Vector> descending(vs.rbegin(), vs.rend());
  std::vector<Vector> basis;
  for (auto i : independent_subset(descending)) basis.push_back(descending[i]);
  const SpanSolver solver(basis, s.dim());
  std::vector<Vector> roots{Vector(basis.size())};
  for (const auto& v : vs) roots.emplace_back(*solver.coordinates(v));
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(format_combination(b, s.basis_labels()));
  return RootSupersystem(s.form().restrict_to(basis), std::move(roots), std::move(labels));
}

UnrecognizedError::UnrecognizedError(ComponentProfile profile)
    : Error("unrecognized system: " + profile.reason), profile_(std::move(profile)) {}

TypeLabel recognize_real_type(const RootSupersystem& s) {
  ComponentProfile profile = basic_profile(s);
  if (!s.nonsingular_roots().empty()) unrecognized(profile, "input has nonsingular roots");
  if (!verify_T(s).pass) unrecognized(profile, "input fails the root system axioms");
  if (!is_irreducible(s)) unrecognized(profile, "input is reducible");
  const auto& real = s.real_roots();
  const std::size_t n = real.size();
  const std::size_t l = s.dim();
  const int rk = static_cast<int>(l);
  std::map<Rational, std::size_t> by_norm;
  bool doubled = false;
  for (const auto& a : real) {
    by_norm[s.pair(a, a).abs()]++;
    if (s.contains(Rational(2) * a)) doubled = true;
  }
  if (doubled) {
    if (n == 2 * l * (l + 1)) return make_label(Family::BC, {rk});
  } else if (by_norm.size() == 1) {
    if (n == l * (l + 1)) return make_label(Family::A, {rk});
    if (l >= 4 && n == 2 * l * (l - 1)) return make_label(Family::D, {rk});
  } else if (by_norm.size() == 2) {
    const auto& [short_norm, short_count] = *by_norm.begin();
    const auto& [long_norm, long_count] = *by_norm.rbegin();
    const Rational ratio = long_norm / short_norm;
    if (ratio == Rational(2)) {
      if (l == 4 && n == 48) return make_label(Family::F4);
      if (n == 2 * l * l) {
        if (l == 2) return make_label(Family::B, {2});
        if (short_count == 2 * l) return make_label(Family::B, {rk});
        if (long_count == 2 * l) return make_label(Family::C, {rk});
      }
    } else if (ratio == Rational(3) && l == 2 && n == 12) {
      return make_label(Family::G2);
    }
  }
  unrecognized(profile, "root count, rank and lengths match no supported root system");
}

TypeLabel classify(const RootSupersystem& input) {
  const RootSupersystem s = input.with_label(std::nullopt);
  ComponentProfile profile = profile_of(s);
  if (!is_irreducible(s)) unrecognized(profile, "input is reducible");
  if (const auto report = verify_T(s); !report.pass) {
    unrecognized(profile, "input fails axiom " + report.first_failure()->id);
  }
  if (s.nonsingular_roots().empty()) return recognize_real_type(s);
  if (profile.real_rank < s.dim()) return classify_imaginary(s, profile);
  return classify_real(s, profile);
}

std::vector<Rational> lambda_orbit(const Rational& l) {
  const Rational one(1);
  std::vector<Rational> out{l, one / l, -one - l, -(one + l) / l, -one / (one + l), -l / (one + l)};
  return out;
}

IsoVerdict check_isomorphism(const RootSupersystem& a, const RootSupersystem& b, const IsoWitness& w) {
  const std::size_t n = a.dim();
  if (b.dim() != n) return {false, "ambient dimensions differ"};
  if (w.scalar_r.is_zero()) throw Error("check_isomorphism: scalar r must be nonzero");
  if (w.matrix.size() != n) throw DimensionError("witness matrix has wrong size");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (w.matrix[i].size() != n) throw DimensionError("witness matrix is not square");
      c[i] = w.matrix[i][j];
    }
    cols.push_back(std::move(c));
  }
  if (rank(cols) != n) throw Error("check_isomorphism: witness matrix is singular");
  if (a.roots().size() != b.roots().size()) return {false, "root counts differ"};
  std::vector<Vector> images;
  for (const auto& r : a.roots()) {
    Vector img = apply(w.matrix, r);
    if (!b.contains(img)) return {false, "image of " + to_string(r) + " is not a root"};
    images.push_back(std::move(img));
  }
  const auto& roots = a.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Vector ga = a.form().apply(roots[i]);
    const Vector gb = b.form().apply(images[i]);
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (dot(roots[j], ga) != w.scalar_r * dot(images[j], gb)) {
        return {false, "form relation fails on " + to_string(roots[i]) + ", " + to_string(roots[j])};
      }
    }
  }
  return {true, {}};
}

std::optional<IsoWitness> find_isomorphism(const RootSupersystem& a, const RootSupersystem& b, std::size_t dim_limit) {
  if (a.dim() != b.dim() || a.roots().size() != b.roots().size() ||
      a.real_roots().size() != b.real_roots().size()) {
    return std::nullopt;
  }
  const std::size_t n = a.dim();
  if (n > dim_limit) {
    throw ConstraintError("find_isomorphism: dimension " + std::to_string(n) + " exceeds limit " +
                          std::to_string(dim_limit));
  }
  std::vector<Vector> pool(a.real_roots());
  pool.insert(pool.end(), a.nonsingular_roots().begin(), a.nonsingular_roots().end());
  std::vector<Vector> src;
  for (auto i : independent_subset(pool)) src.push_back(pool[i]);
  if (src.size() != n) return std::nullopt;

  std::vector<Vector> targets;
  for (const auto& r : b.roots()) {
    if (!r.is_zero()) targets.push_back(r);
  }
  Matrix src_gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) src_gram[i][j] = a.pair(src[i], src[j]);
  }
  // B^{-1}: solves for coordinates in the source basis.
  const SpanSolver src_solver(src, n);
  std::vector<Vector> coeff_rows;  // column j: coordinates of e_j in the source basis
  for (std::size_t j = 0; j < n; ++j) coeff_rows.emplace_back(*src_solver.coordinates(Vector::unit(n, j)));

  std::vector<std::size_t> choice;
  std::optional<Rational> r;
  std::optional<IsoWitness> found;

  auto consistent = [&](std::size_t k, const Vector& c, std::optional<Rational>& scale) {
    for (std::size_t j = 0; j <= k; ++j) {
      const Vector& cj = j == k ? c : targets[choice[j]];
      const Rational lhs = src_gram[j][k];
      const Rational rhs = b.pair(cj, c);
      if (scale) {
        if (lhs != *scale * rhs) return false;
      } else if (lhs.is_zero() != rhs.is_zero()) {
        return false;
      } else if (!lhs.is_zero()) {
        scale = lhs / rhs;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == n) {
      if (!r) return;
      IsoWitness w;
      w.scalar_r = *r;
      w.matrix.assign(n, std::vector<Rational>(n));
      for (std::size_t j = 0; j < n; ++j) {
        Vector col(n);
        for (std::size_t i = 0; i < n; ++i) col.add_scaled(coeff_rows[j][i], targets[choice[i]]);
        for (std::size_t i = 0; i < n; ++i) w.matrix[i][j] = col[i];
      }
      std::vector<Vector> imgs;
      for (auto c : choice) imgs.push_back(targets[c]);
      if (rank(imgs) == n && check_isomorphism(a, b, w)) found = std::move(w);
      return;
    }
    for (std::size_t t = 0; t < targets.size() && !found; ++t) {
      std::optional<Rational> scale = r;
      if (!consistent(k, targets[t], scale)) continue;
      const auto saved = r;
      r = scale;
      choice.push_back(t);
      self(self, k + 1);
      choice.pop_back();
      r = saved;
    }
  };
  search(search, 0);
  return found;
}

SubsystemVerdict is_sub_supersystem(const RootSupersystem& s, const std::vector<Vector>& subset) {
  const std::set<Vector> in(subset.begin(), subset.end());
  if (!in.contains(Vector(s.dim()))) return {false, "subset does not contain 0", {}};
  for (const auto& v : in) {
    if (!s.contains(v)) return {false, "subset element is not a root", {v}};
  }
  std::vector<Vector> vs(in.begin(), in.end());
  std::vector<Vector> basis;
  for (auto i : independent_subset(vs)) basis.push_back(vs[i]);
  if (!is_nondegenerate(s.form().restrict_to(basis))) return {false, "restricted form is degenerate", {}};
  for (const auto& a : vs) {
    if (a.is_zero()) continue;
    if (s.is_real(a)) {
      const Reflection ref(s.form(), a);
      for (const auto& b : vs) {
        if (!in.contains(ref(b))) return {false, "not closed under a reflection", {a, b}};
      }
    } else {
      for (const auto& b : vs) {
        if (s.pair(a, b).is_zero()) continue;
        if (!in.contains(a - b) && !in.contains(a + b)) return {false, "null-root condition fails", {a, b}};
      }
    }
  }
  return {true, {}, {}};
}

TowerReport truncation_tower(Family family, const std::vector<std::vector<int>>& params) {
  for (std::size_t k = 1; k < params.size(); ++k) {
    const auto& p = params[k - 1];
    const auto& q = params[k];
    bool monotone = p.size() == q.size() && p != q;
    for (std::size_t i = 0; monotone && i < p.size(); ++i) monotone = p[i] <= q[i];
    if (!monotone) throw ConstraintError("truncation_tower: parameter sequence is not increasing");
  }
  TowerReport report;
  std::vector<CatalogInstance> inst;
  for (const auto& p : params) {
    const TypeLabel label = make_label(family, p);
    inst.push_back(build(TypeLabel{family, p, {}}));
    TowerMember m;
    m.label = label;
    m.irreducible = is_irreducible(inst.back().system);
    try {
      m.classified = classify(inst.back().system);
    } catch (const Error& e) {
      m.classify_error = e.what();
    }
    report.members.push_back(std::move(m));
  }
  report.same_family = std::all_of(report.members.begin(), report.members.end(), [&](const TowerMember& m) {
    return m.classified && m.classified->family == report.members.front().label.family;
  });
  bool pass = report.same_family;
  for (std::size_t k = 1; k < inst.size(); ++k) {
    const auto& small = inst[k - 1];
    const auto& big = inst[k];
    TowerStep step;
    step.from = k - 1;
    step.to = k;
    const auto to_big = [&](const Vector& v) {
      return big.embedding.from_free(small.embedding.to_free(v), small.embedding.generators);
    };
    std::vector<Vector> image;
    step.nested = true;
    for (const auto& r : small.system.roots()) {
      auto v = to_big(r);
      if (!v || !big.system.contains(*v)) {
        step.nested = false;
        break;
      }
      image.push_back(std::move(*v));
    }
    step.form_compatible = step.nested;
    const std::size_t d = small.system.dim();
    for (std::size_t i = 0; step.form_compatible && i < d; ++i) {
      const auto ui = to_big(Vector::unit(d, i));
      for (std::size_t j = 0; step.form_compatible && j < d; ++j) {
        const auto uj = to_big(Vector::unit(d, j));
        step.form_compatible = ui && uj && small.system.form()(i, j) == big.system.pair(*ui, *uj);
      }
    }
    if (step.nested) {
      step.sub = is_sub_supersystem(big.system, image);
    } else {
      step.sub = {false, "roots do not embed", {}};
    }
    pass = pass && step.nested && step.form_compatible && step.sub.ok;
    report.steps.push_back(std::move(step));
  }
  for (const auto& m : report.members) pass = pass && m.irreducible;
  report.pass = pass;
  return report;
}

}  // namespace rootsuper
