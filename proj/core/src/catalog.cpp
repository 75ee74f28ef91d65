#include "rootsuper/catalog.hpp"

#include <algorithm>
#include <set>

#include "rootsuper/errors.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper {

Vector FreeEmbedding::to_free(const Vector& v) const {
  Vector out(generators.size());
  for (std::size_t j = 0; j < basis_images.size(); ++j) out.add_scaled(v[j], basis_images[j]);
  return out;
}

std::optional<Vector> FreeEmbedding::from_free(const Vector& free, std::span<const std::string> names) const {
  Vector mine(generators.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (free[i].is_zero()) continue;
    auto it = std::find(generators.begin(), generators.end(), names[i]);
    if (it == generators.end()) return std::nullopt;
    mine[static_cast<std::size_t>(it - generators.begin())] = free[i];
  }
  const SpanSolver solver(basis_images, generators.size());
  auto c = solver.coordinates(mine);
  if (!c) return std::nullopt;
  return Vector(std::move(*c));
}

namespace {

// Builder state: everything in coordinates of a named free module.
struct Draft {
  std::vector<std::string> gens;
  Matrix gram;
  std::vector<Vector> roots;  // nonzero roots
  std::vector<Vector> basis;  // basis of the ambient space of the system
};

Vector signed_sum(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v(n);
  for (auto [i, c] : terms) v[i] += Rational(c);
  return v;
}

// Roots of the classical types on n orthonormal coordinates, nonzero only.
std::vector<Vector> classical_roots(Family f, std::size_t n) {
  std::set<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.insert(signed_sum(n, {{i, 1}, {j, -1}}));
      if (f != Family::A) {
        out.insert(signed_sum(n, {{i, 1}, {j, 1}}));
        out.insert(signed_sum(n, {{i, -1}, {j, -1}}));
      }
    }
    if (f == Family::B || f == Family::BC) {
      out.insert(signed_sum(n, {{i, 1}}));
      out.insert(signed_sum(n, {{i, -1}}));
    }
    if (f == Family::C || f == Family::BC) {
      out.insert(signed_sum(n, {{i, 2}}));
      out.insert(signed_sum(n, {{i, -2}}));
    }
  }
  return {out.begin(), out.end()};
}

Matrix identity_matrix(std::size_t n, const Rational& scale = Rational(1)) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = scale;
  return m;
}

std::vector<std::string> named(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

CatalogInstance finalize(const Draft& d, const TypeLabel& label) {
  const std::size_t n = d.gens.size();
  const GramForm free_form(d.gram);
  const SpanSolver solver(d.basis, n);
  std::vector<Vector> roots{Vector(d.basis.size())};
  for (const auto& r : d.roots) {
    auto c = solver.coordinates(r);
    if (!c) throw Error("internal: root outside the declared ambient basis");
    roots.emplace_back(std::move(*c));
  }
  std::vector<std::string> labels;
  for (const auto& b : d.basis) labels.push_back(format_combination(b, d.gens));
  RootSupersystem sys(free_form.restrict_to(d.basis), std::move(roots), std::move(labels), label);
  return CatalogInstance{std::move(sys), FreeEmbedding{d.gens, d.basis}};
}

// One irreducible real component in standard normalization.
struct Piece {
  std::vector<std::string> gens;
  Matrix gram;
  std::vector<Vector> roots;
  std::vector<Vector> basis;
  Vector omega1;  // omega_1 of the tables; for A_1 and BC_1 half the indivisible root
  Vector short_root_weight;  // G2 only
};

Piece g2_piece(const std::string& prefix);

Piece classical_piece(Family f, int rank, const std::string& prefix, bool a1_weight_basis) {
  Piece p;
  const std::size_t n = f == Family::A ? static_cast<std::size_t>(rank) + 1 : static_cast<std::size_t>(rank);
  p.gens = named(prefix, n);
  p.gram = identity_matrix(n);
  p.roots = classical_roots(f, n);
  if (f == Family::A) {
    if (rank == 1 && a1_weight_basis) {
      Vector w = signed_sum(n, {{0, 1}, {1, -1}});
      w *= Rational(1, 2);
      p.basis.push_back(w);
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) p.basis.push_back(signed_sum(n, {{i, 1}, {n - 1, -1}}));
    }
    p.omega1 = Vector::unit(n, 0);
    for (std::size_t i = 0; i < n; ++i) p.omega1[i] -= Rational(1, static_cast<long>(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) p.basis.push_back(Vector::unit(n, i));
    p.omega1 = Vector::unit(n, 0);
    if (f == Family::BC && rank == 1) p.omega1 *= Rational(1, 2);
  }
  return p;
}

Draft draft_of(const Piece& p) { return Draft{p.gens, p.gram, p.roots, p.basis}; }

Piece g2_piece(const std::string& prefix) {
  Piece p;
  p.gens = named(prefix, 3);
  p.gram = identity_matrix(3);
  std::set<Vector> roots;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::size_t k = 3 - i - j;
      roots.insert(signed_sum(3, {{i, 1}, {j, -1}}));
      roots.insert(signed_sum(3, {{i, 2}, {j, -1}, {k, -1}}));
      roots.insert(signed_sum(3, {{i, -2}, {j, 1}, {k, 1}}));
    }
  }
  p.roots.assign(roots.begin(), roots.end());
  p.basis = {signed_sum(3, {{0, 1}, {2, -1}}), signed_sum(3, {{1, 1}, {2, -1}})};
  // The fundamental weight whose orbit is the set of short roots.
  const CatalogInstance inst = finalize(draft_of(p), make_label(Family::G2));
  const auto& s = inst.system;
  std::vector<Vector> short_roots;
  for (const auto& r : s.real_roots()) {
    if (s.pair(r, r) == Rational(2)) short_roots.push_back(r);
  }
  const auto base = root_base(s);
  for (const auto& w : fundamental_weights(s, base)) {
    if (orbit(s, w).elements == short_roots) p.short_root_weight = inst.embedding.to_free(w);
  }
  if (p.short_root_weight.dim() == 0) throw Error("internal: G2 short-root weight not found");
  p.omega1 = p.short_root_weight;
  return p;
}

Piece make_piece(Family f, int rank, const std::string& prefix) {
  if (f == Family::G2) return g2_piece(prefix);
  return classical_piece(f, rank, prefix, true);
}

Vector embed(const Vector& v, std::size_t offset, std::size_t total) {
  Vector out(total);
  for (std::size_t i = 0; i < v.dim(); ++i) out[offset + i] = v[i];
  return out;
}

struct RowPart {
  Piece piece;
  Vector weight;  // local coordinates
};

// Direct sum of the pieces with scaled forms, nonsingular roots the Weyl orbit
// of the summed weights (and its negative when requested).
CatalogInstance real_row(const TypeLabel& label, std::vector<RowPart> parts, std::vector<Rational> scalars,
                         bool plus_minus) {
  const GramForm std_form0(parts[0].piece.gram);
  if (scalars.empty()) {
    if (parts.size() != 2) throw Error("internal: scalars required for three components");
    const GramForm f1(parts[1].piece.gram);
    const Rational n0 = std_form0.evaluate(parts[0].weight, parts[0].weight);
    const Rational n1 = f1.evaluate(parts[1].weight, parts[1].weight);
    scalars = {Rational(1), -n0 / n1};
  }
  Draft d;
  std::vector<std::size_t> offsets;
  for (const auto& part : parts) {
    offsets.push_back(d.gens.size());
    d.gens.insert(d.gens.end(), part.piece.gens.begin(), part.piece.gens.end());
  }
  const std::size_t n = d.gens.size();
  d.gram = Matrix(n, std::vector<Rational>(n));
  Vector delta(n);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& pc = parts[k].piece;
    const std::size_t off = offsets[k];
    for (std::size_t i = 0; i < pc.gram.size(); ++i) {
      for (std::size_t j = 0; j < pc.gram.size(); ++j) d.gram[off + i][off + j] = scalars[k] * pc.gram[i][j];
    }
    for (const auto& r : pc.roots) d.roots.push_back(embed(r, off, n));
    for (const auto& b : pc.basis) d.basis.push_back(embed(b, off, n));
    delta += embed(parts[k].weight, off, n);
  }
  const GramForm free_form(d.gram);
  if (!free_form.evaluate(delta, delta).is_zero()) throw Error("internal: nonsingular seed is not null");
  const auto gens = weyl_generators(free_form, d.roots);
  const Orbit o = orbit_under(gens, delta);
  std::set<Vector> ns(o.elements.begin(), o.elements.end());
  if (plus_minus) {
    for (const auto& v : o.elements) ns.insert(-v);
  }
  d.roots.insert(d.roots.end(), ns.begin(), ns.end());
  return finalize(d, label);
}

CatalogInstance build_real(const TypeLabel& l) {
  const auto& p = l.params;
  auto part = [](Family f, int rank, const std::string& prefix, Vector weight_override = {}) {
    RowPart rp{make_piece(f, rank, prefix), {}};
    rp.weight = weight_override.dim() ? std::move(weight_override) : rp.piece.omega1;
    return rp;
  };
  auto eps1 = [](Family f, int rank, const std::string& prefix) {
    RowPart rp{make_piece(f, rank, prefix), {}};
    rp.weight = Vector::unit(rp.piece.gens.size(), 0);
    return rp;
  };
  // 2*omega for A_1: the root itself.
  auto a1_root = [](const std::string& prefix) {
    RowPart rp{make_piece(Family::A, 1, prefix), {}};
    rp.weight = signed_sum(2, {{0, 1}, {1, -1}});
    return rp;
  };
  switch (l.family) {
    case Family::A_ll:
      return real_row(l, {part(Family::A, p[0], "e"), part(Family::A, p[0], "d")}, {}, true);
    case Family::B_TT:
      return real_row(l, {eps1(Family::B, p[0], "e"), eps1(Family::BC, p[1], "d")}, {}, false);
    case Family::BC_TT:
      // For BC_1 the tables use 2*omega_1, which is e1 as for higher ranks.
      return real_row(l, {eps1(Family::BC, p[0], "e"), eps1(Family::BC, p[1], "d")}, {}, false);
    case Family::C_TT:
      return real_row(l, {eps1(Family::C, p[0], "e"), eps1(Family::C, p[1], "d")}, {}, false);
    case Family::D_TT:
      return real_row(l, {eps1(Family::D, p[0], "e"), eps1(Family::C, p[1], "d")}, {}, false);
    case Family::B_1T:
      return real_row(l, {a1_root("e"), eps1(Family::BC, p[0], "d")}, {}, false);
    case Family::C_1T:
      return real_row(l, {part(Family::A, 1, "e"), eps1(Family::C, p[0], "d")}, {}, false);
    case Family::AB_13: {
      Vector spin(3);
      for (std::size_t i = 0; i < 3; ++i) spin[i] = Rational(1, 2);
      return real_row(l, {part(Family::A, 1, "e"), part(Family::B, 3, "d", spin)}, {}, false);
    }
    case Family::D_1T:
      return real_row(l, {part(Family::A, 1, "e"), eps1(Family::D, p[0], "d")}, {}, false);
    case Family::B_T1:
      return real_row(l, {eps1(Family::BC, 1, "e"), eps1(Family::B, p[0], "d")}, {}, false);
    case Family::G_12:
      return real_row(l, {eps1(Family::BC, 1, "e"), part(Family::G2, 2, "d")}, {}, false);
    case Family::D_21l: {
      const Rational lambda = *l.lambda;
      return real_row(l, {part(Family::A, 1, "e"), part(Family::A, 1, "d"), part(Family::A, 1, "f")},
                      {Rational(1), lambda, Rational(-1) - lambda}, false);
    }
    case Family::D_2T:
      return real_row(l, {part(Family::A, 1, "e"), part(Family::A, 1, "d"), eps1(Family::C, p[0], "f")},
                      {Rational(1), Rational(1), Rational(-1)}, false);
    default:
      throw ConstraintError("not a real-type supersystem family: " + to_string(l));
  }
}

CatalogInstance build_imaginary(const TypeLabel& l, int t0_in) {
  Draft d;
  if (l.family == Family::ATP) {
    const std::size_t m = static_cast<std::size_t>(l.params[0]);
    const std::size_t n = static_cast<std::size_t>(l.params[1]);
    const std::size_t total = m + n;
    d.gens = named("e", m);
    const auto ds = named("d", n);
    d.gens.insert(d.gens.end(), ds.begin(), ds.end());
    d.gram = identity_matrix(total);
    for (std::size_t j = m; j < total; ++j) d.gram[j][j] = Rational(-1);
    for (const auto& r : classical_roots(Family::A, m)) d.roots.push_back(embed(r, 0, total));
    for (const auto& r : classical_roots(Family::A, n)) d.roots.push_back(embed(r, m, total));
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t q = m; q < total; ++q) {
        d.roots.push_back(signed_sum(total, {{t, 1}, {q, -1}}));
        d.roots.push_back(signed_sum(total, {{t, -1}, {q, 1}}));
      }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) d.basis.push_back(signed_sum(total, {{i, 1}, {m - 1, -1}}));
    for (std::size_t j = m; j + 1 < total; ++j) d.basis.push_back(signed_sum(total, {{j, 1}, {total - 1, -1}}));
    d.basis.push_back(signed_sum(total, {{m - 1, 1}, {total - 1, -1}}));
    return finalize(d, l);
  }
  const std::size_t n = static_cast<std::size_t>(l.params[0]);
  if (t0_in < 1 || static_cast<std::size_t>(t0_in) > n) throw ConstraintError("t0 must lie in 1..|T|");
  const std::size_t t0 = static_cast<std::size_t>(t0_in);  // free index of e_{t0} (a* is index 0)
  const std::size_t total = n + 1;
  d.gens = {"a*"};
  const auto es = named("e", n);
  d.gens.insert(d.gens.end(), es.begin(), es.end());
  d.gram = identity_matrix(total);
  d.gram[0][0] = Rational(0);
  d.gram[0][t0] = d.gram[t0][0] = Rational(1);
  const Family base = l.family == Family::A0T ? Family::A : Family::C;
  for (const auto& r : classical_roots(base, n)) d.roots.push_back(embed(r, 1, total));
  std::vector<Vector> ns{Vector::unit(total, 0)};
  for (std::size_t t = 1; t <= n; ++t) {
    if (t == t0) continue;
    ns.push_back(signed_sum(total, {{0, 1}, {t0, -1}, {t, 1}}));
    if (base == Family::C) ns.push_back(signed_sum(total, {{0, 1}, {t0, -1}, {t, -1}}));
  }
  if (base == Family::C) ns.push_back(signed_sum(total, {{0, 1}, {t0, -2}}));
  for (const auto& v : ns) {
    d.roots.push_back(v);
    d.roots.push_back(-v);
  }
  d.basis.push_back(Vector::unit(total, 0));
  if (base == Family::A) {
    for (std::size_t i = 1; i < n; ++i) d.basis.push_back(signed_sum(total, {{i, 1}, {n, -1}}));
  } else {
    for (std::size_t i = 1; i <= n; ++i) d.basis.push_back(Vector::unit(total, i));
  }
  return finalize(d, l);
}

CatalogInstance build_root_system(const TypeLabel& canonical_label, Family f, int rank) {
  if (f == Family::G2) return finalize(draft_of(g2_piece("e")), canonical_label);
  if (f == Family::F4) {
    Draft d;
    d.gens = named("e", 4);
    d.gram = identity_matrix(4);
    d.roots = classical_roots(Family::B, 4);
    for (int mask = 0; mask < 16; ++mask) {
      Vector v(4);
      for (std::size_t i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
      d.roots.push_back(v);
    }
    for (std::size_t i = 0; i < 4; ++i) d.basis.push_back(Vector::unit(4, i));
    return finalize(d, canonical_label);
  }
  return finalize(draft_of(classical_piece(f, rank, "e", false)), canonical_label);
}

}  // namespace

CatalogInstance build(const TypeLabel& label_in, const BuildOptions& options) {
  // Coordinates follow the requested family; the label is the canonical one.
  const TypeLabel label = canonical(label_in);
  const Family f = label_in.family;
  if (is_root_system_family(f)) return build_root_system(label, f, label_in.params.empty() ? 0 : label_in.params[0]);
  if (is_imaginary_family(f)) return build_imaginary(label, options.t0);
  return build_real(label);
}

RootSupersystem make_system(const TypeLabel& label, const BuildOptions& options) {
  return build(label, options).system;
}

RootSupersystem make_root_system(Family family, int rank) {
  if (!is_root_system_family(family) || family == Family::G2 || family == Family::F4) {
    throw ConstraintError("make_root_system expects A, B, C, D or BC");
  }
  return make_system(TypeLabel{family, {rank}, {}});
}

RootSupersystem make_exceptional(Family family) {
  if (family != Family::G2 && family != Family::F4) throw ConstraintError("make_exceptional expects G2 or F4");
  return make_system(TypeLabel{family, {}, {}});
}

RootSupersystem make_imaginary(Family family, int t, int p, int t0) {
  if (!is_imaginary_family(family)) throw ConstraintError("not an imaginary-type family");
  TypeLabel l{family, {t}, {}};
  if (family == Family::ATP) l.params.push_back(p);
  return make_system(l, BuildOptions{t0});
}

RootSupersystem make_real(const TypeLabel& label) {
  if (!is_real_super_family(label.family)) throw ConstraintError("not a real-type supersystem family");
  return make_system(label);
}

RootSupersystem make_a_ll_opposite(int l) {
  const TypeLabel label = make_label(Family::A_ll, {l});
  RowPart first{make_piece(Family::A, l, "e"), {}};
  first.weight = first.piece.omega1;
  RowPart second{make_piece(Family::A, l, "d"), {}};
  second.weight = -second.piece.omega1;
  return real_row(label, {std::move(first), std::move(second)}, {}, true).system;
}

IsoWitness a_ll_flip_witness(int l) {
  const auto half_dim = static_cast<std::size_t>(l);
  IsoWitness w;
  w.matrix = identity_matrix(2 * half_dim);
  for (std::size_t i = half_dim; i < 2 * half_dim; ++i) w.matrix[i][i] = Rational(-1);
  w.scalar_r = Rational(1);
  return w;
}

std::vector<Vector> root_base(const RootSupersystem& s) {
  auto positive = [](const Vector& v) {
    for (const auto& x : v.coords()) {
      if (!x.is_zero()) return x.sign() > 0;
    }
    return false;
  };
  std::vector<Vector> pos;
  for (const auto& r : s.real_roots()) {
    if (positive(r)) pos.push_back(r);
  }
  if (pos.empty()) throw Error("root_base: no nonzero real roots");
  const std::set<Vector> pos_set(pos.begin(), pos.end());
  std::vector<Vector> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (pos_set.contains(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  if (simple.size() != rank(s.real_roots())) throw Error("root_base: input is not a finite root system");
  auto lead = [](const Vector& v) {
    std::size_t i = 0;
    while (v[i].is_zero()) ++i;
    return i;
  };
  std::sort(simple.begin(), simple.end(), [&](const Vector& a, const Vector& b) {
    const auto la = lead(a);
    const auto lb = lead(b);
    return la != lb ? la < lb : a < b;
  });
  return simple;
}

std::vector<Vector> fundamental_weights(const RootSupersystem& s, std::span<const Vector> base) {
  const std::size_t k = base.size();
  // Columns: the pairings of each simple root against all coroots.
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < k; ++c) {
    Vector col(k);
    for (std::size_t r = 0; r < k; ++r) col[r] = cartan_integer(s, base[c], base[r]);
    cols.push_back(std::move(col));
  }
  SpanSolver solver(cols, k);
  std::vector<Vector> out;
  for (std::size_t j = 0; j < k; ++j) {
    auto x = solver.coordinates(Vector::unit(k, j));
    if (!x) throw Error("fundamental_weights: singular system");
    Vector w(s.dim());
    for (std::size_t i = 0; i < k; ++i) w.add_scaled((*x)[i], base[i]);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<TypeLabel> acceptance_catalog() {
  std::vector<TypeLabel> out;
  auto add = [&](Family f, std::vector<int> p = {}, std::optional<Rational> lambda = {}) {
    out.push_back(TypeLabel{f, std::move(p), std::move(lambda)});
  };
  for (int r = 1; r <= 5; ++r) add(Family::A, {r});
  for (int r = 1; r <= 5; ++r) add(Family::B, {r});
  for (int r = 1; r <= 5; ++r) add(Family::BC, {r});
  for (int r = 2; r <= 5; ++r) add(Family::C, {r});
  for (int r = 4; r <= 5; ++r) add(Family::D, {r});
  add(Family::G2);
  add(Family::F4);
  for (int t = 2; t <= 5; ++t) add(Family::A0T, {t});
  for (int t = 2; t <= 5; ++t) add(Family::C0T, {t});
  for (auto [t, q] : {std::pair{2, 3}, {2, 4}, {3, 4}, {2, 5}}) add(Family::ATP, {t, q});
  add(Family::A_ll, {1});
  add(Family::A_ll, {2});
  for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {2, 3}}) add(Family::B_TT, {a, b});
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) add(Family::BC_TT, {a, b});
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}}) add(Family::C_TT, {a, b});
  for (auto [a, b] : {std::pair{3, 2}, {4, 2}, {3, 3}}) add(Family::D_TT, {a, b});
  for (int t : {1, 2, 3}) add(Family::B_1T, {t});
  for (int t : {2, 3}) add(Family::C_1T, {t});
  add(Family::AB_13);
  for (int t : {3, 4}) add(Family::D_1T, {t});
  for (int t : {2, 3}) add(Family::B_T1, {t});
  add(Family::G_12);
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2), Rational(-2)}) add(Family::D_21l, {}, lambda);
  for (int t : {2, 3}) add(Family::D_2T, {t});
  return out;
}

}  // namespace rootsuper
