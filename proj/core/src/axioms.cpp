#include "rootsuper/axioms.hpp"

#include <algorithm>
#include <functional>

#include "rootsuper/errors.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper {

const AxiomCheck* AxiomReport::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

AxiomCheck failed(AxiomCheck c, std::vector<Vector> witness) {
  c.pass = false;
  c.witness = std::move(witness);
  return c;
}

AxiomCheck make_check(std::string id) {
  AxiomCheck c;
  c.id = std::move(id);
  return c;
}

AxiomCheck check_zero(const RootSupersystem& s, std::string id) {
  AxiomCheck c = make_check(std::move(id));
  c.evaluated = 1;
  if (!s.contains(Vector(s.dim()))) return failed(std::move(c), {});
  return c;
}

AxiomCheck check_symmetric(const RootSupersystem& s, std::string id) {
  AxiomCheck c = make_check(std::move(id));
  for (const auto& r : s.roots()) {
    ++c.evaluated;
    if (!s.contains(-r)) return failed(std::move(c), {r});
  }
  return c;
}

AxiomCheck check_span(const RootSupersystem& s, std::string id) {
  AxiomCheck c = make_check(std::move(id));
  c.evaluated = s.roots().size();
  const auto idx = independent_subset(s.roots());
  if (idx.size() == s.dim()) return c;
  std::vector<Vector> basis;
  for (auto i : idx) basis.push_back(s.roots()[i]);
  const SpanSolver span(basis, s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector e = Vector::unit(s.dim(), i);
    if (!span.contains(e)) return failed(std::move(c), {e});
  }
  return failed(std::move(c), {});
}

// For every a in R_re^x and b in R, in canonical order.
template <typename Pred>
AxiomCheck scan_real_pairs(const RootSupersystem& s, std::string id, Pred bad) {
  AxiomCheck c = make_check(std::move(id));
  for (const auto& a : s.roots()) {
    if (a.is_zero() || !s.is_real(a)) continue;
    const Reflection r(s.form(), a);
    for (const auto& b : s.roots()) {
      ++c.evaluated;
      if (bad(r, b)) return failed(std::move(c), {a, b});
    }
  }
  return c;
}

AxiomCheck check_integrality(const RootSupersystem& s, std::string id) {
  return scan_real_pairs(s, std::move(id), [](const Reflection& r, const Vector& b) { return !r.coroot(b).is_integer(); });
}

AxiomCheck check_reflection(const RootSupersystem& s, std::string id) {
  return scan_real_pairs(s, std::move(id), [&](const Reflection& r, const Vector& b) { return !s.contains(r(b)); });
}

bool nonsingular_bad(const RootSupersystem& s, const Vector& a, const Vector& b) {
  if (s.pair(a, b).is_zero()) return false;
  return !s.contains(b - a) && !s.contains(b + a);
}

AxiomCheck check_nonsingular(const RootSupersystem& s, std::string id) {
  AxiomCheck c = make_check(std::move(id));
  for (const auto& a : s.roots()) {
    if (a.is_zero() || s.is_real(a)) continue;
    for (const auto& b : s.roots()) {
      ++c.evaluated;
      if (nonsingular_bad(s, a, b)) return failed(std::move(c), {a, b});
    }
  }
  return c;
}

AxiomCheck check_nondegenerate(const GramForm& form, std::string id) {
  AxiomCheck c = make_check(std::move(id));
  c.evaluated = 1;
  const auto rad = nullspace(form.entries(), form.dim());
  if (!rad.empty()) return failed(std::move(c), {rad.front()});
  return c;
}

bool string_bad(const RootSupersystem& s, const Vector& a, const Vector& b) {
  const Rational n = cartan_integer(s, b, a);
  if (!n.is_integer()) return true;
  const auto offs = string_offsets(s, b, a, StringScope::real_roots);
  if (offs.empty()) return true;
  const long lo = offs.front();
  const long hi = offs.back();
  if (lo > 0 || hi < 0) return true;
  if (static_cast<long>(offs.size()) != hi - lo + 1) return true;
  return Rational(-lo - hi) != n;
}

AxiomCheck check_root_strings(const RootSupersystem& s, std::string id, bool include_zero_beta) {
  AxiomCheck c = make_check(std::move(id));
  for (const auto& a : s.real_roots()) {
    auto visit = [&](const Vector& b) {
      ++c.evaluated;
      return string_bad(s, a, b);
    };
    if (include_zero_beta && visit(Vector(s.dim()))) return failed(std::move(c), {a, Vector(s.dim())});
    for (const auto& b : s.real_roots()) {
      if (visit(b)) return failed(std::move(c), {a, b});
    }
  }
  return c;
}

AxiomReport assemble(std::vector<AxiomCheck> checks) {
  AxiomReport r;
  r.checks = std::move(checks);
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const AxiomCheck& c) { return c.pass; });
  return r;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

AxiomReport verify_T(const RootSupersystem& s) {
  std::vector<AxiomCheck> checks;
  checks.push_back(check_zero(s, "T1.zero"));
  AxiomCheck lf = make_check("T1.locally_finite");
  lf.note = "finite root set; local finiteness holds trivially";
  lf.evaluated = 1;
  checks.push_back(std::move(lf));
  checks.push_back(check_symmetric(s, "T2.symmetric"));
  checks.push_back(check_span(s, "T3.span"));
  checks.push_back(check_integrality(s, "T4.integrality"));
  checks.push_back(check_reflection(s, "T4.reflection"));
  checks.push_back(check_nonsingular(s, "T5.nonsingular"));
  checks.push_back(check_nondegenerate(s.form(), "form.nondegenerate"));
  return assemble(std::move(checks));
}

AxiomReport verify_Tprime(const RootSupersystem& s) {
  std::vector<AxiomCheck> checks;
  checks.push_back(check_zero(s, "Tp1.zero"));
  checks.push_back(check_symmetric(s, "Tp2.symmetric"));
  checks.push_back(check_span(s, "Tp3.span"));
  checks.push_back(check_integrality(s, "Tp4.integrality"));
  checks.push_back(check_reflection(s, "Tp4.reflection"));
  checks.push_back(check_root_strings(s, "Tp5.root_string", true));
  checks.push_back(check_nonsingular(s, "Tp6.nonsingular"));
  checks.push_back(check_nondegenerate(s.form(), "form.nondegenerate"));
  return assemble(std::move(checks));
}

AxiomReport check_invariance(const RootSupersystem& s) {
  AxiomCheck c = make_check("invariance");
  const auto gens = weyl_generators(s.form(), s.real_roots());
  const auto& roots = s.roots();
  for (const auto& g : gens) {
    std::vector<Vector> images;
    std::vector<Vector> g_images;
    images.reserve(roots.size());
    for (const auto& r : roots) {
      images.push_back(g(r));
      g_images.push_back(s.form().apply(images.back()));
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Vector gu = s.form().apply(roots[i]);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        ++c.evaluated;
        if (dot(images[j], g_images[i]) != dot(roots[j], gu)) {
          return assemble({failed(std::move(c), {g.root(), roots[i], roots[j]})});
        }
      }
    }
  }
  return assemble({std::move(c)});
}

bool witness_refails(const RootSupersystem& s, const AxiomCheck& check) {
  if (check.pass) return false;
  const auto& w = check.witness;
  const std::string_view id = check.id;
  if (ends_with(id, ".zero")) return !s.contains(Vector(s.dim()));
  if (ends_with(id, ".nondegenerate")) return w.size() == 1 && !w[0].is_zero() && s.form().apply(w[0]).is_zero();
  if (ends_with(id, ".symmetric")) return w.size() == 1 && s.contains(w[0]) && !s.contains(-w[0]);
  if (ends_with(id, ".span")) {
    if (w.size() != 1) return false;
    std::vector<Vector> gens(s.roots());
    const auto before = rank(gens);
    gens.push_back(w[0]);
    return rank(gens) > before;
  }
  if (id == "invariance") {
    if (w.size() != 3) return false;
    const Reflection g(s.form(), w[0]);
    return s.pair(g(w[1]), g(w[2])) != s.pair(w[1], w[2]);
  }
  if (w.size() != 2 || !s.contains(w[0]) || !s.contains(w[1])) return false;
  const Vector& a = w[0];
  const Vector& b = w[1];
  if (ends_with(id, ".nonsingular")) return !s.is_real(a) && !a.is_zero() && nonsingular_bad(s, a, b);
  if (a.is_zero() || !s.is_real(a)) return false;
  if (ends_with(id, ".integrality")) return !cartan_integer(s, b, a).is_integer();
  if (ends_with(id, ".reflection")) return !s.contains(reflect(s, b, a));
  if (ends_with(id, ".root_string")) return string_bad(s, a, b);
  return false;
}

namespace {

void require_integral(std::span<const Vector> roots, std::size_t dim) {
  for (const auto& r : roots) {
    if (r.dim() != dim) throw DimensionError("lattice root has wrong dimension");
    for (const auto& x : r.coords()) {
      if (!x.is_integer()) throw Error("lattice root " + to_string(r) + " has non-integral coordinates");
    }
  }
}

std::vector<Vector> standard_basis(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Vector::unit(dim, i));
  return out;
}

bool in_z_span(std::span<const Vector> roots, const Vector& v) {
  std::vector<Vector> with(roots.begin(), roots.end());
  with.push_back(v);
  return same_lattice(roots, with);
}

}  // namespace

AxiomReport verify_lattice(const GramForm& gram, std::span<const Vector> roots) {
  require_integral(roots, gram.dim());
  std::vector<Vector> owned(roots.begin(), roots.end());
  if (std::find(owned.begin(), owned.end(), Vector(gram.dim())) == owned.end()) {
    // Keep the set representable; the zero check below reports the absence.
    owned.emplace_back(gram.dim());
  }
  const RootSupersystem s(gram, owned);
  const bool has_zero = std::find(roots.begin(), roots.end(), Vector(gram.dim())) != roots.end();

  std::vector<AxiomCheck> checks;
  AxiomCheck zero = make_check("S1.zero");
  zero.evaluated = 1;
  if (!has_zero) zero = failed(std::move(zero), {});
  checks.push_back(std::move(zero));

  AxiomCheck span = make_check("S1.span");
  span.evaluated = roots.size();
  if (!same_lattice(roots, standard_basis(gram.dim()))) {
    std::vector<Vector> w;
    for (auto& e : standard_basis(gram.dim())) {
      if (!in_z_span(roots, e)) {
        w.push_back(e);
        break;
      }
    }
    span = failed(std::move(span), std::move(w));
  }
  checks.push_back(std::move(span));
  checks.push_back(check_symmetric(s, "S2.symmetric"));
  checks.push_back(check_integrality(s, "S3.integrality"));
  checks.push_back(check_reflection(s, "S3.reflection"));
  checks.push_back(check_root_strings(s, "S4.root_string", false));
  checks.push_back(check_nonsingular(s, "S5.nonsingular"));
  checks.push_back(check_nondegenerate(gram, "A0.nondegenerate"));
  return assemble(std::move(checks));
}

bool lattice_witness_refails(const GramForm& gram, std::span<const Vector> roots, const AxiomCheck& check) {
  if (check.pass) return false;
  if (check.id == "S1.zero") return std::find(roots.begin(), roots.end(), Vector(gram.dim())) == roots.end();
  if (check.id == "S1.span") return check.witness.size() == 1 && !in_z_span(roots, check.witness[0]);
  std::vector<Vector> owned(roots.begin(), roots.end());
  owned.emplace_back(gram.dim());
  return witness_refails(RootSupersystem(gram, owned), check);
}

LatticeSystem to_lattice(const RootSupersystem& s) {
  LatticeSystem out;
  out.basis = lattice_basis(s.roots());
  if (out.basis.size() != rank(s.roots())) throw Error("lattice basis has unexpected size");
  const SpanSolver solver(out.basis, s.dim());
  for (const auto& r : s.roots()) {
    auto c = solver.coordinates(r);
    if (!c) throw Error("root outside its own span");
    out.roots.emplace_back(std::move(*c));
  }
  out.gram = s.form().restrict_to(out.basis);
  return out;
}

}  // namespace rootsuper
