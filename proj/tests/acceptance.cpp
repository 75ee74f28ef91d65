// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "document.hpp"
#include "rootsuper/axioms.hpp"
#include "rootsuper/catalog.hpp"
#include "rootsuper/classify.hpp"
#include "rootsuper/errors.hpp"
#include "rootsuper/orbits.hpp"
#include "rootsuper/weyl.hpp"

using namespace rootsuper;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string what) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(what));
  }
};

struct Built {
  TypeLabel label;
  CatalogInstance inst;
};

const std::vector<Built>& catalog() {
  static const std::vector<Built> systems = [] {
    std::vector<Built> out;
    for (const auto& l : acceptance_catalog()) out.push_back({l, build(l)});
    return out;
  }();
  return systems;
}

std::set<Vector> signed_set(const std::vector<Vector>& vs) {
  std::set<Vector> out;
  for (const auto& v : vs) {
    out.insert(v);
    out.insert(-v);
  }
  return out;
}

Vector positive_root_of(const RootSupersystem& s, std::mt19937& rng, bool nonsingular) {
  std::vector<Vector> pool;
  for (const auto& r : nonsingular ? s.nonsingular_roots() : s.real_roots()) {
    if (Vector(s.dim()) < r) pool.push_back(r);
  }
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

Family component_family(const RootSupersystem& s, const Component& c) {
  return recognize_real_type(restrict_to_span(s, c)).family;
}

// ---------------------------------------------------------------------------

Outcome catalog_validity() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [label, inst] : catalog()) {
    for (const auto& report : {verify_T(inst.system), verify_Tprime(inst.system), check_invariance(inst.system)}) {
      checks += report.checks.size();
      if (!report.pass) o.fail(to_string(label) + " fails " + report.first_failure()->id);
    }
  }
  o.detail = std::to_string(catalog().size()) + " systems, " + std::to_string(checks) + " checks";
  return o;
}

Outcome t_equals_tprime() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::size_t instances = 0;
  std::size_t mutations = 0;
  std::size_t failing = 0;
  auto compare = [&](const std::string& name, const RootSupersystem& s) {
    const bool t = verify_T(s).pass;
    const bool tp = verify_Tprime(s).pass;
    ++instances;
    if (t != tp) o.fail(name + ": T=" + std::to_string(t) + " T'=" + std::to_string(tp));
    return t;
  };
  for (const auto& [label, inst] : catalog()) {
    const RootSupersystem& s = inst.system;
    compare(to_string(label), s);
    for (bool nonsingular : {false, true}) {
      if (nonsingular && s.nonsingular_roots().empty()) continue;
      const Vector r = positive_root_of(s, rng, nonsingular);
      std::vector<Vector> kept;
      for (const auto& x : s.roots()) {
        if (x != r && x != -r) kept.push_back(x);
      }
      ++mutations;
      if (!compare(to_string(label) + " minus +-" + to_string(r), s.with_roots(std::move(kept)))) ++failing;
    }
  }
  if (mutations < 20) o.fail("fewer than 20 mutations");
  o.detail = std::to_string(instances) + " instances, " + std::to_string(mutations) + " deletions (" +
             std::to_string(failing) + " rejected by both)";
  return o;
}

Outcome root_strings() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& [label, inst] : catalog()) {
    const RootSupersystem& s = inst.system;
    for (const auto& a : s.real_roots()) {
      for (const auto& b : s.roots()) {
        ++pairs;
        const auto offsets = string_offsets(s, b, a);
        const long p = -offsets.front();
        const long q = offsets.back();
        const bool unbroken = static_cast<long>(offsets.size()) == p + q + 1 && p >= 0 && q >= 0;
        const Rational c = cartan_integer(s, b, a);
        if (!unbroken || c != Rational(p - q)) {
          o.fail(to_string(label) + ": string of " + to_string(b) + " through " + to_string(a));
          continue;
        }
        if (b.is_zero() || s.is_real(b)) continue;
        // Nonsingular beta: shapes {0}, {-1..1}, {-2..2} when orthogonal, else {0..n} or {n..0}.
        const long n = -c.numerator().get_si();
        bool shape = false;
        if (n == 0) {
          shape = p == q && p <= 2;
        } else if (n > 0) {
          shape = p == 0 && q == n && n <= 2;
        } else {
          shape = q == 0 && p == -n && n >= -2;
        }
        if (!shape || p + q + 1 > 5) o.fail(to_string(label) + ": nonsingular string shape at " + to_string(b));
      }
    }
  }
  o.detail = std::to_string(pairs) + " (alpha, beta) pairs";
  return o;
}

Outcome cartan_bounds() {
  Outcome o;
  std::size_t fours = 0;
  for (const auto& [label, inst] : catalog()) {
    const RootSupersystem& s = inst.system;
    for (const auto& a : s.real_roots()) {
      for (const auto& b : s.real_roots()) {
        const Rational c = cartan_integer(s, b, a);
        if (c > Rational(4) || c < Rational(-4)) o.fail(to_string(label) + ": real-real value " + to_string(c));
        const bool is_four = c == Rational(4) || c == Rational(-4);
        const bool is_double = b == Rational(2) * a || b == Rational(-2) * a;
        if (is_four != is_double) o.fail(to_string(label) + ": value 4 off a doubled pair");
        if (is_four) ++fours;
      }
      for (const auto& b : s.nonsingular_roots()) {
        const Rational c = cartan_integer(s, b, a);
        if (c > Rational(2) || c < Rational(-2)) o.fail(to_string(label) + ": real-nonsingular value " + to_string(c));
      }
    }
    for (const auto& c : real_components(s)) {
      bool has_double = false;
      for (auto idx : c) has_double = has_double || s.contains(Rational(2) * s.roots()[idx]);
      if (has_double && component_family(s, c) != Family::BC) o.fail(to_string(label) + ": doubled root outside BC");
    }
  }
  if (fours == 0) o.fail("value 4 never attained");
  o.detail = std::to_string(fours) + " pairs with |value| 4, all on (+-2a, a)";
  return o;
}

// Orbits compared as element sets. Seeds are given on the free generators.
Outcome small_orbit_tables() {
  Outcome o;
  struct Row {
    TypeLabel label;
    std::vector<std::vector<Rational>> seeds;  // free coordinates of orbit representatives
  };
  const Rational h(1, 2);
  auto omega_a = [](int l, int i) {  // e1+..+ei - i/(l+1) * sum
    std::vector<Rational> v(static_cast<std::size_t>(l + 1), Rational(-i, l + 1));
    for (int k = 0; k < i; ++k) v[static_cast<std::size_t>(k)] += Rational(1);
    return v;
  };
  auto e = [](int n, int i) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
  };
  auto halves = [&](int n, bool flip_last) {
    std::vector<Rational> v(static_cast<std::size_t>(n), h);
    if (flip_last) v.back() = -h;
    return v;
  };
  std::vector<Row> rows;
  // A_1: {+-(k/2) alpha}, k = 1..bound, with alpha = e1 - e2.
  {
    Row r{make_label(Family::A, {1}), {}};
    for (int k = 1; k <= 4; ++k) r.seeds.push_back({Rational(k, 2), Rational(-k, 2)});
    rows.push_back(r);
  }
  for (int l = 2; l <= 4; ++l) rows.push_back({make_label(Family::A, {l}), {omega_a(l, 1), omega_a(l, l)}});
  rows.push_back({make_label(Family::B, {2}), {e(2, 0)}});
  rows.push_back({make_label(Family::B, {3}), {e(3, 0), halves(3, false)}});
  rows.push_back({make_label(Family::B, {4}), {e(4, 0)}});
  rows.push_back({make_label(Family::C, {3}), {e(3, 0)}});
  rows.push_back({make_label(Family::C, {4}), {e(4, 0)}});
  rows.push_back({make_label(Family::D, {4}), {e(4, 0), halves(4, true), halves(4, false)}});
  rows.push_back({make_label(Family::D, {5}), {e(5, 0)}});
  // BC_1: {+-k e1}; the searched multiples of omega_1 = e1/2 reach k = 1, 2.
  rows.push_back({make_label(Family::BC, {1}), {{Rational(1)}, {Rational(2)}}});
  rows.push_back({make_label(Family::BC, {2}), {e(2, 0), {Rational(1), Rational(1)}}});
  rows.push_back({make_label(Family::BC, {3}), {e(3, 0)}});

  std::vector<std::string> summary;
  for (const auto& row : rows) {
    const CatalogInstance inst = build(row.label);
    const RootSupersystem& s = inst.system;
    std::set<std::vector<Vector>> expected;
    for (const auto& seed : row.seeds) {
      Vector free(inst.embedding.generators.size());
      for (std::size_t i = 0; i < seed.size(); ++i) free[i] = seed[i];
      const auto v = inst.embedding.from_free(free, inst.embedding.generators);
      if (!v) {
        o.fail(to_string(row.label) + ": expected seed outside the span");
        continue;
      }
      expected.insert(orbit(s, *v).elements);
    }
    std::set<std::vector<Vector>> found;
    for (const auto& orb : small_orbit_search(s).small_orbits) found.insert(orb.elements);
    if (found != expected) {
      std::ostringstream msg;
      msg << to_string(row.label) << ": found " << found.size() << " small orbits, table lists " << expected.size();
      for (const auto& f : found) {
        if (!expected.count(f)) {
          msg << "; extra orbit of "
              << format_combination(inst.embedding.to_free(f.back()), inst.embedding.generators);
        }
      }
      o.fail(msg.str());
    }
  }

  // G2: the only small orbit is the set of short roots.
  const RootSupersystem g2 = make_exceptional(Family::G2);
  const auto g = small_orbit_search(g2).small_orbits;
  Rational shortest = g2.pair(g2.real_roots().front(), g2.real_roots().front());
  for (const auto& r : g2.real_roots()) shortest = std::min(shortest, g2.pair(r, r));
  std::vector<Vector> short_roots;
  for (const auto& r : g2.real_roots()) {
    if (g2.pair(r, r) == shortest) short_roots.push_back(r);
  }
  if (g.size() != 1 || g.front().elements != short_roots) o.fail("G2: small orbits differ from the short roots");

  const SmallOrbitReport f4 = small_orbit_search(make_exceptional(Family::F4));
  if (!f4.small_orbits.empty()) o.fail("F4: a searched candidate is small");

  o.detail = std::to_string(rows.size() + 2) + " types, seeds k*omega_i for k <= 4";
  return o;
}

Outcome nonsingular_orbits() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& [label, inst] : catalog()) {
    const RootSupersystem& s = inst.system;
    if (s.nonsingular_roots().empty() || !is_irreducible(s)) continue;
    ++systems;
    const std::set<Vector> ns(s.nonsingular_roots().begin(), s.nonsingular_roots().end());
    // Every delta lies in one W-orbit O; its signed orbit is O or -O, both covered here.
    std::set<Vector> covered;
    for (const auto& d : s.nonsingular_roots()) {
      if (covered.count(d)) continue;
      const auto elems = orbit(s, d).elements;
      if (signed_set(elems) != ns) o.fail(to_string(label) + ": signed orbit of " + to_string(d));
      for (const auto& v : elems) {
        covered.insert(v);
        covered.insert(-v);
      }
    }
  }
  o.detail = std::to_string(systems) + " systems";
  return o;
}

Outcome imaginary_structure() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& [label, inst] : catalog()) {
    if (!is_imaginary_family(label.family)) continue;
    ++systems;
    const RootSupersystem& s = inst.system;
    const std::string name = to_string(label);
    const auto comps = real_components(s);
    if (comps.size() > 2) o.fail(name + ": more than two real components");
    std::vector<bool> type_a;
    for (const auto& c : comps) {
      const TypeLabel t = recognize_real_type(restrict_to_span(s, c));
      const bool is_a = t.family == Family::A;
      const bool is_c = t.family == Family::C || (t.family == Family::B && t.params == std::vector<int>{2});
      if (!is_a && !is_c) o.fail(name + ": component of type " + to_string(t));
      type_a.push_back(is_a);
    }
    if (comps.size() == 2 && !(type_a[0] && type_a[1])) o.fail(name + ": two components not both of type A");

    const std::size_t n = inst.embedding.generators.size();
    for (const auto& star : s.nonsingular_roots()) {
      for (const auto& r : s.roots()) {
        const Rational c = star_coefficient(s, star, r);
        if (!(c.is_zero() || c == Rational(1) || c == Rational(-1))) o.fail(name + ": star coefficient " + to_string(c));
      }
      for (std::size_t i = 0; i < comps.size(); ++i) {
        std::set<Vector> touching;
        std::set<std::size_t> gens;
        for (auto idx : comps[i]) {
          const Vector& a = s.roots()[idx];
          const Vector f = inst.embedding.to_free(a);
          for (std::size_t g = 0; g < n; ++g) {
            if (!f[g].is_zero()) gens.insert(g);
          }
          if (!s.pair(a, star).is_zero()) touching.insert(f);
        }
        bool matched = false;
        for (auto t0 : gens) {
          const Vector u0 = Vector::unit(n, t0);
          std::set<Vector> expected;
          if (!type_a[i]) {
            expected.insert(Rational(2) * u0);
            expected.insert(Rational(-2) * u0);
          }
          for (auto t : gens) {
            if (t == t0) continue;
            const Vector ut = Vector::unit(n, t);
            expected.insert(u0 - ut);
            expected.insert(ut - u0);
            if (!type_a[i]) {
              expected.insert(u0 + ut);
              expected.insert(-(u0 + ut));
            }
          }
          matched = matched || expected == touching;
        }
        if (!matched) o.fail(name + ": non-orthogonal set for star " + to_string(star));
      }
    }
  }
  o.detail = std::to_string(systems) + " systems, every nonsingular root taken as alpha*";
  return o;
}

Outcome real_type_structure() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& [label, inst] : catalog()) {
    if (!is_real_super_family(label.family)) continue;
    ++systems;
    const RootSupersystem& s = inst.system;
    const std::string name = to_string(label);
    const auto comps = real_components(s);
    if (comps.size() > 3) o.fail(name + ": more than three real components");
    const Projector proj(s, comps);
    std::vector<std::size_t> all(comps.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (const auto& d : s.nonsingular_roots()) {
      if (proj.support(d) != all) o.fail(name + ": partial support for " + to_string(d));
    }
    // p_i(R_ns) as a union of small orbits of component i, checked from the definition.
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<Vector> comp_roots;
      std::vector<Reflection> gens;
      for (auto idx : comps[i]) {
        const Vector& r = s.roots()[idx];
        comp_roots.push_back(r);
        if (Vector(s.dim()) < r) gens.emplace_back(s.form(), r);
      }
      const std::set<Vector> comp_set(comp_roots.begin(), comp_roots.end());
      std::set<Vector> image{Vector(s.dim())};
      for (const auto& d : s.nonsingular_roots()) image.insert(proj.project(d, i));
      std::set<Vector> seen;
      for (const auto& x : image) {
        if (seen.count(x)) continue;
        const Orbit orb = orbit_under(gens, x);
        for (const auto& y : orb.elements) {
          seen.insert(y);
          if (!image.count(y)) o.fail(name + ": projection set not closed under W_i");
          for (const auto& r : comp_roots) {
            if (!cartan_integer(s, y, r).is_integer()) o.fail(name + ": projection is not a weight");
          }
        }
        for (const auto& a : orb.elements) {
          for (const auto& b : orb.elements) {
            if (a == b || a == -b) continue;
            if (!comp_set.count(a - b)) o.fail(name + ": orbit of " + to_string(x) + " is not small");
          }
        }
      }
    }
  }
  o.detail = std::to_string(systems) + " systems";
  return o;
}

Outcome classification_round_trip() {
  Outcome o;
  for (const auto& [label, inst] : catalog()) {
    try {
      const TypeLabel got = classify(inst.system.with_label(std::nullopt));
      if (got != canonical(label)) o.fail(to_string(label) + " classified as " + to_string(got));
    } catch (const Error& e) {
      o.fail(to_string(label) + ": " + e.what());
    }
  }
  o.detail = std::to_string(catalog().size()) + " labels";
  return o;
}

// Same system in new coordinates: x -> M x with the form carried along.
RootSupersystem sheared(const RootSupersystem& s) {
  const std::size_t n = s.dim();
  // M = I + E(0,1); M^{-1} = I - E(0,1).
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  inv[0][1] = Rational(-1);
  Matrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) acc += inv[k][i] * s.form()(k, l) * inv[l][j];
      }
      g[i][j] = acc;
    }
  }
  std::vector<Vector> roots;
  for (auto r : s.roots()) {
    r[0] += r[1];
    roots.push_back(r);
  }
  return RootSupersystem(GramForm(g), std::move(roots));
}

Outcome uniqueness() {
  Outcome o;
  std::size_t searches = 0;
  auto expect = [&](const std::string& name, const RootSupersystem& a, const RootSupersystem& b, bool want) {
    ++searches;
    const auto w = find_isomorphism(a, b);
    if (w.has_value() != want) {
      o.fail(name + (want ? ": no witness found" : ": unexpected witness"));
      return;
    }
    if (w && !check_isomorphism(a, b, *w)) o.fail(name + ": witness does not check");
  };
  for (Family f : {Family::A0T, Family::C0T}) {
    const RootSupersystem base = make_imaginary(f, 2, 0, 1);
    const std::string name(family_token(f));
    expect(name + "(2) t0=1 vs t0=2", base, make_imaginary(f, 2, 0, 2), true);
    expect(name + "(2) vs sheared copy", base, sheared(make_imaginary(f, 2, 0, 2)), true);
  }
  for (int l : {1, 2}) {
    const RootSupersystem r1 = make_real(make_label(Family::A_ll, {l}));
    const RootSupersystem r2 = make_a_ll_opposite(l);
    expect("A_ll(" + std::to_string(l) + ") R1 vs R2", r1, r2, true);
    if (!check_isomorphism(r1, r2, a_ll_flip_witness(l))) {
      o.fail("A_ll(" + std::to_string(l) + "): explicit flip witness rejected");
    }
  }
  expect("A0T(2) vs C0T(2)", make_imaginary(Family::A0T, 2), make_imaginary(Family::C0T, 2), false);
  o.detail = std::to_string(searches) + " searches, 2 explicit witnesses";
  return o;
}

Outcome towers() {
  Outcome o;
  const std::vector<std::pair<Family, std::vector<std::vector<int>>>> cases{
      {Family::A0T, {{2}, {3}, {4}}},
      {Family::C0T, {{2}, {3}, {4}}},
      {Family::ATP, {{2, 3}, {2, 4}, {3, 4}}},
      {Family::C_1T, {{2}, {3}}},
      {Family::B_TT, {{2, 2}, {2, 3}, {3, 3}}},
  };
  for (const auto& [family, params] : cases) {
    const TowerReport r = truncation_tower(family, params);
    const std::string name(family_token(family));
    if (!r.pass) o.fail(name + " tower fails");
    if (!r.same_family) o.fail(name + " tower changes family");
    for (const auto& m : r.members) {
      if (!m.irreducible) o.fail(to_string(m.label) + " reducible");
    }
  }
  o.detail = std::to_string(cases.size()) + " towers";
  return o;
}

Outcome format_stability() {
  Outcome o;
  std::mt19937 rng(777);
  const auto& cat = catalog();
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const TypeLabel& label = cat[pick(rng)].label;
    BuildOptions opts;
    if (label.family == Family::A0T || label.family == Family::C0T) {
      opts.t0 = std::uniform_int_distribution<int>(1, label.params[0])(rng);
    }
    const std::string first = io::serialize_document(make_system(label, opts));
    const std::string second = io::serialize_document(io::parse_document(first));
    if (first != second) o.fail(to_string(label) + ": reserialization differs");
  }
  o.detail = "100 instances";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-12"};
  std::vector<int> expected_failures;
  app.add_option("--expect-fail", expected_failures,
                 "Criteria known to fail; the exit status stays 0 when exactly these fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalog validity", catalog_validity},
      {"T and T' agree", t_equals_tprime},
      {"root strings", root_strings},
      {"Cartan bounds", cartan_bounds},
      {"small-orbit tables", small_orbit_tables},
      {"nonsingular orbit structure", nonsingular_orbits},
      {"imaginary structure", imaginary_structure},
      {"real-type structure", real_type_structure},
      {"classification round trip", classification_round_trip},
      {"uniqueness at desk scale", uniqueness},
      {"direct-union towers", towers},
      {"format stability", format_stability},
  };

  const auto start = std::chrono::steady_clock::now();
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out.pass) failed.insert(id);
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << out.detail;
    std::cout << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]\n";
    for (const auto& p : out.problems) std::cout << "     - " << p << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << failed.size() << " of " << criteria.size() << " criteria failed, total " << total << "s\n";

  const std::set<int> expected(expected_failures.begin(), expected_failures.end());
  if (!expected.empty()) {
    std::cout << "expected failures:";
    for (int id : expected) std::cout << " " << id;
    std::cout << "\n";
  }
  return failed == expected ? 0 : 1;
}
