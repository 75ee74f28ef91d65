#include <doctest.h>

#include <algorithm>
#include <random>

#include "rootsuper/axioms.hpp"
#include "rootsuper/catalog.hpp"
#include "rootsuper/errors.hpp"
#include "rootsuper/weyl.hpp"
#include "support.hpp"

using namespace rootsuper;
using rootsuper::testing::vec;

namespace {

RootSupersystem without(const RootSupersystem& s, std::initializer_list<Vector> drop) {
  std::vector<Vector> roots;
  for (const auto& r : s.roots()) {
    if (std::find(drop.begin(), drop.end(), r) == drop.end()) roots.push_back(r);
  }
  return s.with_roots(std::move(roots));
}

const AxiomCheck& check_of(const AxiomReport& r, std::string_view id) {
  const AxiomCheck* c = r.find(id);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("sample catalog systems pass every verifier") {
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    CAPTURE(to_string(l));
    const RootSupersystem s = make_system(l);
    CHECK(verify_T(s).pass);
    CHECK(verify_Tprime(s).pass);
    CHECK(check_invariance(s).pass);
  }
}

TEST_CASE("report layout follows the axiom lists") {
  const RootSupersystem s = make_root_system(Family::A, 2);
  std::vector<std::string> ids;
  for (const auto& c : verify_T(s).checks) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"T1.zero", "T1.locally_finite", "T2.symmetric", "T3.span", "T4.integrality",
                                        "T4.reflection", "T5.nonsingular", "form.nondegenerate"});
  CHECK_FALSE(check_of(verify_T(s), "T1.locally_finite").note.empty());
  ids.clear();
  for (const auto& c : verify_Tprime(s).checks) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"Tp1.zero", "Tp2.symmetric", "Tp3.span", "Tp4.integrality", "Tp4.reflection",
                                        "Tp5.root_string", "Tp6.nonsingular", "form.nondegenerate"});
}

TEST_CASE("missing alpha* breaks symmetry") {
  const RootSupersystem a02 = make_imaginary(Family::A0T, 2);
  const Vector star = vec({1, 0});
  REQUIRE(a02.contains(star));
  const RootSupersystem broken = without(a02, {star});
  const AxiomReport r = verify_T(broken);
  CHECK_FALSE(r.pass);
  const AxiomCheck& sym = check_of(r, "T2.symmetric");
  CHECK_FALSE(sym.pass);
  CHECK(sym.witness == std::vector<Vector>{-star});
  CHECK(witness_refails(broken, sym));
}

TEST_CASE("a missing root breaks reflection closure") {
  const RootSupersystem a2 = make_root_system(Family::A, 2);
  const RootSupersystem broken = without(a2, {vec({1, -1})});
  const AxiomReport r = verify_T(broken);
  const AxiomCheck& refl = check_of(r, "T4.reflection");
  CHECK_FALSE(refl.pass);
  REQUIRE(refl.witness.size() == 2);
  CHECK_FALSE(broken.contains(reflect(broken, refl.witness[1], refl.witness[0])));
  CHECK(witness_refails(broken, refl));
}

TEST_CASE("a missing sum breaks the root string property") {
  const RootSupersystem a2 = make_root_system(Family::A, 2);
  const RootSupersystem broken = without(a2, {vec({1, 0})});  // e1 - e3 = alpha1 + alpha2
  const AxiomReport r = verify_Tprime(broken);
  const AxiomCheck& str = check_of(r, "Tp5.root_string");
  CHECK_FALSE(str.pass);
  CHECK(witness_refails(broken, str));
  CHECK_FALSE(verify_T(broken).pass);
}

TEST_CASE("lattice verifier") {
  const GramForm a2(Matrix{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
  std::vector<Vector> roots{vec({0, 0}), vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1}), vec({1, 1}), vec({-1, -1})};
  CHECK(verify_lattice(a2, roots).pass);

  auto missing = roots;
  missing.erase(std::find(missing.begin(), missing.end(), vec({1, 1})));
  const AxiomReport r = verify_lattice(a2, missing);
  CHECK_FALSE(r.pass);
  const AxiomCheck* s3 = r.find("S3.reflection");
  REQUIRE(s3);
  CHECK_FALSE(s3->pass);
  CHECK(lattice_witness_refails(a2, missing, *s3));

  const GramForm degenerate(Matrix{{Rational(0), Rational(0)}, {Rational(0), Rational(2)}});
  const AxiomReport d = verify_lattice(degenerate, roots);
  const AxiomCheck* a0 = d.find("A0.nondegenerate");
  REQUIRE(a0);
  CHECK_FALSE(a0->pass);
  CHECK(a0->witness == std::vector<Vector>{vec({1, 0})});

  std::vector<Vector> halves{vec({0, 0}), Vector{Rational(1, 2), Rational(0)}};
  CHECK_THROWS_AS((void)verify_lattice(a2, halves), Error);

  const std::vector<Vector> sparse{vec({0, 0}), vec({2, 0}), vec({-2, 0}), vec({0, 1}), vec({0, -1})};
  const AxiomReport sp = verify_lattice(GramForm::identity(2), sparse);
  const AxiomCheck* s1 = sp.find("S1.span");
  REQUIRE(s1);
  CHECK_FALSE(s1->pass);
  CHECK(lattice_witness_refails(GramForm::identity(2), sparse, *s1));
}

TEST_CASE("lattice form corresponds to the vector space form") {
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    CAPTURE(to_string(l));
    const LatticeSystem lat = to_lattice(make_system(l));
    CHECK(verify_lattice(lat.gram, lat.roots).pass);
    CHECK(verify_T(RootSupersystem(lat.gram, lat.roots)).pass);
  }
}

TEST_CASE("invariance counts every generator and root pair") {
  const AxiomReport r = check_invariance(make_root_system(Family::B, 2));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.pass);
  CHECK(r.checks[0].id == "invariance");
  CHECK(r.checks[0].evaluated == 4 * 9 * 9);
}

TEST_CASE("T and T' agree on mutations and witnesses re-fail") {
  std::mt19937 rng(23);
  for (const auto& l : rootsuper::testing::sample_catalog()) {
    const RootSupersystem s = make_system(l);
    std::vector<Vector> positive;
    for (const auto& r : s.roots()) {
      if (Vector(s.dim()) < r) positive.push_back(r);
    }
    for (int k = 0; k < 2; ++k) {
      const Vector r = positive[std::uniform_int_distribution<std::size_t>(0, positive.size() - 1)(rng)];
      CAPTURE(to_string(l));
      CAPTURE(to_string(r));
      const RootSupersystem m = without(s, {r, -r});
      const AxiomReport t = verify_T(m);
      const AxiomReport tp = verify_Tprime(m);
      CHECK(t.pass == tp.pass);
      for (const auto* rep : {&t, &tp}) {
        for (const auto& c : rep->checks) {
          if (!c.pass) CHECK(witness_refails(m, c));
        }
      }
    }
  }
}

}
