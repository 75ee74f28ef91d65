#include "rootsuper/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rootsuper/errors.hpp"

namespace rootsuper {

Reflection::Reflection(const GramForm& form, Vector alpha) : alpha_(std::move(alpha)), g_alpha_(form.apply(alpha_)) {
  const Rational norm = dot(alpha_, g_alpha_);
  if (norm.is_zero()) throw NullRootError("reflection in null vector " + to_string(alpha_));
  scale_ = Rational(2) / norm;
}

Rational Reflection::coroot(const Vector& v) const { return scale_ * dot(v, g_alpha_); }

Vector Reflection::operator()(const Vector& v) const {
  Vector out = v;
  out.add_scaled(-coroot(v), alpha_);
  return out;
}

Rational cartan_integer(const RootSupersystem& s, const Vector& beta, const Vector& alpha) {
  const Rational norm = s.pair(alpha, alpha);
  if (norm.is_zero()) throw NullRootError("cartan_integer against null vector " + to_string(alpha));
  return Rational(2) * s.pair(beta, alpha) / norm;
}

Vector reflect(const RootSupersystem& s, const Vector& v, const Vector& alpha) {
  return Reflection(s.form(), alpha)(v);
}

std::vector<Reflection> weyl_generators(const GramForm& form, std::span<const Vector> real_roots) {
  std::vector<Reflection> gens;
  std::set<Vector> seen;
  for (const auto& r : real_roots) {
    if (r.is_zero() || seen.contains(-r)) continue;
    seen.insert(r);
    gens.emplace_back(form, r);
  }
  return gens;
}

bool Orbit::contains(const Vector& v) const { return std::binary_search(elements.begin(), elements.end(), v); }

Orbit orbit_under(std::span<const Reflection> generators, const Vector& v) {
  std::set<Vector> seen{v};
  std::deque<Vector> queue{v};
  while (!queue.empty()) {
    const Vector cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Vector img = g(cur);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return Orbit{v, std::vector<Vector>(seen.begin(), seen.end())};
}

Orbit orbit(const RootSupersystem& s, const Vector& v) {
  if (v.dim() != s.dim()) throw DimensionError("orbit seed has wrong dimension");
  const auto gens = weyl_generators(s.form(), s.real_roots());
  return orbit_under(gens, v);
}

RootString root_string(const RootSupersystem& s, const Vector& beta, const Vector& alpha) {
  if (alpha.is_zero() || !s.contains(alpha) || !s.is_real(alpha)) {
    throw Error("root_string: " + to_string(alpha) + " is not a nonzero real root");
  }
  if (!s.contains(beta)) throw Error("root_string: " + to_string(beta) + " is not a root");
  auto scan = [&](int step) {
    int n = 0;
    Vector cur = beta;
    for (;;) {
      cur.add_scaled(Rational(step), alpha);
      if (!s.contains(cur)) return n;
      if (++n > kRootStringBound) throw Error("root_string: scan exceeded the offset bound");
    }
  };
  RootString rs;
  rs.p = scan(-1);
  rs.q = scan(1);
  for (int i = -rs.p; i <= rs.q; ++i) {
    Vector m = beta;
    m.add_scaled(Rational(i), alpha);
    rs.members.push_back(std::move(m));
  }
  return rs;
}

std::vector<long> string_offsets(const RootSupersystem& s, const Vector& beta, const Vector& alpha, StringScope scope) {
  std::size_t pivot = 0;
  while (pivot < alpha.dim() && alpha[pivot].is_zero()) ++pivot;
  if (pivot == alpha.dim()) throw Error("string_offsets: alpha is zero");
  std::vector<long> out;
  auto consider = [&](const Vector& g) {
    const Rational t = (g[pivot] - beta[pivot]) / alpha[pivot];
    if (!t.is_integer()) return;
    Vector expect = beta;
    expect.add_scaled(t, alpha);
    if (expect == g) out.push_back(t.numerator().get_si());
  };
  if (scope == StringScope::all_roots) {
    for (const auto& g : s.roots()) consider(g);
  } else {
    consider(Vector(s.dim()));
    for (const auto& g : s.real_roots()) consider(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rootsuper
