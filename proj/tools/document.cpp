#include "document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "rootsuper/errors.hpp"

namespace rootsuper::io {

namespace {

using Json = nlohmann::ordered_json;

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_scalar_array(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar); }

// Values that fit on one line inside an inline record.
bool is_leafy(const Json& j) {
  if (is_scalar(j) || is_scalar_array(j)) return true;
  return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar_array);
}

// Array elements that are flat records print as one line.
bool is_inline_record(const Json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), is_leafy);
}

void write_inline(const Json& j, std::string& out) {
  if (is_scalar(j)) {
    out += j.dump();
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{" : "[";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    if (i) out += ", ";
    if (obj) out += Json(it.key()).dump() + ": ";
    write_inline(it.value(), out);
  }
  out += obj ? "}" : "]";
}

// Scalar arrays and flat records stay on one line; everything else is indented by two spaces.
void write(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  if (is_scalar(j) || is_scalar_array(j) || j.empty()) {
    write_inline(j, out);
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      if (is_inline_record(j[i])) {
        write_inline(j[i], out);
      } else {
        write(j[i], out, depth + 1);
      }
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "]";
  } else {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(it.value(), out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "}";
  }
}

std::string render(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

Json vec(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v.coords()) a.push_back(to_string(x));
  return a;
}

Json vecs(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

Json matrix(const Matrix& m) {
  Json a = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    a.push_back(std::move(r));
  }
  return a;
}

Json document_json(const RootSupersystem& s) {
  Json j;
  j["dim"] = s.dim();
  j["basis"] = s.basis_labels();
  j["gram"] = matrix(s.form().entries());
  j["roots"] = vecs(s.roots());
  if (s.label()) j["label"] = to_string(*s.label());
  return j;
}

Json orbit_json(const Orbit& o) {
  Json j;
  j["seed"] = vec(o.seed);
  j["size"] = o.size();
  j["elements"] = vecs(o.elements);
  return j;
}

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) bad("document must be a JSON object");
  for (auto k : required) {
    if (!j.contains(std::string(k))) bad("missing key '" + std::string(k) + "'");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    const bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                       std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) bad("unknown key '" + k + "'");
  }
}

Rational rational_of(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const FormatError& e) {
    bad(where + ": " + e.what());
  }
}

Vector vector_of(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  if (j.size() != dim) bad(where + ": expected " + std::to_string(dim) + " entries");
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational_of(j[i], where);
  return v;
}

Matrix matrix_of(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) bad(where + ": expected " + std::to_string(dim) + " rows");
  Matrix m;
  for (std::size_t i = 0; i < dim; ++i) {
    const Vector row = vector_of(j[i], dim, where + " row " + std::to_string(i));
    m.emplace_back(row.coords().begin(), row.coords().end());
  }
  return m;
}

std::size_t dim_of(const Json& j) {
  if (!j.is_number_unsigned()) bad("'dim' must be a non-negative integer");
  const auto d = j.get<std::size_t>();
  if (d == 0) bad("'dim' must be positive");
  return d;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string serialize_document(const RootSupersystem& s) { return render(document_json(s)); }

RootSupersystem parse_document(std::string_view text) {
  const Json j = parse_json(text);
  require_keys(j, {"dim", "basis", "gram", "roots"}, {"label"});
  const std::size_t dim = dim_of(j["dim"]);

  const Json& basis = j["basis"];
  if (!basis.is_array() || basis.size() != dim) bad("'basis' must list " + std::to_string(dim) + " names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) bad("'basis' entries must be strings");
    names.push_back(b.get<std::string>());
  }

  const Matrix gram = matrix_of(j["gram"], dim, "gram");
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      if (gram[a][b] != gram[b][a]) bad("gram is not symmetric");
    }
  }

  const Json& roots = j["roots"];
  if (!roots.is_array()) bad("'roots' must be an array");
  std::vector<Vector> rs;
  std::set<Vector> seen;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Vector v = vector_of(roots[i], dim, "root " + std::to_string(i));
    if (!seen.insert(v).second) bad("duplicate root " + to_string(v));
    rs.push_back(std::move(v));
  }
  if (!seen.contains(Vector(dim))) bad("roots must include the zero vector");

  std::optional<TypeLabel> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) bad("'label' must be a string");
    label = parse_label(j["label"].get<std::string>());
  }
  return RootSupersystem(GramForm(gram), std::move(rs), std::move(names), std::move(label));
}

std::string serialize_report(const AxiomReport& report, std::string_view mode) {
  Json j;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["mode"] = std::string(mode);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["pass"] = c.pass;
    e["evaluated"] = c.evaluated;
    e["witness"] = vecs(c.witness);
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return render(j);
}

std::string serialize_decomposition(const Decomposition& d) {
  Json j;
  j["count"] = d.size();
  Json comps = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json c;
    c["nondegenerate"] = static_cast<bool>(d.nondegenerate[i]);
    c["document"] = document_json(d.components[i]);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return render(j);
}

std::string serialize_orbit(const Orbit& o) { return render(orbit_json(o)); }

std::string serialize_small_orbits(const SmallOrbitReport& r) {
  Json j;
  j["search_bound"] = r.search_bound;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json e;
    e["seed"] = vec(c.seed);
    e["orbit_size"] = c.orbit_size;
    e["is_weight"] = c.is_weight;
    e["is_small"] = c.is_small;
    if (c.failing_pair) e["failing_pair"] = vecs({c.failing_pair->first, c.failing_pair->second});
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  Json small = Json::array();
  for (const auto& o : r.small_orbits) small.push_back(orbit_json(o));
  j["small_orbits"] = std::move(small);
  return render(j);
}

std::string serialize_classification(const TypeLabel& label) {
  Json j;
  j["label"] = to_string(label);
  if (label.lambda) {
    Json orbit = Json::array();
    for (const auto& x : lambda_orbit(*label.lambda)) orbit.push_back(to_string(x));
    j["lambda_orbit"] = std::move(orbit);
  }
  return render(j);
}

std::string serialize_unrecognized(const ComponentProfile& p) {
  Json prof;
  prof["reason"] = p.reason;
  prof["dim"] = p.dim;
  prof["real_rank"] = p.real_rank;
  prof["nonsingular_count"] = p.nonsingular_count;
  prof["real_types"] = p.real_types;
  Json j;
  j["unrecognized"] = std::move(prof);
  return render(j);
}

std::string serialize_witness(const IsoWitness& w) {
  Json j;
  j["matrix"] = matrix(w.matrix);
  j["scalar_r"] = to_string(w.scalar_r);
  return render(j);
}

IsoWitness parse_witness(std::string_view text) {
  const Json j = parse_json(text);
  require_keys(j, {"matrix", "scalar_r"}, {});
  const Json& m = j["matrix"];
  if (!m.is_array() || m.empty()) bad("'matrix' must be a non-empty array");
  IsoWitness w;
  w.matrix = matrix_of(m, m.size(), "matrix");
  w.scalar_r = rational_of(j["scalar_r"], "scalar_r");
  return w;
}

std::string serialize_isomorphism(const IsoVerdict& verdict, const IsoWitness* witness) {
  Json j;
  j["isomorphic"] = verdict.isomorphic;
  if (!verdict.reason.empty()) j["reason"] = verdict.reason;
  if (witness) {
    Json w;
    w["matrix"] = matrix(witness->matrix);
    w["scalar_r"] = to_string(witness->scalar_r);
    j["witness"] = std::move(w);
  }
  return render(j);
}

std::string serialize_tower(const TowerReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["same_family"] = r.same_family;
  Json members = Json::array();
  for (const auto& m : r.members) {
    Json e;
    e["label"] = to_string(m.label);
    e["irreducible"] = m.irreducible;
    if (m.classified) e["classified"] = to_string(*m.classified);
    if (!m.classify_error.empty()) e["classify_error"] = m.classify_error;
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["from"] = to_string(r.members[s.from].label);
    e["to"] = to_string(r.members[s.to].label);
    e["nested"] = s.nested;
    e["form_compatible"] = s.form_compatible;
    e["sub_supersystem"] = s.sub.ok;
    if (!s.sub.reason.empty()) e["reason"] = s.sub.reason;
    if (!s.sub.witness.empty()) e["witness"] = vecs(s.sub.witness);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return render(j);
}

Vector parse_coordinates(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') bad("unbalanced brackets in coordinates");
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) bad("empty coordinate list");
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational_relaxed(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Vector(std::move(out));
}

}  // namespace rootsuper::io
