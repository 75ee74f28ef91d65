#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "rootsuper/axioms.hpp"
#include "rootsuper/catalog.hpp"
#include "rootsuper/classify.hpp"
#include "rootsuper/errors.hpp"
#include "rootsuper/orbits.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper::cli {

namespace {

struct Options {
  // generate
  std::string type;
  std::optional<int> rank;
  std::optional<int> t;
  std::optional<int> p;
  std::string lambda;
  int t0 = 1;
  std::string out_file;
  // shared inputs
  std::string file;
  std::string file_b;
  // verify
  std::string mode = "t";
  // orbits
  std::string seed;
  bool small = false;
  int bound = 4;
  // string
  std::string alpha;
  std::string beta;
  // isomorphic
  bool search = false;
  std::size_t dim_limit = kDefaultDimLimit;
  std::string witness_file;
  // tower
  std::string params;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RootSupersystem load(const std::string& path) { return io::parse_document(read_file(path)); }

TypeLabel requested_label(const Options& o) {
  if (o.type.find('(') != std::string::npos) return parse_label(o.type);
  const auto family = family_from_token(o.type);
  if (!family) throw FormatError("unknown family '" + o.type + "'");
  TypeLabel l{*family, {}, {}};
  const int count = param_count(*family);
  if (count == 1) {
    const auto n = o.rank ? o.rank : o.t;
    if (!n) throw ConstraintError(o.type + " needs --rank or --t");
    l.params = {*n};
  } else if (count == 2) {
    if (!o.t || !o.p) throw ConstraintError(o.type + " needs --t and --p");
    l.params = {*o.t, *o.p};
  }
  if (*family == Family::D_21l) {
    if (o.lambda.empty()) throw ConstraintError("D_21l needs --lambda");
    l.lambda = parse_rational_relaxed(o.lambda);
  }
  return l;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const TypeLabel label = requested_label(o);
  const RootSupersystem s = make_system(label, BuildOptions{o.t0});
  const std::string text = io::serialize_document(s);
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw Error("cannot write '" + o.out_file + "'");
    f << text;
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const RootSupersystem s = load(o.file);
  AxiomReport report;
  if (o.mode == "t") {
    report = verify_T(s);
  } else if (o.mode == "tprime") {
    report = verify_Tprime(s);
  } else {
    const LatticeSystem l = to_lattice(s);
    report = verify_lattice(l.gram, l.roots);
  }
  out << io::serialize_report(report, o.mode);
  return report.pass ? kPass : kFail;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const RootSupersystem s = load(o.file);
  try {
    out << io::serialize_classification(classify(s));
    return kPass;
  } catch (const UnrecognizedError& e) {
    out << io::serialize_unrecognized(e.profile());
    return kFail;
  }
}

int cmd_components(const Options& o, std::ostream& out) {
  out << io::serialize_decomposition(connected_components(load(o.file)));
  return kPass;
}

int cmd_orbits(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSupersystem s = load(o.file);
  if (o.small == !o.seed.empty()) {
    err << "orbits: give exactly one of --seed or --small\n";
    return kUsage;
  }
  if (o.small) {
    out << io::serialize_small_orbits(small_orbit_search(s, o.bound));
    return kPass;
  }
  const Vector seed = io::parse_coordinates(o.seed);
  if (seed.dim() != s.dim()) throw DimensionError("seed has wrong dimension");
  out << io::serialize_orbit(orbit(s, seed));
  return kPass;
}

int cmd_string(const Options& o, std::ostream& out) {
  const RootSupersystem s = load(o.file);
  const RootString rs = root_string(s, io::parse_coordinates(o.beta), io::parse_coordinates(o.alpha));
  out << "p=" << rs.p << " q=" << rs.q << "\n";
  for (const auto& m : rs.members) out << to_string(m) << "\n";
  return kPass;
}

int cmd_isomorphic(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.search && !o.witness_file.empty()) {
    err << "isomorphic: --search and --witness are exclusive\n";
    return kUsage;
  }
  const RootSupersystem a = load(o.file);
  const RootSupersystem b = load(o.file_b);
  if (!o.witness_file.empty()) {
    const IsoWitness w = io::parse_witness(read_file(o.witness_file));
    const IsoVerdict v = check_isomorphism(a, b, w);
    out << io::serialize_isomorphism(v, v ? &w : nullptr);
    return v ? kPass : kFail;
  }
  const auto w = find_isomorphism(a, b, o.dim_limit);
  IsoVerdict v{w.has_value(), w ? "" : "no witness found"};
  out << io::serialize_isomorphism(v, w ? &*w : nullptr);
  return v ? kPass : kFail;
}

std::vector<std::vector<int>> parse_params(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<int> tuple;
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ':')) {
      try {
        std::size_t used = 0;
        tuple.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw FormatError("malformed parameter '" + part + "'");
      }
    }
    out.push_back(std::move(tuple));
  }
  if (out.empty()) throw FormatError("empty parameter list");
  return out;
}

int cmd_tower(const Options& o, std::ostream& out) {
  const auto family = family_from_token(o.type);
  if (!family) throw FormatError("unknown family '" + o.type + "'");
  const TowerReport r = truncation_tower(*family, parse_params(o.params));
  out << io::serialize_tower(r);
  return r.pass ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact construction, verification and classification of finite root supersystems", "rootsuper"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Build a catalog system and write its document");
  gen->add_option("--type", o.type, "Family token (A, C0T, B_TT, ...) or full label such as ATP(2,3)")->required();
  gen->add_option("--rank", o.rank, "Rank for one-parameter families");
  gen->add_option("--t", o.t, "First size parameter");
  gen->add_option("--p", o.p, "Second size parameter");
  gen->add_option("--lambda", o.lambda, "Parameter of D_21l as p/q");
  gen->add_option("--t0", o.t0, "Distinguished index for A0T and C0T")->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out_file, "Output file (default: stdout)");

  auto* ver = app.add_subcommand("verify", "Check the axioms of a system document");
  ver->add_option("file", o.file)->required();
  ver->add_option("--mode", o.mode)->check(CLI::IsMember({"t", "tprime", "lattice"}));

  auto* cls = app.add_subcommand("classify", "Identify a system against the classification tables");
  cls->add_option("file", o.file)->required();

  auto* comp = app.add_subcommand("components", "Split a system into connected components");
  comp->add_option("file", o.file)->required();

  auto* orb = app.add_subcommand("orbits", "Weyl orbit of a vector, or the small-orbit search");
  orb->add_option("file", o.file)->required();
  orb->add_option("--seed", o.seed, "Comma-separated coordinates");
  orb->add_flag("--small", o.small, "Search multiples of fundamental weights for small orbits");
  orb->add_option("--bound", o.bound, "Largest multiple searched")->check(CLI::PositiveNumber);

  auto* str = app.add_subcommand("string", "Root string of beta through a real root alpha");
  str->add_option("file", o.file)->required();
  str->add_option("--alpha", o.alpha)->required();
  str->add_option("--beta", o.beta)->required();

  auto* iso = app.add_subcommand("isomorphic", "Search for or check an isomorphism");
  iso->add_option("a", o.file)->required();
  iso->add_option("b", o.file_b)->required();
  iso->add_flag("--search", o.search, "Backtracking witness search (the default)");
  iso->add_option("--dim-limit", o.dim_limit, "Largest dimension searched");
  iso->add_option("--witness", o.witness_file, "Witness document to check instead of searching");

  auto* tow = app.add_subcommand("tower", "Check a truncation tower of one family");
  tow->add_option("--type", o.type, "Family token")->required();
  tow->add_option("--params", o.params, "Increasing parameters, e.g. 2,3,4 or 2:3,2:4,3:4")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*comp) return cmd_components(o, out);
    if (*orb) return cmd_orbits(o, out, err);
    if (*str) return cmd_string(o, out);
    if (*iso) return cmd_isomorphic(o, out, err);
    if (*tow) return cmd_tower(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace rootsuper::cli
