#include "rootsuper/label.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

#include "rootsuper/errors.hpp"

namespace rootsuper {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 23> kTokens{{
    {Family::A, "A"},         {Family::B, "B"},         {Family::C, "C"},         {Family::D, "D"},
    {Family::BC, "BC"},       {Family::G2, "G2"},       {Family::F4, "F4"},       {Family::A0T, "A0T"},
    {Family::C0T, "C0T"},     {Family::ATP, "ATP"},     {Family::A_ll, "A_ll"},   {Family::B_TT, "B_TT"},
    {Family::BC_TT, "BC_TT"}, {Family::C_TT, "C_TT"},   {Family::D_TT, "D_TT"},   {Family::B_1T, "B_1T"},
    {Family::C_1T, "C_1T"},   {Family::AB_13, "AB_13"}, {Family::D_1T, "D_1T"},   {Family::B_T1, "B_T1"},
    {Family::G_12, "G_12"},   {Family::D_21l, "D_21l"}, {Family::D_2T, "D_2T"},
}};

void require(bool ok, const TypeLabel& l, const char* what) {
  if (!ok) throw ConstraintError(std::string(family_token(l.family)) + ": " + what);
}

}  // namespace

std::string_view family_token(Family f) {
  for (const auto& [fam, tok] : kTokens) {
    if (fam == f) return tok;
  }
  return "?";
}

std::optional<Family> family_from_token(std::string_view token) {
  for (const auto& [fam, tok] : kTokens) {
    if (tok == token) return fam;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& [fam, tok] : kTokens) v.push_back(fam);
    return v;
  }();
  return fams;
}

bool is_root_system_family(Family f) {
  switch (f) {
    case Family::A: case Family::B: case Family::C: case Family::D:
    case Family::BC: case Family::G2: case Family::F4:
      return true;
    default:
      return false;
  }
}

bool is_imaginary_family(Family f) { return f == Family::A0T || f == Family::C0T || f == Family::ATP; }

bool is_real_super_family(Family f) { return !is_root_system_family(f) && !is_imaginary_family(f); }

int param_count(Family f) {
  switch (f) {
    case Family::G2: case Family::F4: case Family::AB_13: case Family::G_12: case Family::D_21l:
      return 0;
    case Family::ATP: case Family::B_TT: case Family::BC_TT: case Family::C_TT: case Family::D_TT:
      return 2;
    default:
      return 1;
  }
}

TypeLabel canonical(TypeLabel l) {
  require(static_cast<int>(l.params.size()) == param_count(l.family), l, "wrong number of parameters");
  require(l.family == Family::D_21l || !l.lambda, l, "lambda only applies to D_21l");
  auto& p = l.params;
  auto sort2 = [&] { if (p[0] > p[1]) std::swap(p[0], p[1]); };
  switch (l.family) {
    case Family::A: case Family::BC:
      require(p[0] >= 1, l, "rank must be at least 1");
      break;
    case Family::B:
      require(p[0] >= 1, l, "rank must be at least 1");
      if (p[0] == 1) l.family = Family::A;
      break;
    case Family::C:
      require(p[0] >= 2, l, "rank must be at least 2");
      if (p[0] == 2) l.family = Family::B;
      break;
    case Family::D:
      require(p[0] >= 4, l, "rank must be at least 4");
      break;
    case Family::A0T: case Family::C0T:
      require(p[0] >= 2, l, "size must be at least 2");
      break;
    case Family::ATP:
      sort2();
      require(p[0] >= 2, l, "sizes must be at least 2");
      require(p[0] != p[1], l, "sizes must differ");
      break;
    case Family::A_ll:
      require(p[0] >= 1, l, "rank must be at least 1");
      break;
    case Family::B_TT:
      require(p[0] >= 2 && p[1] >= 2, l, "sizes must be at least 2");
      break;
    case Family::BC_TT:
      require(p[0] >= 1 && p[1] >= 1, l, "sizes must be at least 1");
      sort2();
      break;
    case Family::C_TT:
      require(p[0] >= 2 && p[1] >= 2, l, "sizes must be at least 2");
      sort2();
      break;
    case Family::D_TT:
      require(p[0] >= 3 && p[1] >= 2, l, "sizes must satisfy |T|>=3, |T'|>=2");
      break;
    case Family::B_1T:
      require(p[0] >= 1, l, "size must be at least 1");
      break;
    case Family::C_1T: case Family::D_2T: case Family::B_T1:
      require(p[0] >= 2, l, "size must be at least 2");
      break;
    case Family::D_1T:
      require(p[0] >= 3, l, "size must be at least 3");
      break;
    case Family::D_21l:
      require(l.lambda.has_value(), l, "lambda required");
      require(*l.lambda != Rational(0) && *l.lambda != Rational(-1), l, "lambda must avoid 0 and -1");
      break;
    case Family::G2: case Family::F4: case Family::AB_13: case Family::G_12:
      break;
  }
  return l;
}

TypeLabel make_label(Family f, std::vector<int> params, std::optional<Rational> lambda) {
  return canonical(TypeLabel{f, std::move(params), std::move(lambda)});
}

std::string to_string(const TypeLabel& l) {
  std::string out(family_token(l.family));
  if (l.params.empty() && !l.lambda) return out;
  out += "(";
  for (std::size_t i = 0; i < l.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(l.params[i]);
  }
  if (l.lambda) out += to_string(*l.lambda);
  return out + ")";
}

TypeLabel parse_label(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view head = text.substr(0, open);
  const auto fam = family_from_token(head);
  if (!fam) throw FormatError("unknown family '" + std::string(head) + "'");
  TypeLabel l{*fam, {}, {}};
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw FormatError("malformed label '" + std::string(text) + "'");
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    if (*fam == Family::D_21l) {
      l.lambda = parse_rational(inner);
    } else {
      while (!inner.empty()) {
        const auto comma = inner.find(',');
        const std::string_view item = inner.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
          throw FormatError("malformed label parameter '" + std::string(item) + "'");
        }
        l.params.push_back(value);
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
      }
    }
  }
  try {
    return canonical(std::move(l));
  } catch (const ConstraintError& e) {
    throw FormatError(std::string("invalid label: ") + e.what());
  }
}

}  // namespace rootsuper
