#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootsuper/rational.hpp"

namespace rootsuper {

enum class Family {
  // finite root systems
  A, B, C, D, BC, G2, F4,
  // imaginary type
  A0T, C0T, ATP,
  // real type
  A_ll, B_TT, BC_TT, C_TT, D_TT, B_1T, C_1T, AB_13, D_1T, B_T1, G_12, D_21l, D_2T,
};

[[nodiscard]] std::string_view family_token(Family f);
[[nodiscard]] std::optional<Family> family_from_token(std::string_view token);
[[nodiscard]] const std::vector<Family>& all_families();

[[nodiscard]] bool is_root_system_family(Family f);
[[nodiscard]] bool is_imaginary_family(Family f);
[[nodiscard]] bool is_real_super_family(Family f);

// Number of integer parameters the family takes (0, 1 or 2).
[[nodiscard]] int param_count(Family f);

struct TypeLabel {
  Family family = Family::A;
  std::vector<int> params;
  std::optional<Rational> lambda;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

// Validates parameters and rewrites coincident presentations to one label:
// B_1 -> A_1, C_2 -> B_2, symmetric two-parameter families sorted,
// BC(m,1) -> BC(1,m). Throws ConstraintError on out-of-range parameters.
[[nodiscard]] TypeLabel canonical(TypeLabel label);

[[nodiscard]] TypeLabel make_label(Family f, std::vector<int> params = {}, std::optional<Rational> lambda = {});

// Text form such as "B(2)", "G2", "ATP(2,3)", "D_21l(1/2)".
[[nodiscard]] std::string to_string(const TypeLabel& label);
[[nodiscard]] TypeLabel parse_label(std::string_view text);

}  // namespace rootsuper
