#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rootsuper/axioms.hpp"
#include "rootsuper/classify.hpp"
#include "rootsuper/orbits.hpp"
#include "rootsuper/system.hpp"
#include "rootsuper/weyl.hpp"

namespace rootsuper::io {

// Canonical text of a system document (see docs/FORMAT.md). Newline-terminated.
[[nodiscard]] std::string serialize_document(const RootSupersystem& s);

// Strict parser; throws FormatError on any schema or normalization violation.
[[nodiscard]] RootSupersystem parse_document(std::string_view text);

[[nodiscard]] std::string serialize_report(const AxiomReport& report, std::string_view mode);
[[nodiscard]] std::string serialize_decomposition(const Decomposition& d);
[[nodiscard]] std::string serialize_orbit(const Orbit& o);
[[nodiscard]] std::string serialize_small_orbits(const SmallOrbitReport& r);
[[nodiscard]] std::string serialize_classification(const TypeLabel& label);
[[nodiscard]] std::string serialize_unrecognized(const ComponentProfile& p);
[[nodiscard]] std::string serialize_witness(const IsoWitness& w);
[[nodiscard]] IsoWitness parse_witness(std::string_view text);
[[nodiscard]] std::string serialize_isomorphism(const IsoVerdict& verdict, const IsoWitness* witness);
[[nodiscard]] std::string serialize_tower(const TowerReport& r);

// Comma-separated rationals, optionally bracketed; "1/2" and "3" both accepted.
[[nodiscard]] Vector parse_coordinates(std::string_view text);

}  // namespace rootsuper::io
