#pragma once

#include <string>

#include <json.hpp>

#include "sct/character_table.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/group.hpp"
#include "sct/lattice.hpp"
#include "sct/sct.hpp"
#include "sct/schur.hpp"
#include "sct/validation.hpp"

namespace sct {

using json = nlohmann::json;

/// {"conductor": n, "coords": [["p","q"], ...]} with length-n coordinates.
json cyclotomic_to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const json& j);

/// Accepts the object form above, integer literals, and "p/q" strings.
Cyclotomic cyclotomic_from_flexible_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// GroupSpec: {"family":...,"n":...} | {"product":[...]} |
/// {"generators":[[...]]} | {"table":[[...]]}.
json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);

/// Shorthand ("cyclic:6"), inline JSON, or a path to a JSON file.
GroupSpec parse_group_argument(const std::string& text);

/// Deterministic identifier of a built group (FNV-1a over the
/// multiplication table).
std::string group_hash(const FiniteGroup& g);

json table_to_json(const CharacterTable& table);

/// {"group": hash, "classes": [[...]], "chars": [[...]]}.
json theory_to_json(const SupercharacterTheory& c);

json schur_to_json(const SchurPartition& s);

json violation_to_json(const Violation& v);

json lattice_to_json(const SupLattice& lattice);

/// DOT digraph of the Hasse diagram, nodes labeled by theory size and a
/// short class-partition summary.
std::string lattice_to_dot(const SupLattice& lattice);

}  // namespace sct
