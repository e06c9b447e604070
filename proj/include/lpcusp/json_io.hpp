#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpcusp/clifford.hpp"
#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/extquot.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/lparams.hpp"
#include "lpcusp/reps.hpp"
#include "lpcusp/springer.hpp"
#include "lpcusp/tga.hpp"

namespace lpcusp {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ValidationError with the byte offset.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);
/// Accepts the text form or {"e": e, "coeffs": [[i, "p/q"], ...]}.
Cyclotomic cyclotomic_from_json(const Json& j);
Json cyclotomic_to_json(const Cyclotomic& c);
RootOfUnity root_from_json(const Json& j);  // [m, k]
Json root_to_json(const RootOfUnity& r);

/**
 * {"kind": "perm", "generators": [[...], ...]}, {"kind": "monomial", "dim": n, "generators": [[[row, col, value], ...], ...]},
 * {"kind": "table", "table": [[...], ...]} or {"kind": "named", "name": "cyclic"|"dihedral"|"symmetric"|"alternating"|
 * "quaternion"|"elementary2", "n": n}.
 */
GroupPtr group_from_json(const Json& j);
/// Summary: order, classes, element orders; `with_table` adds the multiplication table.
Json group_to_json(const FiniteGroup& g, bool with_table = false);

/// An array of generators, or {"elements": [...]} or {"generators": [...]}.
SubgroupHandle subgroup_from_json(const GroupPtr& g, const Json& j);

/// {"group": ..., "m": m, "values": [[a, b, k], ...]}; `g` overrides the embedded group when given.
TwoCocycle cocycle_from_json(const Json& j, GroupPtr g = nullptr);
Json cocycle_to_json(const TwoCocycle& c);

CycloMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CycloMatrix& m);

Json character_table_to_json(const GroupPtr& g);

/**
 * {"gamma": group, "labels": [...], "action": [[g.x for x] for g], "kappa": [{"x": i, "m": m, "values": [[a, b, k], ...]}],
 *  "scalars": [{"g": g, "x": x, "values": [[m, k], ...]}]}; kappa indices are positions in the isotropy group.
 */
ActionDatum action_datum_from_json(const Json& j);
Json extended_quotient_to_json(const ActionDatum& d, const ExtendedQuotient& q);

/// {"group": G, "normal": subgroup, "eps": {"<element of G>": matrix, ...}, "representatives": [...]}.
SectionDatum section_datum_from_json(const Json& j);

struct ParsedParameter {
  EnhancedParameter p;
  std::optional<RootOfUnity> zeta_center;
};

GroupDescriptor group_descriptor_from_json(const Json& j);
Json group_descriptor_to_json(const GroupDescriptor& g);
LParameter lparameter_from_json(const Json& j);
Json lparameter_to_json(const LParameter& phi);
ParsedParameter enhanced_parameter_from_json(const Json& j);
Json enhancement_to_json(const Enhancement& rho);
Json enhanced_parameter_to_json(const EnhancedParameter& p);

Json cuspidal_datum_to_json(const CuspidalDatum& cd);
Json inertial_class_to_json(const InertialClass& ic);
Json component_quotient_to_json(const ComponentQuotient& cq);

/// {"type": t, "n": n, "entries": [...]} or a bare list of entries each carrying "type".
SpringerTable springer_table_from_json(const Json& j);
Json springer_table_to_json(const SpringerTable& t);
Json census_to_json(const CensusResult& r);
Json cuspidal_pair_to_json(const CuspidalPair& p);

/// JSON schemas of the input formats.
Json json_schemas();

}  // namespace lpcusp
