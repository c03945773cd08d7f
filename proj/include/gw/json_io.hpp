#pragma once

#include "gw/decompose.hpp"
#include "gw/fp_matrix.hpp"
#include "gw/functors.hpp"
#include "gw/gmodule.hpp"
#include "gw/green.hpp"
#include "gw/perm_group.hpp"
#include "gw/relproj.hpp"

#include "json.hpp"

#include <string>

namespace gw {

/// Key order is preserved on parse and emit, so a report re-serializes to the
/// exact bytes it was written with.
using Json = nlohmann::ordered_json;

/// Matrices: {"p", "rows", "cols", "entries": [[row ints in [0,p)], ...]}.
Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j);

/// Groups: {"degree", "generators": [[image list], ...], "name"?}.  A bare
/// string is resolved against the built-in presets.
Json group_to_json(const PermGroup& g);
GroupPtr group_from_json(const Json& j);
/// Preset name when the group carries one, inline description otherwise.
Json group_ref_to_json(const GroupPtr& g);

/// Modules: {"group": <name or inline group>, "p", "dim", "generators":
/// [<matrix>, ...]} with one matrix per group generator.
Json module_to_json(const GModule& m);
GModule module_from_json(const Json& j);
/// Plain module shape plus an "induced_from" annotation (ignored on read).
Json induced_to_json(const InducedModule& ind);

Json subgroup_to_json(const Subgroup& s);
/// Isomorphism-type label for small subgroups ("C2", "V4", "D8", ...),
/// matched against the preset catalogue; falls back to "G<order>".
std::string structure_name(const Subgroup& s);

Json decomposition_to_json(const Decomposition& d, bool with_certificates = false);
Json vertex_to_json(const VertexResult& v);
Json quotient_hom_to_json(const QuotientHomSpace& q);
Json correspondence_to_json(const CorrespondenceReport& r);
Json bijection_to_json(const BijectionReport& r);
Json higman_to_json(const HigmanReport& r);
Json ak_to_json(const AkReport& r);

/// Envelope {"schema": "green-workbench/1", "command": <command>}.
Json make_report(const std::string& command);
/// Canonical text form: two-space indent, trailing newline, integers only.
std::string dump_report(const Json& report);

/// Parses the file, reporting the path in any diagnostic.
Json load_json_file(const std::string& path);

} // namespace gw
