#pragma once

#include "pbdom/diagram.hpp"
#include "pbdom/domain.hpp"
#include "pbdom/orient.hpp"
#include "pbdom/pba.hpp"
#include "pbdom/poset.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace pbdom {

using Json = nlohmann::ordered_json;

// Every *_from_json throws UsageError on malformed JSON shapes; structural
// problems in the decoded object surface as the library's own errors.

Json read_json_file(const std::string& path);

Json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);

Json bool_to_json(const FinBool& b);
FinBool bool_from_json(const Json& j);
/// Element as its sorted atom-label array.
Json elem_to_json(const FinBool& b, Elem x);

/// {"source", "target", "atom_images": {"sourceAtom": ["targetAtom", ...]}}
Json hom_to_json(const BoolHom& f);
BoolHom hom_from_json(const Json& j);

Json spec_to_json(const PbaSpec& s);
PbaSpec spec_from_json(const Json& j);
Json pba_to_json(const PieceBool& p);
/// Validates; throws StructuralError with the first violation.
PieceBool pba_from_json(const Json& j);

Json orientation_to_json(const FinPoset& l, const Orientation& o);
std::pair<FinPoset, Orientation> orientation_from_json(const Json& j);

Json diagram_to_json(const PBDiagram& f);
PBDiagram diagram_from_json(const Json& j);

Json report_to_json(const DomainReport& r);
Json validation_to_json(const ValidationReport& r);
Json map_to_json(const FinPoset& from, const FinPoset& to, const PosetMap& f);

}  // namespace pbdom
