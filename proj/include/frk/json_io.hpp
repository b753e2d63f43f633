#pragma once

#include <json.hpp>

#include "frk/addset.hpp"
#include "frk/freiman.hpp"

namespace frk {

using nlohmann::json;

/// Integers serialize as JSON numbers when they fit, decimal strings
/// otherwise; both forms parse back.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json vec_to_json(const IntVec& v);

json group_to_json(const FgaGroup& g);      // {"rank": r, "torsion": [...]}
FgaGroup group_from_json(const json& j);

json element_to_json(const GroupElement& x);  // coordinate array
GroupElement element_from_json(const FgaGroup& g, const json& j);

json set_to_json(const AdditiveSet& a);  // {"ambient": ..., "elements": ...}
AdditiveSet set_from_json(const json& j);

json rat_to_json(const Rat& r);  // {"num": ..., "den": ...}

// {"order": k, "pairs": [[src-element, tgt-element], ...]}
json map_to_json(const FreimanMap& f);
FreimanMap map_from_json(const AdditiveSet& source, const AdditiveSet& target,
                         const json& j, int default_order);

}  // namespace frk
