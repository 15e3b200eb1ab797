#pragma once

#include <string>

#include "json.hpp"

#include "csfkit/listing.hpp"
#include "csfkit/poset.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

// {"n": 4, "lt": [[0,1],[1,2],[0,2]]} -- emitted pairs are the full strict
// relation; input pairs may be any generating set (closure is taken).
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// {"parts":[{"v":2},{"b":{"level":1,"r":2,"s":2,"edges":[[1,1],[2,1]]}}]}
nlohmann::json listing_to_json(const PartListing& listing);
PartListing listing_from_json(const nlohmann::json& j);

// {"basis":"e","terms":[{"coeff":"20","partition":[4,2]}, ...]}
nlohmann::json symfunc_to_json(const SymFunc& f);

}  // namespace csfkit
