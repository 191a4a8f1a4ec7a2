#pragma once

#include <json.hpp>

#include "theoria/algebra.hpp"
#include "theoria/closure.hpp"
#include "theoria/gallery.hpp"
#include "theoria/lattice.hpp"
#include "theoria/oracle.hpp"

namespace theoria {

using Json = nlohmann::json;

Json family_json(const Family& f);
Json gen_set_report_json(const GenSetReport& r);  // { isolated, hasLeast, leastGenSet, witnesses }
Json hasse_json(const GeneratedLattice& l);       // { nodes: [{id,name}], edges: [[lo,hi]] }
Json op_tables_json(const GeneratedLattice& l);   // matrices of element ids
Json cb_profile_json(const CBProfile& p);
Json algebra_json(const BooleanAlgebra& a);       // elements with generator bitmask, atoms flagged
Json decomposition_json(const LeqDecomposition& d);
Json gallery_case_json(const GalleryCase& c);
Json projection_json(const DepthProjection& p);

}  // namespace theoria
