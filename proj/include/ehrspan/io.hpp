#pragma once

#include "ehrspan/ehrhart.hpp"
#include "ehrspan/idp.hpp"
#include "ehrspan/inequalities.hpp"
#include "ehrspan/lattice_algebra.hpp"
#include "ehrspan/polytope.hpp"
#include "ehrspan/upp.hpp"

#include <json.hpp>

#include <string>

namespace ehrspan {

/// Integers are emitted as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; the parser accepts both spellings.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);
nlohmann::json intvec_to_json(const IntVec& v);

/// Polytope file format: {"dim": d, "vertices": [[int, ...], ...]}.
LatticePolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const LatticePolytope& p);

/// Point-set file format: {"weights": [1,1,1,2], "points": [["1","1/2",...], ...]}
/// with coordinates as exact rational strings "num" or "num/den". The
/// weight list spells out every variable: the leading 1s are the
/// weight-one block (required nonempty), the remaining entries (each ≥ 2)
/// the heavier variables, in coordinate order.
ProjectivePointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json point_set_to_json(const ProjectivePointSet& gamma);

nlohmann::json hstar_to_json(const HStarVector& h);
nlohmann::json lattice_info_to_json(const PointLatticeInfo& info);
nlohmann::json idp_to_json(const IdpVerdict& v);
nlohmann::json inequality_report_to_json(const InequalityReport& rep);
nlohmann::json upp_result_to_json(const UppResult& r);
nlohmann::json upp_bound_to_json(const UppBoundReport& r);
nlohmann::json min_formula_to_json(const MinFormulaReport& r);

}  // namespace ehrspan
