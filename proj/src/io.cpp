#include "ehrspan/io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ehrspan {

using nlohmann::json;

namespace {

const Int kInt64Min{std::numeric_limits<std::int64_t>::min()};
const Int kInt64Max{std::numeric_limits<std::int64_t>::max()};

}  // namespace

json int_to_json(const Int& x) {
  if (x >= kInt64Min && x <= kInt64Max) return static_cast<std::int64_t>(x);
  return x.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: " + j.dump());
    }
  }
  throw std::invalid_argument("not an integer: " + j.dump());
}

json intvec_to_json(const IntVec& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

LatticePolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("polytope JSON needs \"dim\" and \"vertices\"");
  if (!j["dim"].is_number_integer())
    throw std::invalid_argument("\"dim\" must be an integer");
  long long dim = j["dim"].get<long long>();
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw std::invalid_argument("\"vertices\" must be a nonempty array");

  std::vector<IntVec> pts;
  pts.reserve(j["vertices"].size());
  for (const json& row : j["vertices"]) {
    if (!row.is_array())
      throw std::invalid_argument("each vertex must be an array of integers");
    IntVec p;
    p.reserve(row.size());
    for (const json& c : row) p.push_back(int_from_json(c));
    pts.push_back(std::move(p));
  }
  return LatticePolytope(dim, std::move(pts));
}

json polytope_to_json(const LatticePolytope& p) {
  json verts = json::array();
  for (const IntVec& v : p.vertices()) verts.push_back(intvec_to_json(v));
  return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

ProjectivePointSet point_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("points"))
    throw std::invalid_argument("point-set JSON needs \"weights\" and \"points\"");
  if (!j["weights"].is_array() || j["weights"].empty())
    throw std::invalid_argument("\"weights\" must be a nonempty array");

  WeightedSpace space;
  space.n = 0;
  bool past_units = false;
  for (const json& w : j["weights"]) {
    if (!w.is_number_integer() || w.get<long long>() < 1)
      throw std::invalid_argument("weights must be positive integers");
    long long a = w.get<long long>();
    if (a == 1) {
      if (past_units)
        throw std::invalid_argument("weight-1 variables must come first");
      ++space.n;
    } else {
      past_units = true;
      space.weights.push_back(a);
    }
  }
  if (space.n == 0)
    throw std::invalid_argument("need at least one weight-1 variable");

  if (!j["points"].is_array() || j["points"].empty())
    throw std::invalid_argument("\"points\" must be a nonempty array");
  std::vector<RatVec> raw;
  raw.reserve(j["points"].size());
  for (const json& row : j["points"]) {
    if (!row.is_array() || static_cast<long long>(row.size()) != space.total_vars())
      throw std::invalid_argument("each point needs one coordinate per weight entry");
    RatVec p;
    p.reserve(row.size());
    for (const json& c : row) {
      if (c.is_number_integer())
        p.push_back(Rat(Int(c.get<std::int64_t>())));
      else if (c.is_string())
        p.push_back(parse_rational(c.get<std::string>()));
      else
        throw std::invalid_argument("coordinates must be integers or rational strings");
    }
    raw.push_back(std::move(p));
  }
  return make_point_set(std::move(space), std::move(raw));
}

json point_set_to_json(const ProjectivePointSet& gamma) {
  json weights = json::array();
  for (long long i = 0; i < gamma.space.n; ++i) weights.push_back(1);
  for (long long a : gamma.space.weights) weights.push_back(a);
  json points = json::array();
  for (const ProjectivePoint& p : gamma.points) {
    json row = json::array();
    for (const Rat& c : p.coords) row.push_back(rational_to_string(c));
    points.push_back(std::move(row));
  }
  return json{{"weights", std::move(weights)}, {"points", std::move(points)}};
}

json hstar_to_json(const HStarVector& h) {
  return json{{"hstar", intvec_to_json(h.coeffs)},
              {"degree", h.degree},
              {"normalized_volume", int_to_json(h.normalized_volume)}};
}

json lattice_info_to_json(const PointLatticeInfo& info) {
  return json{{"index", int_to_json(info.index)},
              {"spanning", info.index == 1},
              {"snf_diagonal", intvec_to_json(info.snf_diagonal)}};
}

json idp_to_json(const IdpVerdict& v) {
  json cex;
  if (v.counterexample) {
    cex = json{{"k", v.counterexample->first},
               {"point", intvec_to_json(v.counterexample->second)}};
  }
  return json{{"is_idp", v.is_idp},
              {"checked_up_to", v.checked_up_to},
              {"counterexample", std::move(cex)}};
}

json inequality_report_to_json(const InequalityReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations) {
    json params = json::object();
    for (const auto& [key, val] : v.params) params[key] = val;
    violations.push_back(json{{"params", std::move(params)},
                              {"lhs", int_to_json(v.lhs)},
                              {"rhs", int_to_json(v.rhs)}});
  }
  json out{{"family", rep.family},
           {"pass", rep.pass},
           {"applicable", rep.applicable},
           {"violations", std::move(violations)},
           {"degree", rep.degree},
           {"dim", rep.dim}};
  if (rep.spanning) out["spanning"] = *rep.spanning;
  return out;
}

json upp_result_to_json(const UppResult& r) {
  json out{{"uniform", r.uniform}};
  if (r.witness) {
    out["witness"] = json{{"degree", r.witness->degree},
                          {"subset_a", r.witness->subset_a},
                          {"subset_b", r.witness->subset_b}};
  }
  return out;
}

json upp_bound_to_json(const UppBoundReport& r) {
  return json{{"pass", r.pass}, {"i", r.i},         {"j", r.j},
              {"h_i", r.h_i},   {"h_j", r.h_j},     {"h_sum", r.h_sum},
              {"bound", r.bound}, {"set_size", r.set_size}};
}

json min_formula_to_json(const MinFormulaReport& r) {
  json out{{"uniform", r.uniform},
           {"min_formula_holds", r.min_formula_holds},
           {"equivalent", r.equivalent}};
  if (r.witness) {
    out["witness"] = json{{"subset", r.witness->subset},
                          {"degree", r.witness->degree},
                          {"actual", r.witness->actual},
                          {"expected", r.witness->expected}};
  }
  return out;
}

}  // namespace ehrspan
