#include "gw/json_io.hpp"

#include "gw/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gw {
namespace {

const Json& get_field(const Json& j, const char* key, const char* ctx) {
  require(j.is_object(), std::string(ctx) + ": expected a JSON object");
  auto it = j.find(key);
  require(it != j.end(), std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

u64 get_uint(const Json& j, const char* key, const char* ctx) {
  const Json& v = get_field(j, key, ctx);
  require(v.is_number_integer() && v.get<i64>() >= 0,
          std::string(ctx) + ": field '" + key + "' must be a nonnegative integer");
  return v.get<u64>();
}

std::vector<Perm> perms_from_json(const Json& gens, std::size_t degree, const char* ctx) {
  require(gens.is_array(), std::string(ctx) + ": field 'generators' must be an array");
  std::vector<Perm> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Json& lst = gens[i];
    require(lst.is_array() && lst.size() == degree,
            std::string(ctx) + ": field 'generators' entry " + std::to_string(i) +
                " must list " + std::to_string(degree) + " images");
    Perm p;
    p.img.reserve(degree);
    std::vector<bool> seen(degree, false);
    for (const Json& v : lst) {
      require(v.is_number_integer() && v.get<i64>() >= 0 &&
                  v.get<u64>() < degree && !seen[v.get<std::size_t>()],
              std::string(ctx) + ": field 'generators' entry " + std::to_string(i) +
                  " is not a permutation of 0.." + std::to_string(degree - 1));
      seen[v.get<std::size_t>()] = true;
      p.img.push_back(v.get<std::uint32_t>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json perm_images(const Perm& p) {
  Json lst = Json::array();
  for (std::uint32_t x : p.img) lst.push_back(x);
  return lst;
}

// Multiset of element orders, the cheap isomorphism invariant used to match a
// subgroup against the preset catalogue.
std::map<u64, std::size_t> order_profile_of_subgroup(const Subgroup& s) {
  std::map<u64, std::size_t> prof;
  for (std::uint32_t pos : s.members()) ++prof[s.parent()->element_order(pos)];
  return prof;
}

std::map<u64, std::size_t> order_profile_of_group(const PermGroup& g) {
  std::map<u64, std::size_t> prof;
  for (std::size_t i = 0; i < g.order(); ++i)
    ++prof[g.element_order(static_cast<std::uint32_t>(i))];
  return prof;
}

Json module_summary(const GModule& m) {
  Json j = Json::object();
  j["group"] = group_ref_to_json(m.group());
  j["p"] = m.p();
  j["dim"] = m.dim();
  return j;
}

} // namespace

Json matrix_to_json(const FpMatrix& m) {
  Json j = Json::object();
  j["p"] = m.p();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

FpMatrix matrix_from_json(const Json& j) {
  const char* ctx = "matrix";
  u64 p = get_uint(j, "p", ctx);
  u64 rows = get_uint(j, "rows", ctx);
  u64 cols = get_uint(j, "cols", ctx);
  FpMatrix m(p, rows, cols);
  const Json& entries = get_field(j, "entries", ctx);
  require(entries.is_array() && entries.size() == rows,
          std::string(ctx) + ": field 'entries' must hold " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    require(row.is_array() && row.size() == cols,
            std::string(ctx) + ": field 'entries' row " + std::to_string(i) + " must hold " +
                std::to_string(cols) + " values");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& v = row[k];
      require(v.is_number_integer() && v.get<i64>() >= 0 && v.get<u64>() < p,
              std::string(ctx) + ": field 'entries' value at (" + std::to_string(i) + "," +
                  std::to_string(k) + ") must lie in [0," + std::to_string(p) + ")");
      m.set(i, k, static_cast<i64>(v.get<u64>()));
    }
  }
  return m;
}

Json group_to_json(const PermGroup& g) {
  Json j = Json::object();
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_images(p));
  j["generators"] = std::move(gens);
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return PermGroup::preset(j.get<std::string>());
  const char* ctx = "group";
  u64 degree = get_uint(j, "degree", ctx);
  require(degree >= 1, std::string(ctx) + ": field 'degree' must be positive");
  std::vector<Perm> gens = perms_from_json(get_field(j, "generators", ctx), degree, ctx);
  std::string name;
  if (j.contains("name")) {
    require(j["name"].is_string(), std::string(ctx) + ": field 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  return PermGroup::from_generators(degree, std::move(gens), 100000, std::move(name));
}

Json group_ref_to_json(const GroupPtr& g) {
  const std::string& name = g->name();
  if (!name.empty()) {
    auto presets = PermGroup::preset_names();
    if (std::find(presets.begin(), presets.end(), name) != presets.end() &&
        same_group(PermGroup::preset(name), g))
      return Json(name);
  }
  return group_to_json(*g);
}

Json module_to_json(const GModule& m) {
  Json j = Json::object();
  j["group"] = group_ref_to_json(m.group());
  j["p"] = m.p();
  j["dim"] = m.dim();
  Json gens = Json::array();
  for (const FpMatrix& mat : m.generator_matrices()) gens.push_back(matrix_to_json(mat));
  j["generators"] = std::move(gens);
  return j;
}

GModule module_from_json(const Json& j) {
  const char* ctx = "module";
  GroupPtr g = group_from_json(get_field(j, "group", ctx));
  u64 p = get_uint(j, "p", ctx);
  u64 dim = get_uint(j, "dim", ctx);
  const Json& gens = get_field(j, "generators", ctx);
  require(gens.is_array() && gens.size() == g->generators().size(),
          std::string(ctx) + ": field 'generators' must hold " +
              std::to_string(g->generators().size()) + " matrices, one per group generator");
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    FpMatrix m = matrix_from_json(gens[i]);
    require(m.p() == p && m.rows() == dim && m.cols() == dim,
            std::string(ctx) + ": field 'generators' matrix " + std::to_string(i) +
                " must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                " over GF(" + std::to_string(p) + ")");
    mats.push_back(std::move(m));
  }
  return GModule(std::move(g), p, dim, std::move(mats));
}

Json induced_to_json(const InducedModule& ind) {
  Json j = module_to_json(ind.module);
  Json from = Json::object();
  from["order"] = ind.from.order();
  from["structure"] = structure_name(ind.from);
  Json gens = Json::array();
  for (const Perm& p : ind.from.generator_perms()) gens.push_back(perm_images(p));
  from["generators"] = std::move(gens);
  from["source_dim"] = ind.source.dim();
  j["induced_from"] = std::move(from);
  return j;
}

Json subgroup_to_json(const Subgroup& s) {
  Json j = Json::object();
  j["order"] = s.order();
  j["structure"] = structure_name(s);
  Json gens = Json::array();
  for (const Perm& p : s.generator_perms()) gens.push_back(perm_images(p));
  j["generators"] = std::move(gens);
  return j;
}

std::string structure_name(const Subgroup& s) {
  std::size_t n = s.order();
  if (n == 1) return "trivial";
  for (std::uint32_t pos : s.members())
    if (s.parent()->element_order(pos) == n) return "C" + std::to_string(n);
  if (n == 4) return "V4";
  auto prof = order_profile_of_subgroup(s);
  for (const std::string& name : PermGroup::preset_names()) {
    GroupPtr g = PermGroup::preset(name);
    if (g->order() == n && order_profile_of_group(*g) == prof) return name;
  }
  return "G" + std::to_string(n);
}

Json decomposition_to_json(const Decomposition& d, bool with_certificates) {
  Json j = Json::object();
  j["group"] = group_ref_to_json(d.original.group());
  j["p"] = d.original.p();
  j["dim"] = d.original.dim();
  Json factors = Json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const IsoClass& c = d.factors[i];
    Json f = Json::object();
    f["label"] = "F" + std::to_string(i);
    f["dim"] = c.representative.dim();
    f["multiplicity"] = c.multiplicity;
    f["module"] = module_to_json(c.representative);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  if (with_certificates) {
    Json summands = Json::array();
    for (const SummandPiece& s : d.summands) {
      Json piece = Json::object();
      piece["dim"] = s.module.dim();
      piece["injection"] = matrix_to_json(s.injection);
      piece["projection"] = matrix_to_json(s.projection);
      summands.push_back(std::move(piece));
    }
    j["summands"] = std::move(summands);
  }
  return j;
}

Json vertex_to_json(const VertexResult& v) {
  Json j = Json::object();
  j["module"] = module_summary(v.module);
  j["vertex"] = subgroup_to_json(v.vertex);
  j["vertex_class_size"] = v.vertex_class.size();
  j["source"] = module_to_json(v.source);
  return j;
}

Json quotient_hom_to_json(const QuotientHomSpace& q) {
  Json j = Json::object();
  j["source_dim"] = q.source.dim();
  j["target_dim"] = q.target.dim();
  j["hom_dim"] = q.full_dim;
  j["ideal_dim"] = q.ideal_dim;
  j["quotient_dim"] = q.quotient_dim;
  return j;
}

Json correspondence_to_json(const CorrespondenceReport& r) {
  Json j = Json::object();
  j["direction"] = r.restriction_side ? "restriction" : "induction";
  j["input"] = module_summary(r.input);
  j["correspondent"] = module_to_json(r.correspondent);
  Json others = Json::array();
  for (const ClassifiedFactor& f : r.other_factors) {
    Json o = Json::object();
    o["dim"] = f.module.dim();
    o["vertex"] = subgroup_to_json(f.vertex);
    o["vertex_in_family"] = f.vertex_in_family;
    others.push_back(std::move(o));
  }
  j["other_factors"] = std::move(others);
  return j;
}

Json bijection_to_json(const BijectionReport& r) {
  Json j = Json::object();
  j["classes_over_g"] = r.lists.over_g.size();
  j["classes_over_h"] = r.lists.over_h.size();
  Json dg = Json::array();
  for (const GModule& m : r.lists.over_g) dg.push_back(m.dim());
  j["dims_over_g"] = std::move(dg);
  Json dh = Json::array();
  for (const GModule& m : r.lists.over_h) dh.push_back(m.dim());
  j["dims_over_h"] = std::move(dh);
  Json fwd = Json::array();
  for (std::size_t i : r.forward) fwd.push_back(i);
  j["forward"] = std::move(fwd);
  j["hom_dims_match"] = r.hom_dims_match;
  return j;
}

Json higman_to_json(const HigmanReport& r) {
  Json j = Json::object();
  j["trace_route"] = r.trace_route;
  j["summand_of_ind_res"] = r.summand_of_ind_res;
  j["summand_of_some_induced"] = r.summand_of_some_induced;
  j["counit_splits"] = r.counit_splits;
  j["all_agree"] = r.all_agree;
  return j;
}

Json ak_to_json(const AkReport& r) {
  Json j = Json::object();
  j["generators_checked"] = r.generators_checked;
  j["factors_checked"] = r.factors_checked;
  j["dimension_cap"] = r.dimension_cap;
  j["ts_hypothesis"] = r.ts_hypothesis;
  Json viol = Json::array();
  for (const AkViolation& v : r.violations) {
    Json o = Json::object();
    o["generator_dim"] = v.generator.dim();
    o["factor_dim"] = v.factor.dim();
    o["vertex"] = subgroup_to_json(v.vertex);
    viol.push_back(std::move(o));
  }
  j["violations"] = std::move(viol);
  j["holds"] = r.holds();
  return j;
}

Json make_report(const std::string& command) {
  Json j = Json::object();
  j["schema"] = "green-workbench/1";
  j["command"] = command;
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    require(false, "failed to parse '" + path + "': " + e.what());
  }
  return Json(); // unreachable
}

} // namespace gw
