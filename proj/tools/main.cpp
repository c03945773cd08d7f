// green-workbench: command-line front end for the modular-representation
// toolkit.  Subcommands wrap the library operations; every report is exact
// integer data, printable as text or canonical JSON.
#include "CLI11.hpp"

#include "gw/catalog.hpp"
#include "gw/decompose.hpp"
#include "gw/error.hpp"
#include "gw/functors.hpp"
#include "gw/green.hpp"
#include "gw/json_io.hpp"
#include "gw/relproj.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace gw;

namespace {

struct Options {
  std::string group;
  std::string module_spec = "trivial";
  std::string target_spec;
  std::vector<std::string> subgroup_gens;
  std::vector<std::string> vertex_gens;
  std::string out;
  std::string catalog_spec;
  u64 p = 2;
  bool json = false;
  u64 seed = 0x9e3779b97f4a7c15ull;
  u64 max_group_order = 1000;
  u64 max_dim = 4096;
};

GroupPtr load_group(const Options& o) {
  require(!o.group.empty(), "--group is required for this command");
  auto presets = PermGroup::preset_names();
  if (std::find(presets.begin(), presets.end(), o.group) != presets.end()) {
    GroupPtr g = PermGroup::preset(o.group);
    require(g->order() <= o.max_group_order, "group order exceeds --max-group-order");
    return g;
  }
  require(std::filesystem::exists(o.group),
          "--group '" + o.group + "' is neither a preset name nor an existing file");
  GroupPtr g = group_from_json(load_json_file(o.group));
  require(g->order() <= o.max_group_order, "group order exceeds --max-group-order");
  return g;
}

// Subgroup from cycle-notation generator strings, with a few keywords.
Subgroup parse_subgroup(const GroupPtr& g, const std::vector<std::string>& gens, u64 p) {
  require(!gens.empty(), "no subgroup generators given");
  if (gens.size() == 1) {
    if (gens[0] == "trivial") return Subgroup::trivial(g);
    if (gens[0] == "whole") return Subgroup::whole(g);
    if (gens[0] == "sylow") return sylow_subgroup(g, p);
  }
  std::vector<Perm> perms;
  for (const std::string& text : gens) perms.push_back(perm_from_cycles(g->degree(), text));
  return Subgroup::generated_by(g, perms);
}

GModule preset_module(const std::string& name, const GroupPtr& g, u64 p) {
  if (name == "trivial" || name == "k") return GModule::trivial(g, p);
  if (name == "regular" || name == "reg") return GModule::regular(g, p);
  if (name == "permutation" || name == "perm") return GModule::permutation(g, p);
  if (name == "sign") return GModule::sign(g, p);
  if (name.size() > 1 && name[0] == 'J') {
    std::size_t size = std::stoul(name.substr(1));
    return GModule::jordan(g, p, size);
  }
  require(false, "unknown module preset '" + name +
                     "' (use trivial, regular, permutation, sign, J<k>, or a file path)");
  return GModule::zero(g, p); // unreachable
}

// Module from a preset name (over the supplied group) or from a JSON file,
// in which case the file's group must describe the same group.
GModule load_module(const std::string& spec, const GroupPtr& g, const Options& o) {
  bool looks_like_path =
      spec.find('/') != std::string::npos || spec.ends_with(".json");
  require(!looks_like_path || std::filesystem::exists(spec),
          "module file '" + spec + "' does not exist");
  GModule m = [&] {
    if (std::filesystem::exists(spec)) {
      GModule parsed = module_from_json(load_json_file(spec));
      require(same_group(parsed.group(), g),
              "module file '" + spec + "' is defined over a different group");
      require(parsed.p() == o.p, "module file '" + spec + "' uses a different prime");
      return parsed;
    }
    return preset_module(spec, g, o.p);
  }();
  require(m.dim() <= o.max_dim, "module dimension exceeds --max-dim");
  return m;
}

GreenContext context_from_options(const Options& o, const GroupPtr& g) {
  Subgroup d = o.vertex_gens.empty() ? sylow_subgroup(g, o.p)
                                     : parse_subgroup(g, o.vertex_gens, o.p);
  Subgroup h = o.subgroup_gens.empty() ? normalizer(d) : parse_subgroup(g, o.subgroup_gens, o.p);
  return make_green_context(g, o.p, d, h);
}

int emit(Json report, const Options& o, const std::string& text) {
  std::string payload = dump_report(report);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    require(f.good(), "cannot open --out file '" + o.out + "'");
    f << payload;
    return 0;
  }
  if (o.json)
    std::cout << payload;
  else
    std::cout << text << "\n";
  return 0;
}

std::string describe_factors(const Decomposition& dec) {
  std::ostringstream s;
  s << "dim " << dec.original.dim() << " = ";
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    if (i) s << " + ";
    s << dec.factors[i].multiplicity << " x (dim " << dec.factors[i].representative.dim() << ")";
  }
  if (dec.factors.empty()) s << "0";
  return s.str();
}

int cmd_decompose(const Options& o) {
  GroupPtr g = load_group(o);
  GModule m = load_module(o.module_spec, g, o);
  Decomposition dec = decompose(m, o.seed);
  Json report = make_report("decompose");
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["seed"] = o.seed;
  report["result"] = decomposition_to_json(dec, true);
  std::ostringstream text;
  text << describe_factors(dec);
  for (std::size_t i = 0; i < dec.factors.size(); ++i)
    text << "\n  F" << i << ": dim " << dec.factors[i].representative.dim() << ", multiplicity "
         << dec.factors[i].multiplicity;
  return emit(report, o, text.str());
}

int cmd_vertex(const Options& o) {
  GroupPtr g = load_group(o);
  GModule m = load_module(o.module_spec, g, o);
  VertexResult v = vertex_and_source(m);
  Json report = make_report("vertex");
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["result"] = vertex_to_json(v);
  std::ostringstream text;
  text << "vertex: " << structure_name(v.vertex) << " (order " << v.vertex.order()
       << ", conjugacy class of size " << v.vertex_class.size() << ")\n"
       << "source: dim " << v.source.dim();
  return emit(report, o, text.str());
}

int cmd_green(const Options& o, bool restriction_side) {
  GroupPtr g = load_group(o);
  GreenContext ctx = context_from_options(o, g);
  const char* name = restriction_side ? "green-f" : "green-g";
  GModule m = restriction_side ? load_module(o.module_spec, ctx.g, o)
                               : load_module(o.module_spec, ctx.h_group, o);
  CorrespondenceReport rep = restriction_side ? green_f(ctx, m) : green_g(ctx, m);
  Json report = make_report(name);
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["vertex_group"] = subgroup_to_json(ctx.d);
  report["intermediate"] = subgroup_to_json(ctx.h);
  report["result"] = correspondence_to_json(rep);
  std::ostringstream text;
  text << "input: dim " << m.dim() << " over " << (restriction_side ? "G" : "H")
       << "\ncorrespondent: dim " << rep.correspondent.dim() << " over "
       << (restriction_side ? "H" : "G") << "\nother factors: " << rep.other_factors.size()
       << " (every vertex inside the prescribed family)";
  return emit(report, o, text.str());
}

int cmd_verify_green(const Options& o) {
  Json report = make_report("verify-green");
  std::ostringstream text;
  bool default_catalog = o.catalog_spec == "default" || (o.group.empty() && !o.catalog_spec.empty());
  if (default_catalog) {
    // Default contexts: (S3, p=2, D=H=C2) and (A5, p=5, D=C5, H=D10), plus the
    // (S4, p=2, D=H=D8) discipline probe on the trivial module.
    Json contexts = Json::array();
    auto run_ctx = [&](const char* gname, u64 p) {
      GroupPtr g = PermGroup::preset(gname);
      Subgroup d = sylow_subgroup(g, p);
      GreenContext ctx = make_green_context(g, p, d, normalizer(d));
      BijectionReport bij = verify_bijection(ctx);
      for (std::size_t i = 0; i < bij.lists.over_g.size(); ++i) {
        RoundtripReport rt =
            verify_roundtrip(ctx, bij.lists.over_g[i], bij.lists.over_h[bij.forward[i]]);
        ensure(rt.g_after_f && rt.f_after_g, "green roundtrip failed");
      }
      Json cj = Json::object();
      cj["group"] = gname;
      cj["p"] = p;
      cj["bijection"] = bijection_to_json(bij);
      cj["roundtrips"] = bij.lists.over_g.size();
      contexts.push_back(std::move(cj));
      text << "(" << gname << ", p=" << p << "): " << bij.lists.over_g.size()
           << " vertex classes per side, bijection and roundtrips verified\n";
    };
    run_ctx("S3", 2);
    run_ctx("A5", 5);
    GroupPtr s4 = PermGroup::preset("S4");
    Subgroup d8 = sylow_subgroup(s4, 2);
    GreenContext ctx = make_green_context(s4, 2, d8, d8);
    CorrespondenceReport rep = green_f(ctx, GModule::trivial(s4, 2));
    Json cj = Json::object();
    cj["group"] = "S4";
    cj["p"] = 2;
    cj["trivial_module"] = correspondence_to_json(rep);
    contexts.push_back(std::move(cj));
    text << "(S4, p=2): trivial-module correspondent dim " << rep.correspondent.dim()
         << ", factor discipline verified\n";
    report["contexts"] = std::move(contexts);
    text << "all contexts pass";
  } else {
    GroupPtr g = load_group(o);
    GreenContext ctx = context_from_options(o, g);
    BijectionReport bij = verify_bijection(ctx);
    std::size_t trips = 0;
    for (std::size_t i = 0; i < bij.lists.over_g.size(); ++i) {
      RoundtripReport rt =
          verify_roundtrip(ctx, bij.lists.over_g[i], bij.lists.over_h[bij.forward[i]]);
      ensure(rt.g_after_f && rt.f_after_g, "green roundtrip failed");
      ++trips;
    }
    report["bijection"] = bijection_to_json(bij);
    report["roundtrips"] = trips;
    text << bij.lists.over_g.size() << " vertex classes per side; bijection, stable-hom "
         << "dimensions, and " << trips << " roundtrips verified";
  }
  return emit(report, o, text.str());
}

int cmd_stable_hom(const Options& o) {
  GroupPtr g = load_group(o);
  GModule m = load_module(o.module_spec, g, o);
  GModule n = o.target_spec.empty() ? m : load_module(o.target_spec, g, o);
  Subgroup h = o.subgroup_gens.empty() ? Subgroup::trivial(g)
                                       : parse_subgroup(g, o.subgroup_gens, o.p);
  QuotientHomSpace q = quotient_hom(m, n, {h});
  Json report = make_report("stable-hom");
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["relative_to"] = subgroup_to_json(h);
  report["result"] = quotient_hom_to_json(q);
  std::ostringstream text;
  text << "hom dim " << q.full_dim << ", ideal dim " << q.ideal_dim << ", stable hom dim "
       << q.quotient_dim;
  return emit(report, o, text.str());
}

int cmd_mackey_check(const Options& o) {
  GroupPtr g = load_group(o);
  Subgroup k = o.vertex_gens.empty() ? sylow_subgroup(g, o.p)
                                     : parse_subgroup(g, o.vertex_gens, o.p);
  Subgroup h = o.subgroup_gens.empty() ? sylow_subgroup(g, o.p)
                                       : parse_subgroup(g, o.subgroup_gens, o.p);
  GModule n = load_module(o.module_spec, as_group(k), o);
  InducedModule ind = induce_from(n, k);
  MackeyDecomposition mk = mackey_decomposition(ind, h);
  Json report = make_report("mackey-check");
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["induce_from"] = subgroup_to_json(k);
  report["restrict_to"] = subgroup_to_json(h);
  Json pieces = Json::array();
  for (const MackeyPiece& piece : mk.pieces) {
    Json pj = Json::object();
    pj["intersection_order"] = piece.intersection.order();
    pj["dim"] = piece.induced.module.dim();
    pieces.push_back(std::move(pj));
  }
  report["pieces"] = std::move(pieces);
  report["restricted_dim"] = mk.restricted.dim();
  std::ostringstream text;
  text << "res_" << structure_name(h) << " ind_" << structure_name(k) << " (dim " << n.dim()
       << " source): " << mk.pieces.size()
       << " double-coset pieces, verified isomorphic to the restriction";
  return emit(report, o, text.str());
}

int cmd_ak_check(const Options& o) {
  GroupPtr g = load_group(o);
  GreenContext ctx = context_from_options(o, g);
  AkReport ak = check_ak_condition(ctx);
  Json report = make_report("ak-check");
  report["group"] = group_ref_to_json(g);
  report["p"] = o.p;
  report["vertex_group"] = subgroup_to_json(ctx.d);
  report["intermediate"] = subgroup_to_json(ctx.h);
  report["result"] = ak_to_json(ak);
  std::ostringstream text;
  text << ak.generators_checked << " generators, " << ak.factors_checked
       << " restriction factors checked; condition " << (ak.holds() ? "holds" : "FAILS");
  if (!ak.holds()) {
    emit(report, o, text.str());
    return 2;
  }
  return emit(report, o, text.str());
}

int cmd_catalog(const Options& o) {
  CatalogOptions copts;
  if (!o.catalog_spec.empty() && o.catalog_spec != "default") {
    Json spec = load_json_file(o.catalog_spec);
    require(spec.is_object(), "catalog file: expected a JSON object");
    std::filesystem::path base = std::filesystem::path(o.catalog_spec).parent_path();
    if (spec.contains("modules")) {
      require(spec["modules"].is_array(), "catalog file: field 'modules' must be an array");
      for (const Json& entry : spec["modules"]) {
        require(entry.is_string(), "catalog file: field 'modules' must list file paths");
        module_from_json(load_json_file((base / entry.get<std::string>()).string()));
      }
    }
    if (spec.contains("criteria")) {
      require(spec["criteria"].is_array(), "catalog file: field 'criteria' must be an array");
      for (const Json& entry : spec["criteria"]) {
        require(entry.is_number_integer(), "catalog file: field 'criteria' must list integers");
        copts.criteria.push_back(entry.get<int>());
      }
      if (copts.criteria.empty()) {
        Json report = make_report("catalog");
        report["criteria"] = Json::array();
        report["all_passed"] = true;
        return emit(report, o, "empty catalog: trivially pass");
      }
    }
  }
  std::vector<CriterionResult> results = run_catalog(copts);
  Json report = make_report("catalog");
  Json summary = catalog_to_json(results);
  report["criteria"] = summary["criteria"];
  report["all_passed"] = summary["all_passed"];
  std::ostringstream text;
  for (const CriterionResult& r : results) text << format_result_line(r) << "\n";
  text << (all_passed(results) ? "all criteria passed" : "some criteria FAILED");
  int rc = emit(report, o, text.str());
  if (rc != 0) return rc;
  return all_passed(results) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"green-workbench: exact modular representation theory toolkit"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--group", o.group, "group preset name or JSON file");
    cmd->add_option("--p", o.p, "prime characteristic");
    cmd->add_option("--module", o.module_spec,
                    "module preset (trivial, regular, permutation, sign, J<k>) or JSON file");
    cmd->add_option("--target", o.target_spec, "second module for binary operations");
    cmd->add_option("--subgroup", o.subgroup_gens,
                    "subgroup generators in cycle notation, or trivial/whole/sylow");
    cmd->add_option("--vertex-group", o.vertex_gens,
                    "vertex-candidate subgroup generators, or trivial/whole/sylow");
    cmd->add_option("--catalog", o.catalog_spec, "catalog name ('default') or JSON file");
    cmd->add_option("--out", o.out, "write the JSON report to this file");
    cmd->add_flag("--json", o.json, "print the JSON report to stdout");
    cmd->add_option("--seed", o.seed, "seed for the decomposition search");
    cmd->add_option("--max-group-order", o.max_group_order, "refuse larger groups");
    cmd->add_option("--max-dim", o.max_dim, "refuse larger modules");
  };

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "split a module into indecomposables");
  CLI::App* vertex_cmd = app.add_subcommand("vertex", "vertex and source of an indecomposable");
  CLI::App* green_f_cmd = app.add_subcommand("green-f", "Green correspondent via restriction");
  CLI::App* green_g_cmd = app.add_subcommand("green-g", "Green correspondent via induction");
  CLI::App* verify_cmd = app.add_subcommand("verify-green", "verify the correspondence bijection");
  CLI::App* stable_cmd = app.add_subcommand("stable-hom", "hom space modulo the trace ideal");
  CLI::App* mackey_cmd = app.add_subcommand("mackey-check", "double-coset decomposition check");
  CLI::App* ak_cmd = app.add_subcommand("ak-check", "adjoint-layer condition for a context");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "run the acceptance catalogue");
  for (CLI::App* cmd : {decompose_cmd, vertex_cmd, green_f_cmd, green_g_cmd, verify_cmd,
                        stable_cmd, mackey_cmd, ak_cmd, catalog_cmd})
    add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o);
    if (vertex_cmd->parsed()) return cmd_vertex(o);
    if (green_f_cmd->parsed()) return cmd_green(o, true);
    if (green_g_cmd->parsed()) return cmd_green(o, false);
    if (verify_cmd->parsed()) return cmd_verify_green(o);
    if (stable_cmd->parsed()) return cmd_stable_hom(o);
    if (mackey_cmd->parsed()) return cmd_mackey_check(o);
    if (ak_cmd->parsed()) return cmd_ak_check(o);
    if (catalog_cmd->parsed()) return cmd_catalog(o);
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
