#include "gw/green.hpp"

#include <algorithm>

#include "gw/error.hpp"

namespace gw {

namespace {

// Re-expresses a subgroup of the context's top group inside an enumerated
// copy of one of its subgroups; every member must lie in that copy.
Subgroup transport_into(const Subgroup& s, const GroupPtr& sub_g) {
  const auto& parent = s.parent();
  auto emb = embedding_positions(sub_g, parent);
  std::vector<std::int64_t> back(parent->order(), -1);
  for (std::uint32_t i = 0; i < emb.size(); ++i)
    back[emb[i]] = static_cast<std::int64_t>(i);
  std::vector<std::uint32_t> members;
  members.reserve(s.members().size());
  for (std::uint32_t pos : s.members()) {
    require(back[pos] >= 0, "subgroup does not lie inside the intermediate subgroup");
    members.push_back(static_cast<std::uint32_t>(back[pos]));
  }
  std::sort(members.begin(), members.end());
  return Subgroup::from_members(sub_g, members);
}

// Vertex of an indecomposable factor, expressed in the context's top group.
Subgroup vertex_in_top(const GreenContext& ctx, const GModule& factor) {
  auto vr = vertex_and_source(factor);
  if (factor.group() == ctx.g) return vr.vertex;
  return push_subgroup(vr.vertex, ctx.g);
}

struct Classified {
  GModule correspondent;
  bool found_correspondent = false;
  std::size_t correspondent_count = 0;
  std::vector<ClassifiedFactor> others;
};

Classified classify_factors(const GreenContext& ctx, const Decomposition& dec,
                            const SubgroupFamily& family, const char* side) {
  Classified out{GModule::zero(ctx.g, ctx.p), false, 0, {}};
  for (const auto& cls : dec.factors) {
    Subgroup v = vertex_in_top(ctx, cls.representative);
    bool corr = is_conjugate(v, ctx.d);
    if (corr) {
      out.correspondent = cls.representative;
      out.found_correspondent = true;
      out.correspondent_count += cls.multiplicity;
    } else {
      bool in_family = family.contains(v);
      if (!in_family)
        throw consistency_error(
            std::string("non-correspondent factor of the ") + side +
            " has vertex of order " + std::to_string(v.order()) +
            " outside the prescribed family");
      for (std::size_t rep = 0; rep < cls.multiplicity; ++rep)
        out.others.push_back({cls.representative, v, false, in_family});
    }
  }
  if (out.correspondent_count != 1)
    throw consistency_error(
        std::string("expected exactly one vertex-matching factor of the ") +
        side + ", found " + std::to_string(out.correspondent_count));
  return out;
}

void collect_vertex_d_factors(const GreenContext& ctx, const GModule& induced,
                              std::vector<GModule>& list) {
  auto dec = decompose(induced);
  for (const auto& cls : dec.factors) {
    Subgroup v = vertex_in_top(ctx, cls.representative);
    if (!is_conjugate(v, ctx.d)) continue;
    bool seen = false;
    for (const auto& known : list)
      if (is_isomorphic(known, cls.representative)) {
        seen = true;
        break;
      }
    if (!seen) list.push_back(cls.representative);
  }
}

} // namespace

GreenContext make_green_context(const GroupPtr& g, u64 p, const Subgroup& d,
                                const Subgroup& h) {
  require(is_prime(p), "characteristic must be prime");
  require(d.parent() == g && h.parent() == g,
          "subgroups must live in the given group");
  u64 dorder = d.order();
  while (dorder % p == 0) dorder /= p;
  require(dorder == 1, "vertex group must be a p-group");
  require(h.contains_subgroup(d), "intermediate subgroup must contain the vertex group");
  require(h.contains_subgroup(normalizer(d)),
          "intermediate subgroup must contain the normalizer of the vertex group");

  SubgroupFamily xf = family_x(h, d);
  SubgroupFamily yf = family_y(h, d);
  for (const auto& x : xf.members)
    ensure(yf.contains(x), "intersection families are not nested");
  GroupPtr hg = as_group(h);
  GroupPtr dg = as_group(d);
  Subgroup d_in_h = transport_into(d, hg);
  std::vector<Subgroup> y_in_h;
  for (const auto& y : yf.members) y_in_h.push_back(transport_into(y, hg));
  return GreenContext{g,  p,  d,  h, std::move(xf), std::move(yf), std::move(hg),
                      std::move(dg), std::move(d_in_h), std::move(y_in_h)};
}

CorrespondenceReport green_f(const GreenContext& ctx, const GModule& m) {
  require(m.group() == ctx.g || same_group(m.group(), ctx.g),
          "module must live over the context's group");
  auto vm = vertex_and_source(m);
  require(is_conjugate(vm.vertex, ctx.d),
          "input vertex is not conjugate to the context's vertex group");

  auto dec = decompose(restrict_module(m, ctx.h_group));
  auto cls = classify_factors(ctx, dec, ctx.y_family, "restriction");
  return CorrespondenceReport{true, m, cls.correspondent, std::move(cls.others)};
}

CorrespondenceReport green_g(const GreenContext& ctx, const GModule& n) {
  require(n.group() == ctx.h_group || same_group(n.group(), ctx.h_group),
          "module must live over the context's intermediate group");
  auto vn = vertex_and_source(n);
  Subgroup v = ctx.h_group == ctx.g ? vn.vertex : push_subgroup(vn.vertex, ctx.g);
  require(is_conjugate(v, ctx.d),
          "input vertex is not conjugate to the context's vertex group");

  auto ind = induce_from(n, ctx.h);
  auto dec = decompose(ind.module);
  auto cls = classify_factors(ctx, dec, ctx.x_family, "induction");
  return CorrespondenceReport{false, n, cls.correspondent, std::move(cls.others)};
}

RoundtripReport verify_roundtrip(const GreenContext& ctx, const GModule& m,
                                 const GModule& n) {
  auto fm = green_f(ctx, m);
  auto gfm = green_g(ctx, fm.correspondent);
  bool g_after_f = is_isomorphic(gfm.correspondent, m);

  auto gn = green_g(ctx, n);
  auto fgn = green_f(ctx, gn.correspondent);
  bool f_after_g = is_isomorphic(fgn.correspondent, n);

  if (!g_after_f || !f_after_g)
    throw consistency_error("correspondence roundtrip is not the identity");
  return RoundtripReport{g_after_f, f_after_g};
}

VertexDLists enumerate_vertex_d_modules(const GreenContext& ctx) {
  require(ctx.d.order() == ctx.p,
          "enumeration implemented for vertex groups of prime order");
  VertexDLists out;
  auto d_in_h_group = as_group(ctx.d_in_h);
  for (std::size_t size = 1; size <= ctx.p; ++size) {
    auto lg = GModule::jordan(ctx.d_group, ctx.p, size);
    collect_vertex_d_factors(ctx, induce_from(lg, ctx.d).module, out.over_g);
    auto lh = GModule::jordan(d_in_h_group, ctx.p, size);
    collect_vertex_d_factors(ctx, induce_from(lh, ctx.d_in_h).module, out.over_h);
  }
  std::sort(out.over_g.begin(), out.over_g.end(), module_lex_less);
  std::sort(out.over_h.begin(), out.over_h.end(), module_lex_less);
  return out;
}

BijectionReport verify_bijection(const GreenContext& ctx) {
  BijectionReport rep;
  rep.lists = enumerate_vertex_d_modules(ctx);
  const auto& lg = rep.lists.over_g;
  const auto& lh = rep.lists.over_h;
  if (lg.size() != lh.size())
    throw consistency_error("vertex-module counts differ: " +
                            std::to_string(lg.size()) + " vs " +
                            std::to_string(lh.size()));

  std::vector<char> used(lh.size(), 0);
  for (const auto& m : lg) {
    auto fm = green_f(ctx, m).correspondent;
    std::size_t match = lh.size();
    for (std::size_t j = 0; j < lh.size(); ++j)
      if (!used[j] && is_isomorphic(fm, lh[j])) {
        match = j;
        break;
      }
    if (match == lh.size())
      throw consistency_error("correspondent of an enumerated module is missing "
                              "from the other side");
    used[match] = 1;
    rep.forward.push_back(match);
  }

  for (std::size_t j = 0; j < lh.size(); ++j) {
    auto gn = green_g(ctx, lh[j]).correspondent;
    std::size_t match = lg.size();
    for (std::size_t i = 0; i < lg.size(); ++i)
      if (is_isomorphic(gn, lg[i])) {
        match = i;
        break;
      }
    if (match == lg.size() || rep.forward[match] != j)
      throw consistency_error("reverse correspondence does not invert the bijection");
  }

  for (std::size_t i = 0; i < lg.size(); ++i)
    for (std::size_t j = 0; j < lg.size(); ++j) {
      auto left = quotient_hom(restrict_module(lg[i], ctx.h_group),
                               restrict_module(lg[j], ctx.h_group), ctx.y_in_h);
      auto right = quotient_hom(lh[rep.forward[i]], lh[rep.forward[j]], ctx.y_in_h);
      if (left.quotient_dim != right.quotient_dim)
        throw consistency_error(
            "stable-hom dimensions disagree across the correspondence: " +
            std::to_string(left.quotient_dim) + " vs " +
            std::to_string(right.quotient_dim));
    }
  rep.hom_dims_match = true;
  return rep;
}

HigmanReport adjoint_higman_check(const GModule& m, const Subgroup& h) {
  HigmanReport rep;
  rep.trace_route = relative_projectivity(m, h).projective;

  auto resm = restrict_module(m, as_group(h));
  auto ind = induce_from(resm, h);
  rep.summand_of_ind_res = is_direct_summand(m, ind.module);
  rep.counit_splits = is_split(counit_sequence(ind, m));

  rep.summand_of_some_induced = rep.summand_of_ind_res;
  if (!rep.summand_of_some_induced && m.dim() > 0)
    for (const auto& cls : decompose(resm).factors)
      if (is_direct_summand(m, induce_from(cls.representative, h).module)) {
        rep.summand_of_some_induced = true;
        break;
      }

  rep.all_agree = rep.trace_route == rep.summand_of_ind_res &&
                  rep.trace_route == rep.summand_of_some_induced &&
                  rep.trace_route == rep.counit_splits;
  if (!rep.all_agree)
    throw consistency_error(
        "projectivity characterizations disagree: trace=" +
        std::to_string(rep.trace_route) +
        " ind-res=" + std::to_string(rep.summand_of_ind_res) +
        " some-ind=" + std::to_string(rep.summand_of_some_induced) +
        " counit=" + std::to_string(rep.counit_splits));
  return rep;
}

AkReport check_ak_condition(const GreenContext& ctx) {
  AkReport rep;
  rep.dimension_cap = 2 * ctx.g->order();
  rep.ts_hypothesis = true;
  auto d_in_h_group = as_group(ctx.d_in_h);

  for (const auto& y : ctx.y_in_h) {
    auto ygrp = as_group(y);
    // Generating indecomposables over y: factors of the small tensor powers
    // of the regular module (the zeroth power contributes the trivial one).
    std::vector<GModule> vgens;
    GModule reg = GModule::regular(ygrp, ctx.p);
    GModule power = GModule::trivial(ygrp, ctx.p);
    for (int t = 0; t <= 2; ++t) {
      if (power.dim() <= rep.dimension_cap)
        for (const auto& cls : decompose(power).factors) {
          bool seen = false;
          for (const auto& known : vgens)
            if (is_isomorphic(known, cls.representative)) {
              seen = true;
              break;
            }
          if (!seen) vgens.push_back(cls.representative);
        }
      if (t < 2) power = tensor(power, reg);
    }

    for (const auto& v : vgens) {
      auto w = induce_from(v, y).module; // over h_group
      if (w.dim() > rep.dimension_cap) continue;
      auto resd = restrict_module(w, d_in_h_group);
      auto a_full = induce_from(resd, ctx.d_in_h).module;
      if (a_full.dim() > rep.dimension_cap) continue;

      for (const auto& acls : decompose(a_full).factors) {
        const GModule& a = acls.representative;
        ++rep.generators_checked;
        auto inda = induce_from(a, ctx.h);
        if (!ts_decomposition_check(inda)) rep.ts_hypothesis = false;
        auto back = restrict_module(inda.module, ctx.h_group);
        for (const auto& fcls : decompose(back).factors) {
          ++rep.factors_checked;
          Subgroup v_top = vertex_in_top(ctx, fcls.representative);
          if (!ctx.y_family.contains(v_top))
            rep.violations.push_back({a, fcls.representative, v_top});
        }
      }
    }
  }
  return rep;
}

} // namespace gw
