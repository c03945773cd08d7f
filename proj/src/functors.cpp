#include "gw/functors.hpp"

#include <algorithm>

#include "gw/error.hpp"

namespace gw {

namespace {

// Position of each element of sub (by its own index) inside parent.
std::vector<std::uint32_t> sub_to_parent(const PermGroup& sub, const PermGroup& parent) {
  std::vector<std::uint32_t> map;
  map.reserve(sub.order());
  for (const Perm& q : sub.elements()) map.push_back(parent.position(q));
  return map;
}

// Inverse lookup: parent position -> index in sub, or -1.
std::vector<std::int64_t> parent_to_sub(const std::vector<std::uint32_t>& fwd,
                                        std::size_t parent_order) {
  std::vector<std::int64_t> back(parent_order, -1);
  for (std::size_t i = 0; i < fwd.size(); ++i) back[fwd[i]] = static_cast<std::int64_t>(i);
  return back;
}

// Which left coset of h each parent element belongs to, given the transversal.
std::vector<std::uint32_t> coset_index_table(const PermGroup& grp, const Subgroup& h,
                                             const std::vector<std::uint32_t>& reps) {
  std::vector<std::uint32_t> table(grp.order(), 0);
  std::vector<char> seen(grp.order(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::uint32_t m : h.members()) {
      const std::uint32_t x = grp.multiply(reps[i], m);
      ensure(!seen[x], "transversal does not partition the group");
      seen[x] = 1;
      table[x] = static_cast<std::uint32_t>(i);
    }
  }
  for (char s : seen) ensure(s, "transversal does not cover the group");
  return table;
}

void write_block(FpMatrix& dst, std::size_t r0, std::size_t c0, const FpMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      dst.set(r0 + r, c0 + c, static_cast<i64>(block.at(r, c)));
}

} // namespace

GModule restrict_module(const GModule& m, const GroupPtr& hgrp) {
  require(hgrp != nullptr, "restriction needs a subgroup");
  std::vector<FpMatrix> mats;
  mats.reserve(hgrp->generators().size());
  for (const Perm& gen : hgrp->generators())
    mats.push_back(m.action(m.group()->position(gen)));
  return GModule(hgrp, m.p(), m.dim(), std::move(mats));
}

InducedModule induce_from(const GModule& n, const Subgroup& h) {
  const GroupPtr& G = h.parent();
  const PermGroup& grp = *G;
  const GroupPtr& hgrp = n.group();
  require(hgrp->order() == h.order(), "source module lives over a group of the wrong order");
  const std::vector<std::uint32_t> fwd = sub_to_parent(*hgrp, grp);
  for (std::uint32_t pos : fwd)
    require(h.contains(pos), "source module group does not match the subgroup");
  const std::vector<std::int64_t> back = parent_to_sub(fwd, grp.order());

  const std::vector<std::uint32_t> reps = left_coset_reps(h);
  const std::vector<std::uint32_t> which = coset_index_table(grp, h, reps);
  const std::size_t t = reps.size(), dn = n.dim();

  std::vector<FpMatrix> mats;
  for (const Perm& gen : grp.generators()) {
    const std::uint32_t gp = grp.position(gen);
    FpMatrix mat(n.p(), t * dn, t * dn);
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint32_t x = grp.multiply(gp, reps[i]);
      const std::uint32_t ip = which[x];
      const std::uint32_t hpos = grp.multiply(grp.inverse_of(reps[ip]), x);
      const std::int64_t hsub = back[hpos];
      ensure(hsub >= 0, "coset arithmetic left the subgroup");
      write_block(mat, ip * dn, i * dn, n.action(static_cast<std::uint32_t>(hsub)));
    }
    mats.push_back(std::move(mat));
  }
  GModule mod(G, n.p(), t * dn, std::move(mats));
  return InducedModule{std::move(mod), h, hgrp, n, reps};
}

bool is_hom_over_subgroup(const Subgroup& h, const GModule& m, const GModule& n,
                          const FpMatrix& f) {
  require(compatible_modules(m, n), "hom needs modules over the same group");
  require(same_group(h.parent(), m.group()), "subgroup belongs to a different group");
  if (f.p() != m.p() || f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::uint32_t g : h.generator_positions())
    if (f * m.action(g) != n.action(g) * f) return false;
  return true;
}

FpMatrix adjoint_to_induced(const InducedModule& ind, const GModule& m,
                            const FpMatrix& phi) {
  require(compatible_modules(ind.module, m), "modules live over different groups");
  const std::size_t dn = ind.source.dim(), dm = m.dim(), t = ind.coset_reps.size();
  require(phi.rows() == dm && phi.cols() == dn && phi.p() == m.p(),
          "adjoint input has wrong shape");
  // phi must intertwine the H-actions on N and res M
  for (std::size_t j = 0; j < ind.from_group->generators().size(); ++j) {
    const std::uint32_t gpos = m.group()->position(ind.from_group->generators()[j]);
    require(phi * ind.source.generator_matrices()[j] == m.action(gpos) * phi,
            "adjoint input is not a homomorphism over the subgroup");
  }
  FpMatrix out(m.p(), dm, t * dn);
  for (std::size_t i = 0; i < t; ++i)
    write_block(out, 0, i * dn, m.action(ind.coset_reps[i]) * phi);
  ensure(is_module_hom(ind.module, m, out), "adjoint image is not a homomorphism");
  return out;
}

FpMatrix adjoint_from_induced(const InducedModule& ind, const GModule& m,
                              const FpMatrix& psi) {
  require(is_module_hom(ind.module, m, psi),
          "adjoint input is not a homomorphism from the induced module");
  FpMatrix out = psi.submatrix(0, 0, m.dim(), ind.source.dim());
  for (std::size_t j = 0; j < ind.from_group->generators().size(); ++j) {
    const std::uint32_t gpos = m.group()->position(ind.from_group->generators()[j]);
    ensure(out * ind.source.generator_matrices()[j] == m.action(gpos) * out,
           "adjoint image is not a homomorphism over the subgroup");
  }
  return out;
}

FpMatrix unit_map(const InducedModule& ind) {
  const std::size_t dn = ind.source.dim();
  FpMatrix u(ind.source.p(), ind.module.dim(), dn);
  for (std::size_t i = 0; i < dn; ++i) u.set(i, i, 1);
  return u;
}

FpMatrix counit_map(const InducedModule& ind, const GModule& m) {
  require(compatible_modules(ind.module, m), "modules live over different groups");
  require(equal_presentation(ind.source, restrict_module(m, ind.from_group)),
          "counit needs the induction of the restriction of m");
  const std::size_t dm = m.dim(), t = ind.coset_reps.size();
  FpMatrix out(m.p(), dm, t * dm);
  for (std::size_t i = 0; i < t; ++i)
    write_block(out, 0, i * dm, m.action(ind.coset_reps[i]));
  ensure(is_module_hom(ind.module, m, out), "counit is not a homomorphism");
  return out;
}

FpMatrix relative_trace(const Subgroup& h, const GModule& m, const GModule& n,
                        const FpMatrix& f) {
  require(is_hom_over_subgroup(h, m, n, f),
          "relative trace needs a homomorphism over the subgroup");
  const PermGroup& grp = *h.parent();
  FpMatrix out(m.p(), n.dim(), m.dim());
  for (std::uint32_t r : left_coset_reps(h))
    out = out + n.action(r) * f * m.action(grp.inverse_of(r));
  ensure(is_module_hom(m, n, out), "relative trace is not a homomorphism");
  return out;
}

bool ts_decomposition_check(const InducedModule& ind) {
  const GModule res = restrict_module(ind.module, ind.from_group);
  const std::size_t dn = ind.source.dim(), t = ind.coset_reps.size();
  for (std::uint32_t e = 0; e < ind.from_group->order(); ++e) {
    const FpMatrix& a = res.action(e);
    if (a.submatrix(0, 0, dn, dn) != ind.source.action(e)) return false;
    // identity-coset block splits: no flow between it and the complement
    if (t > 1) {
      if (!a.submatrix(0, dn, dn, (t - 1) * dn).is_zero()) return false;
      if (!a.submatrix(dn, 0, (t - 1) * dn, dn).is_zero()) return false;
    }
  }
  return true;
}

MackeyDecomposition mackey_decomposition(const InducedModule& ind, const Subgroup& h) {
  const GroupPtr& G = h.parent();
  require(same_group(G, ind.module.group()), "subgroup belongs to a different group");
  const PermGroup& grp = *G;
  const Subgroup& k = ind.from;
  const GModule& n = ind.source;
  const std::size_t dn = n.dim();

  GroupPtr hgrp = as_group(h);
  GModule restricted = restrict_module(ind.module, hgrp);
  const std::vector<std::uint32_t> h_fwd = sub_to_parent(*hgrp, grp);
  const std::vector<std::uint32_t> k_fwd = sub_to_parent(*ind.from_group, grp);
  const std::vector<std::int64_t> k_back = parent_to_sub(k_fwd, grp.order());
  const std::vector<std::uint32_t> big_reps = left_coset_reps(k);
  const std::vector<std::uint32_t> big_which = coset_index_table(grp, k, big_reps);

  std::vector<MackeyPiece> pieces;
  std::size_t total = 0;
  for (std::uint32_t g : double_coset_reps(h, k)) {
    // L = H ∩ gKg^{-1} inside the parent
    std::vector<std::uint32_t> conj;
    conj.reserve(k.order());
    for (std::uint32_t m : k.members()) conj.push_back(grp.conjugate(g, m));
    std::sort(conj.begin(), conj.end());
    std::vector<std::uint32_t> inter;
    std::set_intersection(h.members().begin(), h.members().end(), conj.begin(),
                          conj.end(), std::back_inserter(inter));
    Subgroup L = Subgroup::from_members(G, std::move(inter));
    GroupPtr lgrp = as_group(L);

    // twisted action: l acts through g^{-1} l g in K
    std::vector<FpMatrix> tw;
    for (const Perm& gen : lgrp->generators()) {
      const std::uint32_t lpos = grp.position(gen);
      const std::uint32_t kpos =
          grp.multiply(grp.inverse_of(g), grp.multiply(lpos, g));
      const std::int64_t ks = k_back[kpos];
      ensure(ks >= 0, "conjugated element left the inducing subgroup");
      tw.push_back(n.action(static_cast<std::uint32_t>(ks)));
    }
    GModule twisted(lgrp, n.p(), dn, std::move(tw));

    // the same L, re-expressed inside the enumerated copy of H
    std::vector<std::uint32_t> l_in_h;
    l_in_h.reserve(L.order());
    for (std::uint32_t m : L.members()) l_in_h.push_back(hgrp->position(grp.elements()[m]));
    Subgroup lsub = Subgroup::from_members(hgrp, std::move(l_in_h));

    MackeyPiece piece{g, std::move(L), twisted, induce_from(twisted, lsub)};
    total += piece.induced.module.dim();
    pieces.push_back(std::move(piece));
  }
  ensure(total == restricted.dim(), "double-coset pieces do not fill the restriction");

  // Explicit isomorphism: s_j ⊗_L n ↦ (s_j g) ⊗_K n, written in the coset
  // bases of both sides.
  FpMatrix iso(n.p(), restricted.dim(), restricted.dim());
  std::size_t col0 = 0;
  for (const MackeyPiece& piece : pieces) {
    const std::uint32_t g = piece.rep;
    for (std::size_t j = 0; j < piece.induced.coset_reps.size(); ++j) {
      const std::uint32_t sj = h_fwd[piece.induced.coset_reps[j]];
      const std::uint32_t sjg = grp.multiply(sj, g);
      const std::uint32_t i = big_which[sjg];
      const std::uint32_t kpos = grp.multiply(grp.inverse_of(big_reps[i]), sjg);
      const std::int64_t ks = k_back[kpos];
      ensure(ks >= 0, "coset correction left the inducing subgroup");
      const FpMatrix& a = n.action(static_cast<std::uint32_t>(ks));
      write_block(iso, static_cast<std::size_t>(i) * dn, col0 + j * dn, a);
    }
    col0 += piece.induced.module.dim();
  }
  ensure(iso.is_invertible(), "double-coset change of basis is singular");

  std::vector<GModule> summands;
  summands.reserve(pieces.size());
  for (const MackeyPiece& piece : pieces) summands.push_back(piece.induced.module);
  GModule side = direct_sum_many(hgrp, n.p(), summands);
  for (std::size_t j = 0; j < hgrp->generators().size(); ++j)
    ensure(iso * side.generator_matrices()[j] ==
               restricted.generator_matrices()[j] * iso,
           "double-coset isomorphism does not intertwine the actions");
  return MackeyDecomposition{std::move(hgrp), std::move(restricted), std::move(pieces),
                             std::move(iso)};
}

ShortExactSeq restrict_ses(const ShortExactSeq& s, const GroupPtr& hgrp) {
  ShortExactSeq r{restrict_module(s.sub, hgrp), restrict_module(s.middle, hgrp),
                  restrict_module(s.quotient, hgrp), s.inclusion, s.projection};
  ensure(is_exact(r), "restriction broke exactness");
  return r;
}

bool is_split_over_subgroup(const ShortExactSeq& s, const Subgroup& h) {
  return is_split(restrict_ses(s, as_group(h)));
}

} // namespace gw
