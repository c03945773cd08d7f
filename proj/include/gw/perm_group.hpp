#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gw/perm.hpp"

namespace gw {

class PermGroup;
class Subgroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with a fully enumerated element list.
///
/// Elements are listed in breadth-first order over generator words, so the
/// identity is always element 0 and the ordering is a deterministic function
/// of (degree, generator list).  All group arithmetic after construction is
/// done on element indices via precomputed multiplication/inverse tables.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  /// Enumerates the group generated by `gens`.  Throws if the order would
  /// exceed `bound`.
  static GroupPtr from_generators(std::size_t degree, std::vector<Perm> gens,
                                  std::size_t bound = 1000, std::string name = "");

  /// Named small groups: trivial, C2, C3, C4, C5, V4, S3, D8, D10, A4, S4, A5.
  static GroupPtr preset(const std::string& name);
  static std::vector<std::string> preset_names();

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::string& name() const { return name_; }

  /// Generator word for elements()[i]: evaluating generators left to right,
  /// elements()[i] == g[w0] * g[w1] * ... (empty word for the identity).
  const std::vector<std::vector<std::uint32_t>>& words() const { return words_; }

  std::optional<std::uint32_t> find(const Perm& p) const;
  std::uint32_t position(const Perm& p) const; // throws if absent

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const {
    return mult_[a * elems_.size() + b];
  }
  std::uint32_t inverse_of(std::uint32_t a) const { return inv_[a]; }
  /// g h g^{-1} in index space.
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t h) const {
    return multiply(multiply(g, h), inv_[g]);
  }
  std::uint64_t element_order(std::uint32_t a) const;

  /// Every subgroup, sorted by (order, member list).  The underlying index
  /// data is computed once and cached.
  std::vector<Subgroup> all_subgroups() const;

private:
  PermGroup() = default;

  // Cached lattice as raw element indices (no back-references to the group,
  // so the cache cannot form a shared_ptr cycle).
  struct LatticeData {
    std::vector<std::vector<std::uint32_t>> member_sets;
    std::vector<std::vector<std::uint32_t>> gen_sets;
  };
  const LatticeData& lattice_data() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::vector<std::vector<std::uint32_t>> words_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
  std::string name_;

  mutable std::mutex lattice_mutex_;
  mutable std::shared_ptr<const LatticeData> lattice_;
};

/// True when the two handles denote the same enumerated group (pointer
/// equality, or equal degree and generator lists — which forces identical
/// element orderings).
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup of an enumerated group, stored as a sorted list of element
/// indices into the parent, together with a deterministic generating set.
class Subgroup {
public:
  /// Verifies that `members` (indices into g) form a subgroup.
  static Subgroup from_members(GroupPtr g, std::vector<std::uint32_t> members);
  static Subgroup generated_by(GroupPtr g, const std::vector<Perm>& gens);
  static Subgroup generated_by_positions(GroupPtr g, std::vector<std::uint32_t> gens);
  static Subgroup trivial(GroupPtr g);
  static Subgroup whole(GroupPtr g);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const std::vector<std::uint32_t>& generator_positions() const { return gen_pos_; }
  std::vector<Perm> generator_perms() const;
  std::size_t order() const { return members_.size(); }
  bool contains(std::uint32_t pos) const;
  bool contains_subgroup(const Subgroup& o) const;
  bool is_whole() const { return members_.size() == parent_->order(); }
  bool is_trivial() const { return members_.size() == 1; }

  bool operator==(const Subgroup& o) const;
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  /// Orders by (order, member list); total order within one parent group.
  bool operator<(const Subgroup& o) const;

private:
  friend class PermGroup;
  friend Subgroup conjugate_subgroup(const Subgroup&, std::uint32_t);
  Subgroup() = default;
  static Subgroup unchecked(GroupPtr g, std::vector<std::uint32_t> members);
  void derive_generators();

  GroupPtr parent_;
  std::vector<std::uint32_t> members_; // sorted element indices
  std::vector<std::uint32_t> gen_pos_;
};

/// Closure of {identity} ∪ seed under multiplication, as sorted indices.
std::vector<std::uint32_t> closure_positions(const PermGroup& g,
                                             const std::vector<std::uint32_t>& seed);

Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g);
Subgroup normalizer(const Subgroup& h);
bool is_conjugate(const Subgroup& a, const Subgroup& b);
/// Witness g with g a g^{-1} == b, if one exists.
std::optional<std::uint32_t> conjugating_element(const Subgroup& a, const Subgroup& b);

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g);
/// Subgroups of p-power order (including the trivial one) up to conjugacy,
/// sorted by (order, member list).
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::uint64_t p);
Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p);

/// Left transversal: one representative index per coset gH, identity first,
/// in element-enumeration order.
std::vector<std::uint32_t> left_coset_reps(const Subgroup& h);
/// Representatives of the double cosets HgK, identity first.
std::vector<std::uint32_t> double_coset_reps(const Subgroup& h, const Subgroup& k);

/// A collection of subgroups of a common parent that is closed downward and
/// under conjugation, stored by representative maximal members.
struct SubgroupFamily {
  GroupPtr parent;
  std::vector<Subgroup> members;

  bool empty() const { return members.empty(); }
  /// True when some conjugate of s lies inside some member.
  bool contains(const Subgroup& s) const;
};

/// Family of subgroups of D of the form D ∩ gDg^{-1} with g outside H.
/// (H and D are subgroups of a common parent; D ≤ H is required.)
SubgroupFamily family_x(const Subgroup& h, const Subgroup& d);
/// Family of subgroups of H of the form H ∩ gDg^{-1} with g outside H.
SubgroupFamily family_y(const Subgroup& h, const Subgroup& d);

/// Re-enumerates a subgroup as a standalone group.  Returns the parent
/// pointer itself when h is the whole group.
GroupPtr as_group(const Subgroup& h);
/// Index of each element of sub (in hgrp's enumeration order) inside the
/// parent of sub's defining subgroup.  hgrp must be as_group(h)-compatible:
/// same perms as h's members.
std::vector<std::uint32_t> embedding_positions(const GroupPtr& hgrp, const GroupPtr& parent);
/// Re-expresses a subgroup s of hgrp as a subgroup of parent, where hgrp's
/// elements are perms that all lie in parent.
Subgroup push_subgroup(const Subgroup& s, const GroupPtr& parent);

} // namespace gw
