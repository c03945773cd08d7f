#include "gw/perm_group.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "gw/error.hpp"
#include "gw/fp_matrix.hpp" // is_prime

namespace gw {

GroupPtr PermGroup::from_generators(std::size_t degree, std::vector<Perm> gens,
                                    std::size_t bound, std::string name) {
  require(degree >= 1, "group degree must be at least 1");
  for (const Perm& g : gens)
    require(g.degree() == degree, "generator degree does not match group degree");

  auto grp = std::shared_ptr<PermGroup>(new PermGroup());
  grp->degree_ = degree;
  grp->gens_ = std::move(gens);
  grp->name_ = std::move(name);

  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  grp->elems_.push_back(Perm::identity(degree));
  grp->words_.emplace_back();
  index.emplace(grp->elems_[0], 0);

  // Breadth-first over generator words, extending on the right, so the word
  // of each element is the first one found in shortlex-by-discovery order.
  for (std::size_t i = 0; i < grp->elems_.size(); ++i) {
    for (std::size_t j = 0; j < grp->gens_.size(); ++j) {
      Perm cand = grp->elems_[i].compose(grp->gens_[j]);
      auto [it, fresh] = index.emplace(cand, static_cast<std::uint32_t>(grp->elems_.size()));
      if (!fresh) continue;
      require(grp->elems_.size() < bound,
              "group order exceeds bound " + std::to_string(bound));
      grp->elems_.push_back(std::move(cand));
      std::vector<std::uint32_t> w = grp->words_[i];
      w.push_back(static_cast<std::uint32_t>(j));
      grp->words_.push_back(std::move(w));
    }
  }

  const std::size_t n = grp->elems_.size();
  grp->mult_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp->mult_[a * n + b] = index.at(grp->elems_[a].compose(grp->elems_[b]));
  grp->inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) grp->inv_[a] = index.at(grp->elems_[a].inverse());
  return grp;
}

GroupPtr PermGroup::preset(const std::string& name) {
  auto mk = [&](std::size_t degree, std::initializer_list<const char*> cycles) {
    std::vector<Perm> gens;
    for (const char* c : cycles) gens.push_back(perm_from_cycles(degree, c));
    return from_generators(degree, std::move(gens), 1000, name);
  };
  if (name == "trivial") return mk(1, {});
  if (name == "C2") return mk(2, {"(0 1)"});
  if (name == "C3") return mk(3, {"(0 1 2)"});
  if (name == "C4") return mk(4, {"(0 1 2 3)"});
  if (name == "C5") return mk(5, {"(0 1 2 3 4)"});
  if (name == "V4") return mk(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  if (name == "S3") return mk(3, {"(0 1)", "(0 1 2)"});
  if (name == "D8") return mk(4, {"(0 1 2 3)", "(0 2)"});
  if (name == "D10") return mk(5, {"(0 1 2 3 4)", "(1 4)(2 3)"});
  if (name == "A4") return mk(4, {"(0 1 2)", "(0 1)(2 3)"});
  if (name == "S4") return mk(4, {"(0 1)", "(0 1 2 3)"});
  if (name == "A5") return mk(5, {"(0 1 2 3 4)", "(0 1 2)"});
  require(false, "unknown preset group '" + name + "'");
  return nullptr;
}

std::vector<std::string> PermGroup::preset_names() {
  return {"trivial", "C2", "C3", "C4", "C5", "V4", "S3", "D8", "D10", "A4", "S4", "A5"};
}

std::optional<std::uint32_t> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  // Element counts stay small; a linear scan keeps the class lean.  Hot paths
  // use the index tables, not perm lookup.
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == p) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint32_t PermGroup::position(const Perm& p) const {
  auto i = find(p);
  require(i.has_value(), "permutation is not an element of the group");
  return *i;
}

std::uint64_t PermGroup::element_order(std::uint32_t a) const {
  require(a < elems_.size(), "element index out of range");
  return elems_[a].order();
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->degree() == b->degree() && a->generators() == b->generators();
}

std::vector<std::uint32_t> closure_positions(const PermGroup& g,
                                             const std::vector<std::uint32_t>& seed) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> list;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(0);
  for (std::uint32_t s : seed) {
    require(s < n, "element index out of range");
    add(s);
  }
  // Worklist closure: when list[i] is processed, both products with every
  // element present at that time are formed; elements appended later are
  // themselves processed against everything before them.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      add(g.multiply(list[i], list[j]));
      add(g.multiply(list[j], list[i]));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::unchecked(GroupPtr g, std::vector<std::uint32_t> members) {
  Subgroup s;
  s.parent_ = std::move(g);
  s.members_ = std::move(members);
  return s;
}

void Subgroup::derive_generators() {
  gen_pos_.clear();
  std::vector<char> known(parent_->order(), 0);
  known[0] = 1;
  for (std::uint32_t m : members_) {
    if (known[m]) continue;
    gen_pos_.push_back(m);
    std::fill(known.begin(), known.end(), 0);
    for (std::uint32_t x : closure_positions(*parent_, gen_pos_)) known[x] = 1;
  }
}

Subgroup Subgroup::from_members(GroupPtr g, std::vector<std::uint32_t> members) {
  require(g != nullptr, "subgroup needs a parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  require(!members.empty() && members[0] == 0, "subgroup must contain the identity");
  require(members.back() < g->order(), "subgroup member index out of range");
  std::vector<char> in(g->order(), 0);
  for (std::uint32_t m : members) in[m] = 1;
  for (std::uint32_t a : members)
    for (std::uint32_t b : members)
      require(in[g->multiply(a, b)], "member set is not closed under multiplication");
  Subgroup s = unchecked(std::move(g), std::move(members));
  s.derive_generators();
  return s;
}

Subgroup Subgroup::generated_by(GroupPtr g, const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> pos;
  pos.reserve(gens.size());
  for (const Perm& p : gens) pos.push_back(g->position(p));
  return generated_by_positions(std::move(g), std::move(pos));
}

Subgroup Subgroup::generated_by_positions(GroupPtr g, std::vector<std::uint32_t> gens) {
  require(g != nullptr, "subgroup needs a parent group");
  Subgroup s = unchecked(g, closure_positions(*g, gens));
  s.derive_generators();
  return s;
}

Subgroup Subgroup::trivial(GroupPtr g) {
  require(g != nullptr, "subgroup needs a parent group");
  return unchecked(std::move(g), {0});
}

Subgroup Subgroup::whole(GroupPtr g) {
  require(g != nullptr, "subgroup needs a parent group");
  std::vector<std::uint32_t> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  Subgroup s = unchecked(std::move(g), std::move(all));
  s.derive_generators();
  return s;
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  out.reserve(gen_pos_.size());
  for (std::uint32_t p : gen_pos_) out.push_back(parent_->elements()[p]);
  return out;
}

bool Subgroup::contains(std::uint32_t pos) const {
  return std::binary_search(members_.begin(), members_.end(), pos);
}

bool Subgroup::contains_subgroup(const Subgroup& o) const {
  require(same_group(parent_, o.parent_), "subgroups live in different groups");
  return std::includes(members_.begin(), members_.end(), o.members_.begin(),
                       o.members_.end());
}

bool Subgroup::operator==(const Subgroup& o) const {
  return same_group(parent_, o.parent_) && members_ == o.members_;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
  return members_ < o.members_;
}

// ---------------------------------------------------------------------------
// Lattice

const PermGroup::LatticeData& PermGroup::lattice_data() const {
  std::lock_guard<std::mutex> lock(lattice_mutex_);
  if (lattice_) return *lattice_;

  const std::size_t n = elems_.size();
  auto data = std::make_shared<LatticeData>();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> work;

  auto push = [&](std::vector<std::uint32_t> s) {
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  push(closure_positions(*this, {}));
  // Every subgroup is reachable from a maximal proper subgroup by adjoining
  // one element, so breadth-first extension from the trivial subgroup finds
  // the full lattice.
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<char> in(n, 0);
    for (std::uint32_t m : work[i]) in[m] = 1;
    for (std::uint32_t g = 1; g < n; ++g) {
      if (in[g]) continue;
      std::vector<std::uint32_t> seed = work[i];
      seed.push_back(g);
      push(closure_positions(*this, seed));
    }
  }

  std::sort(work.begin(), work.end(),
            [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  // Derive deterministic generator sets without materializing Subgroups.
  for (const auto& mem : work) {
    std::vector<std::uint32_t> gens;
    std::vector<char> known(n, 0);
    known[0] = 1;
    for (std::uint32_t m : mem) {
      if (known[m]) continue;
      gens.push_back(m);
      std::fill(known.begin(), known.end(), 0);
      for (std::uint32_t x : closure_positions(*this, gens)) known[x] = 1;
    }
    data->member_sets.push_back(mem);
    data->gen_sets.push_back(std::move(gens));
  }
  lattice_ = data;
  return *lattice_;
}

std::vector<Subgroup> PermGroup::all_subgroups() const {
  const LatticeData& data = lattice_data();
  GroupPtr self = shared_from_this();
  std::vector<Subgroup> out;
  out.reserve(data.member_sets.size());
  for (std::size_t i = 0; i < data.member_sets.size(); ++i) {
    Subgroup s = Subgroup::unchecked(self, data.member_sets[i]);
    s.gen_pos_ = data.gen_sets[i];
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy and standard constructions

Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g) {
  const PermGroup& grp = *h.parent();
  require(g < grp.order(), "element index out of range");
  std::vector<std::uint32_t> mem;
  mem.reserve(h.order());
  for (std::uint32_t m : h.members()) mem.push_back(grp.conjugate(g, m));
  std::sort(mem.begin(), mem.end());
  Subgroup out = Subgroup::unchecked(h.parent(), std::move(mem));
  out.gen_pos_.reserve(h.generator_positions().size());
  for (std::uint32_t m : h.generator_positions()) out.gen_pos_.push_back(grp.conjugate(g, m));
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const PermGroup& grp = *h.parent();
  const std::size_t n = grp.order();
  std::vector<char> in(n, 0);
  for (std::uint32_t m : h.members()) in[m] = 1;
  std::vector<std::uint32_t> norm;
  for (std::uint32_t g = 0; g < n; ++g) {
    bool ok = true;
    for (std::uint32_t m : h.members()) {
      if (!in[grp.conjugate(g, m)]) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(g);
  }
  return Subgroup::from_members(h.parent(), std::move(norm));
}

std::optional<std::uint32_t> conjugating_element(const Subgroup& a, const Subgroup& b) {
  require(same_group(a.parent(), b.parent()), "subgroups live in different groups");
  if (a.order() != b.order()) return std::nullopt;
  const PermGroup& grp = *a.parent();
  for (std::uint32_t g = 0; g < grp.order(); ++g) {
    std::vector<std::uint32_t> mem;
    mem.reserve(a.order());
    for (std::uint32_t m : a.members()) mem.push_back(grp.conjugate(g, m));
    std::sort(mem.begin(), mem.end());
    if (mem == b.members()) return g;
  }
  return std::nullopt;
}

bool is_conjugate(const Subgroup& a, const Subgroup& b) {
  return conjugating_element(a, b).has_value();
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g) {
  std::vector<Subgroup> subs = g->all_subgroups();
  const PermGroup& grp = *g;
  std::set<std::vector<std::uint32_t>> canon_seen;
  std::vector<Subgroup> reps;
  for (Subgroup& s : subs) {
    std::vector<std::uint32_t> canon = s.members();
    for (std::uint32_t x = 1; x < grp.order(); ++x) {
      std::vector<std::uint32_t> mem;
      mem.reserve(s.order());
      for (std::uint32_t m : s.members()) mem.push_back(grp.conjugate(x, m));
      std::sort(mem.begin(), mem.end());
      if (mem < canon) canon = std::move(mem);
    }
    if (canon_seen.insert(std::move(canon)).second) reps.push_back(std::move(s));
  }
  return reps; // inherits (order, members) sorting from all_subgroups
}

namespace {
bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}
} // namespace

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::uint64_t p) {
  require(is_prime(p), "p must be prime");
  std::vector<Subgroup> out;
  for (Subgroup& s : subgroups_up_to_conjugacy(g))
    if (is_power_of(s.order(), p)) out.push_back(std::move(s));
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p) {
  require(is_prime(p), "p must be prime");
  std::vector<Subgroup> subs = g->all_subgroups();
  std::size_t best = 1;
  for (const Subgroup& s : subs)
    if (is_power_of(s.order(), p) && s.order() > best) best = s.order();
  for (Subgroup& s : subs)
    if (s.order() == best && is_power_of(s.order(), p)) return std::move(s);
  return Subgroup::trivial(g); // unreachable: trivial subgroup always matches
}

std::vector<std::uint32_t> left_coset_reps(const Subgroup& h) {
  const PermGroup& grp = *h.parent();
  const std::size_t n = grp.order();
  std::vector<char> covered(n, 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (std::uint32_t m : h.members()) covered[grp.multiply(g, m)] = 1;
  }
  return reps;
}

std::vector<std::uint32_t> double_coset_reps(const Subgroup& h, const Subgroup& k) {
  require(same_group(h.parent(), k.parent()), "subgroups live in different groups");
  const PermGroup& grp = *h.parent();
  const std::size_t n = grp.order();
  std::vector<char> covered(n, 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (std::uint32_t a : h.members()) {
      const std::uint32_t ag = grp.multiply(a, g);
      for (std::uint32_t b : k.members()) covered[grp.multiply(ag, b)] = 1;
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Subgroup families for correspondence arguments

bool SubgroupFamily::contains(const Subgroup& s) const {
  require(same_group(parent, s.parent()), "subgroup belongs to a different group");
  const PermGroup& grp = *parent;
  for (const Subgroup& m : members) {
    if (s.order() > m.order()) continue;
    std::vector<char> in(grp.order(), 0);
    for (std::uint32_t x : m.members()) in[x] = 1;
    for (std::uint32_t g = 0; g < grp.order(); ++g) {
      bool inside = true;
      for (std::uint32_t x : s.members()) {
        if (!in[grp.conjugate(g, x)]) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
  }
  return false;
}

namespace {

// Builds the family whose raw members are {base ∩ gDg^{-1} : g ∈ G \ H},
// stored as representative maximal members: a candidate is dropped when one
// of its conjugates lies inside a kept member, which leaves the containment
// predicate unchanged.
SubgroupFamily intersection_family(const Subgroup& h, const Subgroup& d,
                                   const Subgroup& base) {
  require(same_group(h.parent(), d.parent()), "subgroups live in different groups");
  const GroupPtr G = h.parent();
  const PermGroup& grp = *G;

  std::set<std::vector<std::uint32_t>> distinct;
  for (std::uint32_t g = 0; g < grp.order(); ++g) {
    if (h.contains(g)) continue;
    std::vector<std::uint32_t> conj;
    conj.reserve(d.order());
    for (std::uint32_t m : d.members()) conj.push_back(grp.conjugate(g, m));
    std::sort(conj.begin(), conj.end());
    std::vector<std::uint32_t> inter;
    std::set_intersection(base.members().begin(), base.members().end(), conj.begin(),
                          conj.end(), std::back_inserter(inter));
    distinct.insert(std::move(inter));
  }

  std::vector<std::vector<std::uint32_t>> cands(distinct.begin(), distinct.end());
  std::sort(cands.begin(), cands.end(),
            [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });

  SubgroupFamily fam;
  fam.parent = G;
  for (const auto& mem : cands) {
    Subgroup cand = Subgroup::from_members(G, mem);
    if (fam.contains(cand)) continue;
    fam.members.push_back(std::move(cand));
  }
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

} // namespace

SubgroupFamily family_x(const Subgroup& h, const Subgroup& d) {
  require(h.contains_subgroup(d), "the p-subgroup must lie inside the local subgroup");
  return intersection_family(h, d, d);
}

SubgroupFamily family_y(const Subgroup& h, const Subgroup& d) {
  require(h.contains_subgroup(d), "the p-subgroup must lie inside the local subgroup");
  return intersection_family(h, d, h);
}

// ---------------------------------------------------------------------------
// Re-enumeration of subgroups as standalone groups

GroupPtr as_group(const Subgroup& h) {
  if (h.is_whole()) return h.parent();
  std::string name = h.parent()->name();
  if (!name.empty()) name += "-sub" + std::to_string(h.order());
  return PermGroup::from_generators(h.parent()->degree(), h.generator_perms(),
                                    h.order() + 1, std::move(name));
}

std::vector<std::uint32_t> embedding_positions(const GroupPtr& hgrp, const GroupPtr& parent) {
  require(hgrp != nullptr && parent != nullptr, "null group");
  require(hgrp->degree() == parent->degree(), "groups act on different point sets");
  std::vector<std::uint32_t> out;
  out.reserve(hgrp->order());
  for (const Perm& p : hgrp->elements()) out.push_back(parent->position(p));
  return out;
}

Subgroup push_subgroup(const Subgroup& s, const GroupPtr& parent) {
  const PermGroup& hgrp = *s.parent();
  std::vector<std::uint32_t> mem;
  mem.reserve(s.order());
  for (std::uint32_t m : s.members()) mem.push_back(parent->position(hgrp.elements()[m]));
  return Subgroup::from_members(parent, std::move(mem));
}

} // namespace gw
