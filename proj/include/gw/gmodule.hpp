#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gw/fp_matrix.hpp"
#include "gw/perm_group.hpp"

namespace gw {

/// A finite-dimensional representation of an enumerated group over GF(p),
/// given by one invertible matrix per group generator (acting on column
/// vectors).  Construction validates the defining relations and caches the
/// action of every group element, indexed by element position.
class GModule {
public:
  GModule(GroupPtr group, u64 p, std::size_t dim, std::vector<FpMatrix> gen_mats);

  const GroupPtr& group() const { return group_; }
  u64 p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FpMatrix>& generator_matrices() const { return gens_; }
  /// Matrix of elements()[g] acting on the module.
  const FpMatrix& action(std::uint32_t g) const { return (*action_)[g]; }

  static GModule zero(GroupPtr g, u64 p);
  static GModule trivial(GroupPtr g, u64 p);
  /// Left regular module: basis indexed by element positions, g.e_x = e_{gx}.
  static GModule regular(GroupPtr g, u64 p);
  /// Natural permutation module on the points 0..degree-1.
  static GModule permutation(GroupPtr g, u64 p);
  /// One-dimensional module through the sign of each permutation.
  static GModule sign(GroupPtr g, u64 p);
  /// Single Jordan block of the given size (eigenvalue 1) for the generator
  /// of a cyclic p-group; size may be at most the group order.
  static GModule jordan(GroupPtr cyclic, u64 p, std::size_t size);

private:
  void build_and_validate();

  GroupPtr group_;
  u64 p_ = 0;
  std::size_t dim_ = 0;
  std::vector<FpMatrix> gens_;
  std::shared_ptr<const std::vector<FpMatrix>> action_;
};

/// Same group handle (or equal generators), same p.
bool compatible_modules(const GModule& a, const GModule& b);
/// Identical presentation: compatible, same dim, same generator matrices.
bool equal_presentation(const GModule& a, const GModule& b);
/// Deterministic total order on presentations: dim, then generator entries.
bool module_lex_less(const GModule& a, const GModule& b);

GModule direct_sum(const GModule& a, const GModule& b);
GModule direct_sum_many(GroupPtr g, u64 p, const std::vector<GModule>& parts);
/// Tensor product over GF(p) with the diagonal action; basis pairs are
/// enumerated row-major, matching FpMatrix::kron.
GModule tensor(const GModule& a, const GModule& b);
GModule dual(const GModule& m);
/// Change of basis by an invertible u (columns = new basis vectors).
GModule conjugated_module(const GModule& m, const FpMatrix& u);

/// f is an n.dim x m.dim matrix with f.action_m(g) == action_n(g).f.
bool is_module_hom(const GModule& m, const GModule& n, const FpMatrix& f);
/// Deterministic basis of the space of module homomorphisms m -> n.
std::vector<FpMatrix> hom_space(const GModule& m, const GModule& n);
/// Columns form a basis of the fixed subspace {v : g.v = v for all g}.
FpMatrix invariants(const GModule& m);

struct Submodule {
  GModule module;      // action written in the echelonized basis
  FpMatrix inclusion;  // parent.dim x module.dim, columns = basis
};
/// The span of the given columns, which must already be G-stable.
Submodule submodule_from_basis(const GModule& m, const FpMatrix& span_cols);
/// Smallest submodule containing the given columns.
Submodule spin(const GModule& m, const FpMatrix& vectors);
Submodule kernel_of_hom(const GModule& m, const GModule& n, const FpMatrix& f);
Submodule image_of_hom(const GModule& m, const GModule& n, const FpMatrix& f);

struct Quotient {
  GModule module;
  FpMatrix projection; // module.dim x parent.dim
};
Quotient quotient_by(const GModule& m, const FpMatrix& sub_basis_cols);

struct ShortExactSeq {
  GModule sub;
  GModule middle;
  GModule quotient;
  FpMatrix inclusion;  // middle.dim x sub.dim
  FpMatrix projection; // quotient.dim x middle.dim
};
ShortExactSeq ses_from_submodule(const GModule& m, const FpMatrix& sub_basis_cols);
bool is_exact(const ShortExactSeq& s);
/// True when the projection admits a module section.
bool is_split(const ShortExactSeq& s);

struct FreePresentation {
  GModule free;        // dim copies of the regular module
  FpMatrix projection; // m.dim x free.dim, surjective module hom onto m
  Submodule omega;     // its kernel, inside free
};
FreePresentation free_presentation(const GModule& m);
/// dim Ext^1(m, n), computed from a free presentation of m.
std::size_t ext1_dim(const GModule& m, const GModule& n);

} // namespace gw
