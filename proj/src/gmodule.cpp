#include "gw/gmodule.hpp"

#include <algorithm>

#include "gw/error.hpp"

namespace gw {

namespace {

// Columns of `cols` echelonized: returns a (dim x rank) matrix whose columns
// are the canonical (rref row) basis of the column span.
FpMatrix echelon_col_basis(const FpMatrix& cols) {
  RrefResult r = cols.transpose().rref();
  return r.r.submatrix(0, 0, r.rank, cols.rows()).transpose();
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

int perm_parity(const Perm& q) {
  std::vector<char> seen(q.degree(), 0);
  int par = 0;
  for (std::size_t x = 0; x < q.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    std::uint32_t y = static_cast<std::uint32_t>(x);
    while (!seen[y]) {
      seen[y] = 1;
      y = q(y);
      ++len;
    }
    par ^= static_cast<int>((len - 1) & 1);
  }
  return par;
}

} // namespace

GModule::GModule(GroupPtr group, u64 p, std::size_t dim, std::vector<FpMatrix> gen_mats)
    : group_(std::move(group)), p_(p), dim_(dim), gens_(std::move(gen_mats)) {
  build_and_validate();
}

void GModule::build_and_validate() {
  require(group_ != nullptr, "module needs a group");
  require(is_prime(p_), "module characteristic must be prime");
  require(gens_.size() == group_->generators().size(),
          "need exactly one matrix per group generator");
  for (const FpMatrix& a : gens_) {
    require(a.p() == p_, "generator matrix has a different characteristic");
    require(a.rows() == dim_ && a.cols() == dim_, "generator matrix has wrong shape");
  }

  const std::size_t n = group_->order();
  std::vector<std::uint32_t> gpos;
  gpos.reserve(gens_.size());
  for (const Perm& g : group_->generators()) gpos.push_back(group_->position(g));

  auto act = std::make_shared<std::vector<FpMatrix>>();
  act->reserve(n);
  act->push_back(FpMatrix::identity(p_, dim_));
  for (std::uint32_t i = 1; i < n; ++i) {
    const std::uint32_t j = group_->words()[i].back();
    const std::uint32_t par = group_->multiply(i, group_->inverse_of(gpos[j]));
    ensure(par < i, "element enumeration is not breadth-first");
    act->push_back((*act)[par] * gens_[j]);
  }

  // One induction step per (element, generator) pair certifies the whole
  // multiplication table: any failure means the matrices break a relation.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      require((*act)[i] * gens_[j] == (*act)[group_->multiply(i, gpos[j])],
              "generator matrices do not satisfy the group relations");

  // For small instances, cross-check every product directly.
  const double full_cost = static_cast<double>(n) * n * dim_ * dim_ * dim_;
  if (full_cost <= 2e8) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        ensure((*act)[a] * (*act)[b] == (*act)[group_->multiply(a, b)],
               "cached action violates the multiplication table");
  }
  action_ = std::move(act);
}

GModule GModule::zero(GroupPtr g, u64 p) {
  std::vector<FpMatrix> mats(g->generators().size(), FpMatrix(p, 0, 0));
  return GModule(std::move(g), p, 0, std::move(mats));
}

GModule GModule::trivial(GroupPtr g, u64 p) {
  std::vector<FpMatrix> mats(g->generators().size(), FpMatrix::identity(p, 1));
  return GModule(std::move(g), p, 1, std::move(mats));
}

GModule GModule::regular(GroupPtr g, u64 p) {
  const std::size_t n = g->order();
  std::vector<FpMatrix> mats;
  for (const Perm& gen : g->generators()) {
    const std::uint32_t gp = g->position(gen);
    FpMatrix m(p, n, n);
    for (std::uint32_t x = 0; x < n; ++x) m.set(g->multiply(gp, x), x, 1);
    mats.push_back(std::move(m));
  }
  return GModule(std::move(g), p, n, std::move(mats));
}

GModule GModule::permutation(GroupPtr g, u64 p) {
  const std::size_t d = g->degree();
  std::vector<FpMatrix> mats;
  for (const Perm& gen : g->generators()) {
    FpMatrix m(p, d, d);
    for (std::uint32_t x = 0; x < d; ++x) m.set(gen(x), x, 1);
    mats.push_back(std::move(m));
  }
  return GModule(std::move(g), p, d, std::move(mats));
}

GModule GModule::sign(GroupPtr g, u64 p) {
  std::vector<FpMatrix> mats;
  for (const Perm& gen : g->generators()) {
    FpMatrix m(p, 1, 1);
    m.set(0, 0, perm_parity(gen) ? -1 : 1);
    mats.push_back(std::move(m));
  }
  return GModule(std::move(g), p, 1, std::move(mats));
}

GModule GModule::jordan(GroupPtr cyclic, u64 p, std::size_t size) {
  require(cyclic != nullptr, "module needs a group");
  require(is_prime(p) && is_p_power(cyclic->order(), p),
          "Jordan modules need a cyclic p-group for the same p");
  require(cyclic->generators().size() == 1 &&
              cyclic->element_order(cyclic->position(cyclic->generators()[0])) ==
                  cyclic->order(),
          "Jordan modules need a one-generator cyclic group");
  require(size >= 1 && size <= cyclic->order(),
          "Jordan block size must be between 1 and the group order");
  FpMatrix j(p, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j.set(i, i, 1);
    if (i + 1 < size) j.set(i, i + 1, 1);
  }
  return GModule(std::move(cyclic), p, size, {std::move(j)});
}

bool compatible_modules(const GModule& a, const GModule& b) {
  return a.p() == b.p() && same_group(a.group(), b.group());
}

bool equal_presentation(const GModule& a, const GModule& b) {
  return compatible_modules(a, b) && a.dim() == b.dim() &&
         a.generator_matrices() == b.generator_matrices();
}

bool module_lex_less(const GModule& a, const GModule& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t j = 0; j < a.generator_matrices().size(); ++j) {
    const FpMatrix& x = a.generator_matrices()[j];
    const FpMatrix& y = b.generator_matrices()[j];
    if (x != y) return x.lex_less(y);
  }
  return false;
}

GModule direct_sum(const GModule& a, const GModule& b) {
  require(compatible_modules(a, b), "direct sum needs modules over the same group");
  std::vector<FpMatrix> mats;
  for (std::size_t j = 0; j < a.generator_matrices().size(); ++j)
    mats.push_back(a.generator_matrices()[j].direct_sum(b.generator_matrices()[j]));
  return GModule(a.group(), a.p(), a.dim() + b.dim(), std::move(mats));
}

GModule direct_sum_many(GroupPtr g, u64 p, const std::vector<GModule>& parts) {
  GModule acc = GModule::zero(std::move(g), p);
  for (const GModule& m : parts) acc = direct_sum(acc, m);
  return acc;
}

GModule tensor(const GModule& a, const GModule& b) {
  require(compatible_modules(a, b), "tensor product needs modules over the same group");
  std::vector<FpMatrix> mats;
  for (std::size_t j = 0; j < a.generator_matrices().size(); ++j)
    mats.push_back(a.generator_matrices()[j].kron(b.generator_matrices()[j]));
  return GModule(a.group(), a.p(), a.dim() * b.dim(), std::move(mats));
}

GModule dual(const GModule& m) {
  const PermGroup& g = *m.group();
  std::vector<FpMatrix> mats;
  for (const Perm& gen : g.generators()) {
    const std::uint32_t gp = g.position(gen);
    mats.push_back(m.action(g.inverse_of(gp)).transpose());
  }
  return GModule(m.group(), m.p(), m.dim(), std::move(mats));
}

GModule conjugated_module(const GModule& m, const FpMatrix& u) {
  require(u.rows() == m.dim() && u.cols() == m.dim() && u.p() == m.p(),
          "change of basis has wrong shape");
  auto uinv = u.inverse();
  require(uinv.has_value(), "change of basis must be invertible");
  std::vector<FpMatrix> mats;
  for (const FpMatrix& a : m.generator_matrices()) mats.push_back(*uinv * a * u);
  return GModule(m.group(), m.p(), m.dim(), std::move(mats));
}

bool is_module_hom(const GModule& m, const GModule& n, const FpMatrix& f) {
  require(compatible_modules(m, n), "hom needs modules over the same group");
  if (f.p() != m.p() || f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t j = 0; j < m.generator_matrices().size(); ++j)
    if (f * m.generator_matrices()[j] != n.generator_matrices()[j] * f) return false;
  return true;
}

std::vector<FpMatrix> hom_space(const GModule& m, const GModule& n) {
  require(compatible_modules(m, n), "hom needs modules over the same group");
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  const u64 p = m.p();

  // X (dn x dm) is a hom iff X.A = B.X for all generator pairs (A, B); with
  // row-major vec this reads (I ⊗ Aᵀ - B ⊗ I) vec(X) = 0.
  FpMatrix constraints(p, 0, dn * dm);
  const FpMatrix im = FpMatrix::identity(p, dm);
  const FpMatrix in = FpMatrix::identity(p, dn);
  for (std::size_t j = 0; j < m.generator_matrices().size(); ++j) {
    const FpMatrix& a = m.generator_matrices()[j];
    const FpMatrix& b = n.generator_matrices()[j];
    constraints = constraints.vstack(in.kron(a.transpose()) - b.kron(im));
  }
  FpMatrix ns = constraints.nullspace();
  std::vector<FpMatrix> basis;
  basis.reserve(ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c) basis.push_back(unvec_rm(ns.col(c), dn, dm));
  return basis;
}

FpMatrix invariants(const GModule& m) {
  FpMatrix stacked(m.p(), 0, m.dim());
  const FpMatrix id = FpMatrix::identity(m.p(), m.dim());
  for (const FpMatrix& a : m.generator_matrices()) stacked = stacked.vstack(a - id);
  return stacked.nullspace();
}

Submodule submodule_from_basis(const GModule& m, const FpMatrix& span_cols) {
  require(span_cols.rows() == m.dim() && span_cols.p() == m.p(),
          "submodule basis has wrong shape");
  FpMatrix b = echelon_col_basis(span_cols);
  const std::size_t r = b.cols();
  std::vector<FpMatrix> mats;
  for (const FpMatrix& a : m.generator_matrices()) {
    auto x = b.solve(a * b);
    require(x.has_value(), "span is not stable under the group action");
    mats.push_back(std::move(*x));
  }
  return Submodule{GModule(m.group(), m.p(), r, std::move(mats)), std::move(b)};
}

Submodule spin(const GModule& m, const FpMatrix& vectors) {
  require(vectors.rows() == m.dim() && vectors.p() == m.p(),
          "spin vectors have wrong shape");
  RrefResult rr = vectors.transpose().rref();
  FpMatrix rows = rr.r.submatrix(0, 0, rr.rank, m.dim());
  std::vector<FpMatrix> work;
  for (std::size_t i = 0; i < rows.rows(); ++i)
    work.push_back(rows.select_rows({i}).transpose());
  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    for (const FpMatrix& a : m.generator_matrices()) {
      FpMatrix w = a * work[idx];
      FpMatrix grown = rows.vstack(w.transpose());
      if (grown.rank() > rows.rows()) {
        RrefResult g = grown.rref();
        rows = g.r.submatrix(0, 0, g.rank, m.dim());
        work.push_back(std::move(w));
      }
    }
  }
  return submodule_from_basis(m, rows.transpose());
}

Submodule kernel_of_hom(const GModule& m, const GModule& n, const FpMatrix& f) {
  require(is_module_hom(m, n, f), "kernel needs a module homomorphism");
  return submodule_from_basis(m, f.nullspace());
}

Submodule image_of_hom(const GModule& m, const GModule& n, const FpMatrix& f) {
  require(is_module_hom(m, n, f), "image needs a module homomorphism");
  return submodule_from_basis(n, f);
}

Quotient quotient_by(const GModule& m, const FpMatrix& sub_basis_cols) {
  require(sub_basis_cols.rows() == m.dim() && sub_basis_cols.p() == m.p(),
          "submodule basis has wrong shape");
  FpMatrix b = echelon_col_basis(sub_basis_cols);
  const std::size_t d = m.dim(), r = b.cols(), q = d - r;

  // Complete the echelon basis with the standard vectors at non-pivot
  // coordinates; [B | E] is then invertible.
  std::vector<std::size_t> pivots = b.transpose().rref().pivots;
  std::vector<char> is_pivot(d, 0);
  for (std::size_t pc : pivots) is_pivot[pc] = 1;
  FpMatrix ext(m.p(), d, q);
  std::size_t c = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_pivot[i]) ext.set(i, c++, 1);
  FpMatrix u = b.hstack(ext);
  auto uinv = u.inverse();
  ensure(uinv.has_value(), "complement construction failed");

  std::vector<FpMatrix> mats;
  for (const FpMatrix& a : m.generator_matrices()) {
    FpMatrix t = *uinv * a * u;
    require(t.submatrix(r, 0, q, r).is_zero(), "span is not stable under the group action");
    mats.push_back(t.submatrix(r, r, q, q));
  }
  return Quotient{GModule(m.group(), m.p(), q, std::move(mats)),
                  uinv->submatrix(r, 0, q, d)};
}

ShortExactSeq ses_from_submodule(const GModule& m, const FpMatrix& sub_basis_cols) {
  Submodule s = submodule_from_basis(m, sub_basis_cols);
  Quotient q = quotient_by(m, sub_basis_cols);
  return ShortExactSeq{std::move(s.module), m, std::move(q.module),
                       std::move(s.inclusion), std::move(q.projection)};
}

bool is_exact(const ShortExactSeq& s) {
  if (!compatible_modules(s.sub, s.middle) || !compatible_modules(s.middle, s.quotient))
    return false;
  if (!is_module_hom(s.sub, s.middle, s.inclusion)) return false;
  if (!is_module_hom(s.middle, s.quotient, s.projection)) return false;
  if (s.inclusion.rank() != s.sub.dim()) return false;            // injective
  if (s.projection.rank() != s.quotient.dim()) return false;       // surjective
  if (!(s.projection * s.inclusion).is_zero()) return false;
  return s.sub.dim() + s.quotient.dim() == s.middle.dim();         // exact in the middle
}

bool is_split(const ShortExactSeq& s) {
  require(is_exact(s), "splitting test needs an exact sequence");
  const std::size_t q = s.quotient.dim();
  if (q == 0) return true;
  std::vector<FpMatrix> basis = hom_space(s.quotient, s.middle);
  FpMatrix cols(s.middle.p(), q * q, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    FpMatrix v = vec_rm(s.projection * basis[c]);
    for (std::size_t i = 0; i < q * q; ++i) cols.set(i, c, static_cast<i64>(v.at(i, 0)));
  }
  return cols.solve(vec_rm(FpMatrix::identity(s.middle.p(), q))).has_value();
}

FreePresentation free_presentation(const GModule& m) {
  const GroupPtr& g = m.group();
  const std::size_t n = g->order(), d = m.dim();
  GModule free = direct_sum_many(g, m.p(), std::vector<GModule>(d, GModule::regular(g, m.p())));
  FpMatrix pi(m.p(), d, d * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::size_t row = 0; row < d; ++row)
        pi.set(row, i * n + x, static_cast<i64>(m.action(x).at(row, i)));
  ensure(d == 0 || is_module_hom(free, m, pi), "presentation map is not a homomorphism");
  ensure(pi.rank() == d, "presentation map is not surjective");
  Submodule omega = kernel_of_hom(free, m, pi);
  return FreePresentation{std::move(free), std::move(pi), std::move(omega)};
}

std::size_t ext1_dim(const GModule& m, const GModule& n) {
  require(compatible_modules(m, n), "ext needs modules over the same group");
  if (m.dim() == 0 || n.dim() == 0) return 0;
  FreePresentation fp = free_presentation(m);
  std::vector<FpMatrix> hom_omega = hom_space(fp.omega.module, n);
  if (hom_omega.empty()) return 0;

  // Hom(free, n) has the explicit basis phi_{i,t} with
  // phi_{i,t}(e_{x,j}) = delta_{ij} . action_n(x) . e_t; restrict each along
  // the kernel inclusion and count independent restrictions.
  const std::size_t go = m.group()->order();
  const std::size_t dm = m.dim(), dn = n.dim(), dw = fp.omega.module.dim();
  FpMatrix restricted(m.p(), dm * dn, dn * dw);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t t = 0; t < dn; ++t) {
      FpMatrix phi(m.p(), dn, dm * go);
      for (std::uint32_t x = 0; x < go; ++x)
        for (std::size_t row = 0; row < dn; ++row)
          phi.set(row, i * go + x, static_cast<i64>(n.action(x).at(row, t)));
      FpMatrix v = vec_rm(phi * fp.omega.inclusion);
      for (std::size_t c = 0; c < dn * dw; ++c)
        restricted.set(i * dn + t, c, static_cast<i64>(v.at(c, 0)));
    }
  }
  const std::size_t image_rank = restricted.rank();
  ensure(hom_omega.size() >= image_rank, "restriction exceeded the hom space");
  return hom_omega.size() - image_rank;
}

} // namespace gw
