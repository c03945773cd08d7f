#include "gw/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gw/error.hpp"
#include "gw/matrix_algebra.hpp"

namespace gw {

namespace {

std::vector<std::vector<std::uint32_t>> element_classes(const PermGroup& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orbit{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t im = g.conjugate(c, orbit[head]);
        if (!seen[im]) {
          seen[im] = 1;
          orbit.push_back(im);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

// theta^(2^k) with stabilized rank, so image and kernel meet trivially.
FpMatrix fitting_power(FpMatrix f) {
  std::size_t r = f.rank();
  while (true) {
    FpMatrix f2 = f * f;
    const std::size_t r2 = f2.rank();
    if (r2 == r) return f;
    f = std::move(f2);
    r = r2;
  }
}

// Projector onto im(theta^inf) along ker(theta^inf) when that decomposition
// is nontrivial.
std::optional<FpMatrix> fitting_idempotent(const GModule& m, const FpMatrix& theta) {
  const FpMatrix f = fitting_power(theta);
  const std::size_t r = f.rank();
  if (r == 0 || r == m.dim()) return std::nullopt;
  const FpMatrix imb = f.select_cols(f.rref().pivots);
  const FpMatrix u = imb.hstack(f.nullspace());
  ensure(u.rows() == u.cols(), "fitting decomposition dimension mismatch");
  const auto uinv = u.inverse();
  ensure(uinv.has_value(), "fitting decomposition is not direct");
  FpMatrix diag(m.p(), m.dim(), m.dim());
  for (std::size_t i = 0; i < r; ++i) diag.set(i, i, 1);
  FpMatrix e = u * diag * *uinv;
  ensure(e * e == e, "fitting projector is not idempotent");
  ensure(is_module_hom(m, m, e), "fitting projector is not equivariant");
  return e;
}

struct SplitProbe {
  bool certified_local = false;
  std::optional<FpMatrix> idem;
};

// One nontrivial idempotent endomorphism, or a certificate that none exists.
// Conjugacy class sums separate blocks without touching the endomorphism
// ring; after that, endomorphism basis elements and random combinations feed
// the Fitting construction; the algebra engine decides the stuck cases.
SplitProbe find_split(const GModule& m, std::mt19937_64& rng) {
  const u64 p = m.p();
  const std::size_t d = m.dim();
  const FpMatrix id = FpMatrix::identity(p, d);

  const auto shifted_fitting = [&](const FpMatrix& theta) -> std::optional<FpMatrix> {
    for (u64 a = 0; a < p; ++a) {
      auto e = fitting_idempotent(m, theta - id.scalar_mul(static_cast<i64>(a)));
      if (e) return e;
    }
    return std::nullopt;
  };

  for (const auto& cls : element_classes(*m.group())) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    FpMatrix sum(p, d, d);
    for (const auto pos : cls) sum = sum + m.action(pos);
    ensure(is_module_hom(m, m, sum), "class sum is not equivariant");
    if (auto e = shifted_fitting(sum)) return {false, std::move(e)};
  }

  const auto ends = hom_space(m, m);
  ensure(!ends.empty(), "endomorphism ring of a nonzero module is zero");
  if (ends.size() == 1) return {true, std::nullopt};

  for (const auto& b : ends)
    if (auto e = shifted_fitting(b)) return {false, std::move(e)};
  for (std::size_t t = 0; t < 2 * ends.size(); ++t) {
    FpMatrix theta(p, d, d);
    for (const auto& b : ends) {
      const u64 c = rng() % p;
      if (c != 0) theta = theta + b.scalar_mul(static_cast<i64>(c));
    }
    if (auto e = shifted_fitting(theta)) return {false, std::move(e)};
  }

  const auto alg = algebra_from_closed_span(p, d, ends);
  auto verdict = split_or_certify_local(alg);
  if (verdict.is_local) return {true, std::nullopt};
  ensure(is_module_hom(m, m, *verdict.idempotent),
         "algebra idempotent is not equivariant");
  return {false, std::move(verdict.idempotent)};
}

// Recursive binary splitting; inj/proj map the current module into/out of
// the original one.
void split_into(const GModule& m, const FpMatrix& inj, const FpMatrix& proj,
                std::vector<SummandPiece>& out, std::mt19937_64& rng) {
  if (m.dim() == 0) return;
  auto probe = find_split(m, rng);
  if (!probe.idem) {
    out.push_back({m, inj, proj});
    return;
  }
  const FpMatrix& e = *probe.idem;
  const FpMatrix co = FpMatrix::identity(m.p(), m.dim()) - e;
  for (const FpMatrix* part : {&e, &co}) {
    const auto sub = image_of_hom(m, m, *part);
    const auto pi = sub.inclusion.solve(*part);
    ensure(pi.has_value(), "idempotent image admits no retraction");
    ensure((*pi * sub.inclusion).is_identity(), "retraction is not a left inverse");
    split_into(sub.module, inj * sub.inclusion, *pi * proj, out, rng);
  }
}

// Complete for indecomposables: they are isomorphic exactly when some
// composition of hom-basis elements is invertible.
bool indec_isomorphic(const GModule& a, const GModule& b) {
  if (a.dim() != b.dim()) return false;
  if (equal_presentation(a, b)) return true;
  const auto fwd = hom_space(a, b);
  const auto bwd = hom_space(b, a);
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if ((g * f).is_invertible()) return true;
  return false;
}

// Greedy multiset matching of summand lists up to isomorphism.
bool summands_embed(const std::vector<SummandPiece>& part,
                    const std::vector<SummandPiece>& whole) {
  std::vector<char> used(whole.size(), 0);
  for (const auto& a : part) {
    bool placed = false;
    for (std::size_t j = 0; j < whole.size() && !placed; ++j) {
      if (used[j]) continue;
      if (indec_isomorphic(a.module, whole[j].module)) {
        used[j] = 1;
        placed = true;
      }
    }
    if (!placed) return false;
  }
  return true;
}

} // namespace

Decomposition decompose(const GModule& m, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<SummandPiece> pieces;
  split_into(m, FpMatrix::identity(m.p(), m.dim()),
             FpMatrix::identity(m.p(), m.dim()), pieces, rng);

  std::vector<std::size_t> idx(pieces.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return module_lex_less(pieces[i].module, pieces[j].module);
  });
  std::vector<SummandPiece> sorted;
  sorted.reserve(pieces.size());
  for (const auto i : idx) sorted.push_back(std::move(pieces[i]));

  if (m.dim() > 0) {
    FpMatrix total(m.p(), m.dim(), m.dim());
    for (const auto& s : sorted) total = total + s.injection * s.projection;
    ensure(total.is_identity(), "summand projectors do not resolve the identity");
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = 0; j < sorted.size(); ++j) {
        const FpMatrix prod = sorted[i].projection * sorted[j].injection;
        ensure(i == j ? prod.is_identity() : prod.is_zero(),
               "summand injections are not orthogonal");
      }
  }

  std::vector<IsoClass> classes;
  for (const auto& s : sorted) {
    bool matched = false;
    for (auto& c : classes)
      if (indec_isomorphic(s.module, c.representative)) {
        ++c.multiplicity;
        matched = true;
        break;
      }
    if (!matched) classes.push_back({s.module, 1});
  }
  return Decomposition{m, std::move(sorted), std::move(classes)};
}

bool is_indecomposable(const GModule& m) {
  if (m.dim() == 0) return false;
  const auto ends = hom_space(m, m);
  ensure(!ends.empty(), "endomorphism ring of a nonzero module is zero");
  if (ends.size() == 1) return true;
  return split_or_certify_local(algebra_from_closed_span(m.p(), m.dim(), ends))
      .is_local;
}

bool is_isomorphic(const GModule& a, const GModule& b) {
  require(compatible_modules(a, b), "isomorphism test needs one group and one p");
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  if (equal_presentation(a, b)) return true;
  // A pair f, g with g f invertible forces a to embed split into b; with
  // equal dimensions that is already an isomorphism.
  const auto fwd = hom_space(a, b);
  const auto bwd = hom_space(b, a);
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if ((g * f).is_invertible()) return true;
  const auto da = decompose(a);
  const auto db = decompose(b);
  if (da.summands.size() != db.summands.size()) return false;
  return summands_embed(da.summands, db.summands);
}

std::optional<FpMatrix> find_isomorphism(const GModule& a, const GModule& b) {
  require(compatible_modules(a, b), "isomorphism test needs one group and one p");
  if (a.dim() != b.dim()) return std::nullopt;
  if (a.dim() == 0) return FpMatrix(a.p(), 0, 0);
  if (equal_presentation(a, b)) return FpMatrix::identity(a.p(), a.dim());
  const auto fwd = hom_space(a, b);
  const auto bwd = hom_space(b, a);
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if ((g * f).is_invertible()) {
        ensure(f.is_invertible(), "split embedding of equal dimension not invertible");
        return f;
      }
  return std::nullopt;
}

bool is_direct_summand(const GModule& part, const GModule& whole) {
  require(compatible_modules(part, whole), "summand test needs one group and one p");
  if (part.dim() == 0) return true;
  if (part.dim() > whole.dim()) return false;
  const auto dp = decompose(part);
  const auto dw = decompose(whole);
  return summands_embed(dp.summands, dw.summands);
}

std::size_t multiplicity_in(const GModule& indec, const GModule& of) {
  require(compatible_modules(indec, of), "multiplicity needs one group and one p");
  require(indec.dim() > 0, "multiplicity of the zero module is undefined");
  const auto di = decompose(indec);
  require(di.summands.size() == 1, "multiplicity needs an indecomposable module");
  std::size_t count = 0;
  for (const auto& s : decompose(of).summands)
    if (indec_isomorphic(indec, s.module)) ++count;
  return count;
}

} // namespace gw
