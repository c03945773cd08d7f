#include "gw/matrix_algebra.hpp"

#include <algorithm>

#include "gw/error.hpp"
#include "gw/fp_poly.hpp"

namespace gw {

namespace {

// Incrementally maintained reduced echelon basis of a subspace of GF(p)^w.
class EchelonSpan {
public:
  EchelonSpan(u64 p, std::size_t w) : p_(p), w_(w) {}

  std::size_t dim() const { return rows_.size(); }

  std::vector<u64> reduce(std::vector<u64> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const u64 c = v[piv_[i]];
      if (c == 0) continue;
      for (std::size_t k = piv_[i]; k < w_; ++k)
        v[k] = (v[k] + (p_ - c * rows_[i][k] % p_) % p_) % p_;
    }
    return v;
  }

  bool contains(const std::vector<u64>& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](u64 c) { return c == 0; });
  }

  /// Adds v to the span; false when it was already inside.
  bool add(const std::vector<u64>& v) {
    auto r = reduce(v);
    std::size_t lead = w_;
    for (std::size_t k = 0; k < w_; ++k)
      if (r[k] != 0) {
        lead = k;
        break;
      }
    if (lead == w_) return false;
    const u64 inv = fp_inv(r[lead], p_);
    for (std::size_t k = lead; k < w_; ++k) r[k] = r[k] * inv % p_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const u64 c = rows_[i][lead];
      if (c == 0) continue;
      for (std::size_t k = lead; k < w_; ++k)
        rows_[i][k] = (rows_[i][k] + (p_ - c * r[k] % p_) % p_) % p_;
    }
    std::size_t pos = 0;
    while (pos < piv_.size() && piv_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    piv_.insert(piv_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
  }

  const std::vector<std::vector<u64>>& rows() const { return rows_; }

private:
  u64 p_;
  std::size_t w_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> piv_;
};

FpMatrix unflatten(u64 p, std::size_t n, const std::vector<u64>& v) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, static_cast<i64>(v[i * n + j]));
  return m;
}

std::vector<FpMatrix> span_elements(u64 p, std::size_t n, const EchelonSpan& s) {
  std::vector<FpMatrix> out;
  out.reserve(s.dim());
  for (const auto& row : s.rows()) out.push_back(unflatten(p, n, row));
  return out;
}

void check_member(const MatrixAlgebra& a, const FpMatrix& x, const char* what) {
  require(x.p() == a.p && x.rows() == a.ambient && x.cols() == a.ambient, what);
}

u64 ipow(u64 b, std::size_t e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<u64> mat_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                             std::size_t n, u64 m) {
  std::vector<u64> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const u64 av = a[i * n + k];
      if (av == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        r[i * n + j] = (r[i * n + j] + av * b[k * n + j]) % m;
    }
  return r;
}

std::vector<u64> mat_pow_mod(std::vector<u64> base, u64 e, std::size_t n, u64 m) {
  std::vector<u64> acc(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1 % m;
  while (e > 0) {
    if (e & 1) acc = mat_mul_mod(acc, base, n, m);
    base = mat_mul_mod(base, base, n, m);
    e >>= 1;
  }
  return acc;
}

// (trace of lift(z)^{p^i} mod p^{i+1}) / p^i, reduced mod p.  The divisibility
// it relies on is checked, not assumed.
u64 divided_power_trace(const FpMatrix& z, std::size_t i) {
  const u64 p = z.p();
  const std::size_t n = z.rows();
  const u64 step = ipow(p, i);
  const u64 modulus = step * p;
  const auto pw = mat_pow_mod(z.flat(), step, n, modulus);
  u64 t = 0;
  for (std::size_t d = 0; d < n; ++d) t = (t + pw[d * n + d]) % modulus;
  ensure(t % step == 0, "divided power trace congruence failed");
  return (t / step) % p;
}

// The divided-trace filtration whose final term is the radical.
std::vector<FpMatrix> trace_filtration(const MatrixAlgebra& a) {
  const u64 p = a.p;
  const std::size_t n = a.ambient;
  std::vector<FpMatrix> cur = a.basis;
  std::size_t levels = 1;
  for (u64 pw = p; pw <= n; pw *= p) ++levels;
  for (std::size_t i = 0; i < levels && !cur.empty(); ++i) {
    std::vector<FpMatrix> ys = cur;
    ys.push_back(FpMatrix::identity(p, n));
    FpMatrix cons(p, ys.size(), cur.size());
    for (std::size_t yi = 0; yi < ys.size(); ++yi)
      for (std::size_t xj = 0; xj < cur.size(); ++xj)
        cons.set(yi, xj, static_cast<i64>(divided_power_trace(cur[xj] * ys[yi], i)));
    const FpMatrix kern = cons.nullspace();
    EchelonSpan next(p, n * n);
    for (std::size_t c = 0; c < kern.cols(); ++c) {
      FpMatrix elem(p, n, n);
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (kern.at(j, c) != 0)
          elem = elem + cur[j].scalar_mul(static_cast<i64>(kern.at(j, c)));
      next.add(elem.flat());
    }
    cur = span_elements(p, n, next);
  }
  return cur;
}

} // namespace

MatrixAlgebra algebra_from_generators(u64 p, std::size_t ambient,
                                      const std::vector<FpMatrix>& gens) {
  require(is_prime(p), "algebra modulus must be prime");
  require(ambient >= 1, "algebra needs a positive ambient dimension");
  EchelonSpan span(p, ambient * ambient);
  span.add(FpMatrix::identity(p, ambient).flat());
  for (const auto& g : gens) {
    require(g.p() == p && g.rows() == ambient && g.cols() == ambient,
            "algebra generator has the wrong shape or modulus");
    span.add(g.flat());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto mats = span_elements(p, ambient, span);
    for (const auto& x : mats)
      for (const auto& y : mats)
        if (span.add((x * y).flat())) grew = true;
  }
  return MatrixAlgebra{p, ambient, span_elements(p, ambient, span)};
}

MatrixAlgebra algebra_from_closed_span(u64 p, std::size_t ambient,
                                       const std::vector<FpMatrix>& spanning) {
  require(is_prime(p), "algebra modulus must be prime");
  require(ambient >= 1, "algebra needs a positive ambient dimension");
  EchelonSpan span(p, ambient * ambient);
  for (const auto& g : spanning) {
    require(g.p() == p && g.rows() == ambient && g.cols() == ambient,
            "algebra element has the wrong shape or modulus");
    span.add(g.flat());
  }
  require(span.contains(FpMatrix::identity(p, ambient).flat()),
          "algebra span must contain the identity");
  const auto mats = span_elements(p, ambient, span);
  for (const auto& x : mats)
    for (const auto& y : mats)
      require(span.contains((x * y).flat()),
              "algebra span is not closed under multiplication");
  return MatrixAlgebra{p, ambient, mats};
}

std::optional<std::vector<u64>> algebra_coords(const MatrixAlgebra& a,
                                               const FpMatrix& x) {
  check_member(a, x, "coordinate query has the wrong shape or modulus");
  const std::size_t w = a.ambient * a.ambient;
  FpMatrix cols(a.p, w, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const auto& f = a.basis[j].flat();
    for (std::size_t r = 0; r < w; ++r) cols.set(r, j, static_cast<i64>(f[r]));
  }
  const auto sol = cols.solve(vec_rm(x));
  if (!sol) return std::nullopt;
  std::vector<u64> out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = sol->at(j, 0);
  return out;
}

bool algebra_contains(const MatrixAlgebra& a, const FpMatrix& x) {
  return algebra_coords(a, x).has_value();
}

std::vector<FpMatrix> center_basis(const MatrixAlgebra& a) {
  const std::size_t m = a.dim();
  if (m == 0) return {};
  const std::size_t w = a.ambient * a.ambient;
  FpMatrix cons(a.p, m * w, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const FpMatrix comm = a.basis[j] * a.basis[i] - a.basis[i] * a.basis[j];
      const auto& f = comm.flat();
      for (std::size_t r = 0; r < w; ++r)
        cons.set(i * w + r, j, static_cast<i64>(f[r]));
    }
  const FpMatrix kern = cons.nullspace();
  std::vector<FpMatrix> out;
  for (std::size_t c = 0; c < kern.cols(); ++c) {
    FpMatrix z(a.p, a.ambient, a.ambient);
    for (std::size_t j = 0; j < m; ++j)
      if (kern.at(j, c) != 0)
        z = z + a.basis[j].scalar_mul(static_cast<i64>(kern.at(j, c)));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<FpMatrix> radical_basis(const MatrixAlgebra& a) {
  const u64 p = a.p;
  const std::size_t n = a.ambient;
  const auto rad = trace_filtration(a);

  EchelonSpan js(p, n * n);
  for (const auto& j : rad) js.add(j.flat());
  for (const auto& b : a.basis)
    for (const auto& j : rad) {
      ensure(js.contains((b * j).flat()), "radical candidate is not a left ideal");
      ensure(js.contains((j * b).flat()), "radical candidate is not a right ideal");
    }

  std::vector<FpMatrix> layer = rad;
  std::size_t steps = 0;
  while (!layer.empty()) {
    ensure(++steps <= n, "radical candidate fails nilpotency");
    EchelonSpan nxt(p, n * n);
    for (const auto& x : layer)
      for (const auto& j : rad) nxt.add((x * j).flat());
    layer = span_elements(p, n, nxt);
  }

  const auto quo = quotient_modulo(a, rad);
  ensure(trace_filtration(quo.alg).empty(), "quotient retains a radical part");
  return rad;
}

QuotientAlgebra quotient_modulo(const MatrixAlgebra& a,
                                const std::vector<FpMatrix>& ideal) {
  const u64 p = a.p;
  const std::size_t n = a.ambient;
  const std::size_t w = n * n;

  EchelonSpan jspan(p, w);
  for (const auto& j : ideal) {
    check_member(a, j, "ideal element has the wrong shape or modulus");
    jspan.add(j.flat());
  }
  const auto jbasis = span_elements(p, n, jspan);
  const std::size_t jdim = jbasis.size();

  EchelonSpan combined = jspan;
  std::vector<FpMatrix> lifts;
  for (const auto& b : a.basis)
    if (combined.add(b.flat())) lifts.push_back(b);
  const std::size_t q = lifts.size();
  ensure(jdim + q == combined.dim(), "quotient dimension bookkeeping failed");
  require(q >= 1, "quotient by the whole algebra");

  // One decomposition basis [ideal | lifts]; solve all products in one pass.
  FpMatrix full(p, w, jdim + q);
  for (std::size_t c = 0; c < jdim; ++c) {
    const auto& f = jbasis[c].flat();
    for (std::size_t r = 0; r < w; ++r) full.set(r, c, static_cast<i64>(f[r]));
  }
  for (std::size_t c = 0; c < q; ++c) {
    const auto& f = lifts[c].flat();
    for (std::size_t r = 0; r < w; ++r)
      full.set(r, jdim + c, static_cast<i64>(f[r]));
  }
  FpMatrix rhs(p, w, q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const auto f = (lifts[i] * lifts[j]).flat();
      for (std::size_t r = 0; r < w; ++r)
        rhs.set(r, i * q + j, static_cast<i64>(f[r]));
    }
  const auto sols = full.solve(rhs);
  ensure(sols.has_value(), "quotient products escaped the algebra");

  std::vector<FpMatrix> regular;
  regular.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    FpMatrix li(p, q, q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t j = 0; j < q; ++j)
        li.set(r, j, static_cast<i64>(sols->at(jdim + r, i * q + j)));
    regular.push_back(std::move(li));
  }

  EchelonSpan indep(p, q * q);
  for (const auto& li : regular)
    ensure(indep.add(li.flat()), "regular representation is not faithful");

  const auto one = full.solve(vec_rm(FpMatrix::identity(p, n)));
  ensure(one.has_value(), "algebra identity escaped the decomposition basis");
  FpMatrix id_image(p, q, q);
  for (std::size_t i = 0; i < q; ++i)
    if (one->at(jdim + i, 0) != 0)
      id_image = id_image + regular[i].scalar_mul(static_cast<i64>(one->at(jdim + i, 0)));
  ensure(id_image.is_identity(), "quotient lost the identity");

  return QuotientAlgebra{MatrixAlgebra{p, q, std::move(regular)}, std::move(lifts)};
}

namespace {

// Frobenius action z -> z^p expressed on a basis of a commutative subspace.
FpMatrix frobenius_on(const std::vector<FpMatrix>& zbasis, u64 p, std::size_t n) {
  const std::size_t zd = zbasis.size();
  const std::size_t w = n * n;
  FpMatrix cols(p, w, zd), rhs(p, w, zd);
  for (std::size_t j = 0; j < zd; ++j) {
    const auto& f = zbasis[j].flat();
    const auto g = zbasis[j].pow(p).flat();
    for (std::size_t r = 0; r < w; ++r) {
      cols.set(r, j, static_cast<i64>(f[r]));
      rhs.set(r, j, static_cast<i64>(g[r]));
    }
  }
  const auto phi = cols.solve(rhs);
  ensure(phi.has_value(), "p-th powers left the span of the center");
  return *phi;
}

FpMatrix combine(const std::vector<FpMatrix>& basis, const FpMatrix& coeff_col,
                 u64 p, std::size_t n) {
  FpMatrix out(p, n, n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (coeff_col.at(j, 0) != 0)
      out = out + basis[j].scalar_mul(static_cast<i64>(coeff_col.at(j, 0)));
  return out;
}

// Solves l e = l for all basis elements l of a (left or two-sided) ideal
// inside a semisimple algebra; the solution is an idempotent generating it.
FpMatrix right_identity_of(const std::vector<FpMatrix>& ell, u64 p, std::size_t n) {
  const std::size_t r = ell.size();
  const std::size_t w = n * n;
  FpMatrix lhs(p, r * w, r), rhs(p, r * w, 1);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& fi = ell[i].flat();
    for (std::size_t k = 0; k < w; ++k)
      rhs.set(i * w + k, 0, static_cast<i64>(fi[k]));
    for (std::size_t j = 0; j < r; ++j) {
      const auto f = (ell[i] * ell[j]).flat();
      for (std::size_t k = 0; k < w; ++k)
        lhs.set(i * w + k, j, static_cast<i64>(f[k]));
    }
  }
  const auto sol = lhs.solve(rhs);
  ensure(sol.has_value(), "ideal has no right identity");
  FpMatrix e(p, n, n);
  for (std::size_t j = 0; j < r; ++j)
    if (sol->at(j, 0) != 0)
      e = e + ell[j].scalar_mul(static_cast<i64>(sol->at(j, 0)));
  ensure(e * e == e, "right identity is not idempotent");
  ensure(!e.is_zero() && !e.is_identity(), "ideal idempotent is trivial");
  return e;
}

// A nonzero singular element of a semisimple algebra known not to be a
// division ring.  Scans basis elements, sums and products via minimal
// polynomial factors, then falls back to exhaustive search when feasible.
FpMatrix find_zero_divisor(const MatrixAlgebra& q) {
  const u64 p = q.p;
  const std::size_t n = q.ambient;
  std::vector<FpMatrix> cands;
  for (const auto& b : q.basis) cands.push_back(b);
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j)
      cands.push_back(q.basis[i] + q.basis[j]);
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j)
      if (i != j) cands.push_back(q.basis[i] * q.basis[j]);
  for (const auto& c : cands) {
    if (c.is_zero()) continue;
    if (c.rank() < n) return c;
    const FpPoly mu = min_poly(c);
    if (const auto f = proper_factor(mu)) {
      FpMatrix z = f->eval_matrix(c);
      ensure(!z.is_zero() && z.rank() < n, "polynomial factor gave no zero divisor");
      return z;
    }
  }
  // Exhaustive sweep in basis coordinates, smallest vectors first.
  double size = 1;
  for (std::size_t i = 0; i < q.dim(); ++i) size *= static_cast<double>(p);
  if (size <= (1u << 20)) {
    std::vector<u64> odo(q.dim(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < odo.size() && odo[pos] + 1 == p) odo[pos++] = 0;
      if (pos == odo.size()) break;
      ++odo[pos];
      FpMatrix z(p, n, n);
      for (std::size_t j = 0; j < q.dim(); ++j)
        if (odo[j] != 0) z = z + q.basis[j].scalar_mul(static_cast<i64>(odo[j]));
      if (!z.is_zero() && z.rank() < n) return z;
    }
  }
  throw consistency_error("zero divisor certification failed");
}

} // namespace

std::size_t block_count_semisimple(const MatrixAlgebra& q) {
  const auto z = center_basis(q);
  require(!z.empty(), "semisimple algebra must have a nonzero center");
  const FpMatrix phi = frobenius_on(z, q.p, q.ambient);
  return (phi - FpMatrix::identity(q.p, z.size())).nullspace().cols();
}

LocalSplit split_or_certify_local(const MatrixAlgebra& a) {
  require(a.dim() >= 1, "cannot analyse the zero algebra");
  const u64 p = a.p;
  const std::size_t n = a.ambient;

  const auto rad = radical_basis(a);
  const auto quo = quotient_modulo(a, rad);
  const MatrixAlgebra& q = quo.alg;
  const std::size_t qn = q.ambient;

  const auto z = center_basis(q);
  ensure(!z.empty(), "semisimple quotient has no center");
  const FpMatrix phi = frobenius_on(z, p, qn);
  const FpMatrix fixed = (phi - FpMatrix::identity(p, z.size())).nullspace();
  const std::size_t blocks = fixed.cols();
  ensure(blocks >= 1, "semisimple quotient has no blocks");

  FpMatrix ebar(p, 0, 0);
  if (blocks >= 2) {
    // A Frobenius-fixed central element outside GF(p)*1 factors x^p - x,
    // so one of its GF(p) translates is a central zero divisor.
    EchelonSpan scalars(p, qn * qn);
    scalars.add(FpMatrix::identity(p, qn).flat());
    FpMatrix zfix(p, 0, 0);
    bool have = false;
    for (std::size_t c = 0; c < blocks && !have; ++c) {
      const FpMatrix cand = combine(z, fixed.col(c), p, qn);
      if (!scalars.contains(cand.flat())) {
        zfix = cand;
        have = true;
      }
    }
    ensure(have, "fixed space of the center is only the scalars");
    FpMatrix zd(p, 0, 0);
    have = false;
    for (u64 s = 0; s < p && !have; ++s) {
      const FpMatrix cand =
          zfix - FpMatrix::identity(p, qn).scalar_mul(static_cast<i64>(s));
      if (!cand.is_zero() && cand.rank() < qn) {
        zd = cand;
        have = true;
      }
    }
    ensure(have, "central element produced no singular translate");
    EchelonSpan ispan(p, qn * qn);
    for (const auto& b : q.basis) ispan.add((b * zd).flat());
    ebar = right_identity_of(span_elements(p, qn, ispan), p, qn);
  } else {
    if (q.dim() == z.size()) return LocalSplit{true, std::nullopt};
    const FpMatrix zd = find_zero_divisor(q);
    EchelonSpan ispan(p, qn * qn);
    for (const auto& b : q.basis) ispan.add((b * zd).flat());
    ebar = right_identity_of(span_elements(p, qn, ispan), p, qn);
  }

  const auto gamma = algebra_coords(q, ebar);
  ensure(gamma.has_value(), "idempotent escaped the quotient algebra");
  FpMatrix e(p, n, n);
  for (std::size_t j = 0; j < q.dim(); ++j)
    if ((*gamma)[j] != 0)
      e = e + quo.lifts[j].scalar_mul(static_cast<i64>((*gamma)[j]));

  // Newton lifting along the radical: the defect e^2 - e squares each round.
  bool done = false;
  for (std::size_t it = 0; it < 64 && !done; ++it) {
    const FpMatrix e2 = e * e;
    if (e2 == e) {
      done = true;
      break;
    }
    e = e2 * (FpMatrix::identity(p, n).scalar_mul(3) - e.scalar_mul(2));
  }
  ensure(done, "idempotent lifting did not converge");
  ensure(!e.is_zero() && !e.is_identity(), "lifted idempotent is trivial");
  return LocalSplit{false, e};
}

} // namespace gw
