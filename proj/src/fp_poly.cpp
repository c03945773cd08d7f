#include "gw/fp_poly.hpp"

#include "gw/error.hpp"

namespace gw {

FpPoly::FpPoly(u64 p) : p_(p) {
  require(is_prime(p), "polynomial modulus must be prime");
}

FpPoly::FpPoly(u64 p, const std::vector<i64>& coeffs) : p_(p) {
  require(is_prime(p), "polynomial modulus must be prime");
  c_.reserve(coeffs.size());
  const i64 sp = static_cast<i64>(p);
  for (i64 c : coeffs) c_.push_back(static_cast<u64>(((c % sp) + sp) % sp));
  trim();
}

FpPoly FpPoly::x(u64 p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(u64 p, i64 c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::degree() const {
  require(!c_.empty(), "zero polynomial has no degree");
  return c_.size() - 1;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  require(p_ == o.p_, "polynomial modulus mismatch");
  FpPoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = (coeff(i) + o.coeff(i)) % p_;
  r.trim();
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + o.scaled(-1); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  require(p_ == o.p_, "polynomial modulus mismatch");
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  FpPoly r(p_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = (r.c_[i + j] + c_[i] * o.c_[j]) % p_;
  }
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(i64 c) const {
  const i64 sp = static_cast<i64>(p_);
  const u64 f = static_cast<u64>(((c % sp) + sp) % sp);
  FpPoly r(p_);
  r.c_.reserve(c_.size());
  for (u64 a : c_) r.c_.push_back(a * f % p_);
  r.trim();
  return r;
}

FpPoly FpPoly::monic() const {
  require(!is_zero(), "cannot normalize the zero polynomial");
  return scaled(static_cast<i64>(fp_inv(c_.back(), p_)));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  require(p_ == d.p_, "polynomial modulus mismatch");
  require(!d.is_zero(), "division by the zero polynomial");
  FpPoly q(p_), r = *this;
  if (r.c_.size() < d.c_.size()) return {q, r};
  q.c_.assign(r.c_.size() - d.c_.size() + 1, 0);
  const u64 lead_inv = fp_inv(d.c_.back(), p_);
  for (std::size_t k = q.c_.size(); k-- > 0;) {
    if (r.c_.size() < d.c_.size() + k) continue;
    const u64 f = r.coeff(d.c_.size() - 1 + k) * lead_inv % p_;
    if (f == 0) continue;
    q.c_[k] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      u64& slot = r.c_[i + k];
      slot = (slot + (p_ - f * d.c_[i] % p_)) % p_;
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

FpPoly FpPoly::derivative() const {
  FpPoly r(p_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * (i % p_) % p_);
  r.trim();
  return r;
}

u64 FpPoly::eval(u64 x) const {
  x %= p_;
  u64 acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
  return acc;
}

FpMatrix FpPoly::eval_matrix(const FpMatrix& m) const {
  require(m.rows() == m.cols(), "polynomial evaluation needs a square matrix");
  require(m.p() == p_, "polynomial/matrix modulus mismatch");
  FpMatrix acc(p_, m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * m;
    if (c_[i] != 0)
      acc = acc + FpMatrix::identity(p_, m.rows()).scalar_mul(static_cast<i64>(c_[i]));
  }
  return acc;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  require(a.p() == b.p(), "polynomial modulus mismatch");
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

FpPoly poly_powmod(FpPoly base, u64 e, const FpPoly& mod) {
  require(!mod.is_zero() && mod.degree() >= 1, "power modulus must have degree >= 1");
  FpPoly acc = FpPoly::constant(base.p(), 1);
  base = base.divmod(mod).second;
  while (e > 0) {
    if (e & 1) acc = (acc * base).divmod(mod).second;
    base = (base * base).divmod(mod).second;
    e >>= 1;
  }
  return acc;
}

FpPoly min_poly(const FpMatrix& m) {
  require(m.rows() == m.cols(), "minimal polynomial needs a square matrix");
  const u64 p = m.p();
  const std::size_t n = m.rows();
  if (n == 0) return FpPoly::constant(p, 1);
  // Krylov on the full matrix: find the first power dependent on the lower ones.
  std::vector<FpMatrix> powers;
  powers.push_back(FpMatrix::identity(p, n));
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    FpMatrix lhs(p, n * n, k);
    for (std::size_t j = 0; j < k; ++j) {
      const FpMatrix v = vec_rm(powers[j]);
      for (std::size_t r = 0; r < n * n; ++r) lhs.set(r, j, v.at(r, 0));
    }
    auto sol = lhs.solve(vec_rm(powers[k]));
    if (sol) {
      std::vector<i64> cs(k + 1, 0);
      for (std::size_t j = 0; j < k; ++j)
        cs[j] = -static_cast<i64>(sol->at(j, 0));
      cs[k] = 1;
      return FpPoly(p, cs);
    }
  }
  throw consistency_error("minimal polynomial search exceeded the dimension bound");
}

namespace {

// mu(x) with mu' = 0 over GF(p) has the form v(x^p) = v(x)^p; return v.
FpPoly p_th_root(const FpPoly& mu) {
  const u64 p = mu.p();
  std::vector<i64> v;
  for (std::size_t i = 0; i * p <= mu.degree(); ++i)
    v.push_back(static_cast<i64>(mu.coeff(i * p)));
  return FpPoly(p, v);
}

} // namespace

std::optional<FpPoly> proper_factor(const FpPoly& mu) {
  require(!mu.is_zero() && mu.degree() >= 1, "factor search needs degree >= 1");
  require(mu.coeffs().back() == 1, "factor search needs a monic polynomial");
  const u64 p = mu.p();
  const std::size_t deg = mu.degree();
  if (deg == 1) return std::nullopt;
  for (u64 a = 0; a < p; ++a)
    if (mu.eval(a) == 0)
      return FpPoly(p, {-static_cast<i64>(a), 1});
  const FpPoly dmu = mu.derivative();
  if (dmu.is_zero()) return p_th_root(mu);
  const FpPoly g = poly_gcd(mu, dmu);
  if (!g.is_zero() && g.degree() >= 1 && g.degree() < deg) return g;
  // Squarefree with no roots: distinct-degree splitting finds a factor
  // whenever one exists, so reaching the end certifies irreducibility.
  FpPoly w = FpPoly::x(p);
  for (std::size_t j = 1; 2 * j <= deg; ++j) {
    w = poly_powmod(w, p, mu);
    const FpPoly g2 = poly_gcd(w - FpPoly::x(p), mu);
    if (!g2.is_zero() && g2.degree() >= 1 && g2.degree() < deg) return g2;
  }
  return std::nullopt;
}

} // namespace gw
