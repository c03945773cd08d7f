#include "gw/fp_matrix.hpp"

#include <algorithm>
#include <limits>

namespace gw {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 fp_inv(u64 a, u64 p) {
  a %= p;
  require(a != 0, "fp_inv: zero has no inverse");
  // extended Euclid on (a, p)
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(p), new_r = static_cast<i64>(a);
  while (new_r != 0) {
    i64 q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

namespace {
u64 reduce_i64(i64 v, u64 p) {
  i64 m = v % static_cast<i64>(p);
  if (m < 0) m += static_cast<i64>(p);
  return static_cast<u64>(m);
}
} // namespace

FpMatrix::FpMatrix(u64 p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  require(is_prime(p), "FpMatrix: modulus must be prime, got " + std::to_string(p));
}

FpMatrix FpMatrix::identity(u64 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(u64 p, const std::vector<std::vector<i64>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows[0].size() : 0;
  FpMatrix m(p, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    require(rows[i].size() == nc, "FpMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.e_[i * nc + j] = reduce_i64(rows[i][j], p);
  }
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, i64 v) {
  require(i < rows_ && j < cols_, "FpMatrix::set: index out of range");
  e_[i * cols_ + j] = reduce_i64(v, p_);
}

bool FpMatrix::lex_less(const FpMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return e_ < o.e_;
}

void FpMatrix::check_same_p(const FpMatrix& o) const {
  require(p_ == o.p_, "FpMatrix: mixed moduli " + std::to_string(p_) + " vs " +
                          std::to_string(o.p_));
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_p(o);
  require(rows_ == o.rows_ && cols_ == o.cols_, "FpMatrix::add: shape mismatch");
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    u64 s = e_[k] + o.e_[k];
    r.e_[k] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_p(o);
  require(rows_ == o.rows_ && cols_ == o.cols_, "FpMatrix::sub: shape mismatch");
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    u64 s = e_[k] + p_ - o.e_[k];
    r.e_[k] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  check_same_p(o);
  require(cols_ == o.rows_, "FpMatrix::mul: inner dimensions differ");
  FpMatrix r(p_, rows_, o.cols_);
  const u64 guard = std::numeric_limits<u64>::max() - (p_ - 1) * (p_ - 1);
  // i-k-j order: the inner loop walks both r and o row-wise.
  for (std::size_t i = 0; i < rows_; ++i) {
    u64* out = &r.e_[i * o.cols_];
    for (std::size_t k = 0; k < cols_; ++k) {
      u64 a = e_[i * cols_ + k];
      if (a == 0) continue;
      const u64* brow = &o.e_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) {
        u64 t = a * brow[j];
        if (out[j] > guard) out[j] %= p_;
        out[j] += t;
      }
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out[j] %= p_;
  }
  return r;
}

FpMatrix FpMatrix::scalar_mul(i64 c) const {
  u64 cr = reduce_i64(c, p_);
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = (e_[k] * cr) % p_;
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
  return r;
}

FpMatrix FpMatrix::kron(const FpMatrix& o) const {
  check_same_p(o);
  FpMatrix r(p_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      u64 a = e_[i * cols_ + j];
      if (a == 0) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) {
          r.e_[(i * o.rows_ + k) * r.cols_ + (j * o.cols_ + l)] =
              (a * o.e_[k * o.cols_ + l]) % p_;
        }
    }
  return r;
}

FpMatrix FpMatrix::direct_sum(const FpMatrix& o) const {
  check_same_p(o);
  FpMatrix r(p_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.e_[i * r.cols_ + j] = e_[i * cols_ + j];
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j)
      r.e_[(rows_ + i) * r.cols_ + (cols_ + j)] = o.e_[i * o.cols_ + j];
  return r;
}

FpMatrix FpMatrix::pow(u64 e) const {
  require(rows_ == cols_, "FpMatrix::pow: matrix not square");
  FpMatrix acc = identity(p_, rows_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool FpMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](u64 v) { return v == 0; });
}

bool FpMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(p_, rows_);
}

bool FpMatrix::is_nilpotent() const {
  require(rows_ == cols_, "FpMatrix::is_nilpotent: matrix not square");
  return pow(rows_).is_zero();
}

RrefResult FpMatrix::rref() const {
  RrefResult out;
  out.r = *this;
  std::vector<u64>& w = out.r.e_;
  const u64 p = p_;
  // Entries in w stay below p + min(rows,cols) * (p-1)^2 between full
  // reductions; with p < 2^31 a per-row counter keeps us clear of overflow.
  const u64 step = (p - 1) * (p - 1);
  const u64 max_axpys = step ? (std::numeric_limits<u64>::max() - p) / step : ~0ull;
  std::vector<u64> dirty(rows_, 0);

  auto reduce_row = [&](std::size_t r) {
    if (!dirty[r]) return;
    for (std::size_t j = 0; j < cols_; ++j) w[r * cols_ + j] %= p;
    dirty[r] = 0;
  };

  std::size_t pr = 0; // next pivot row
  for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t r = pr; r < rows_; ++r) {
      if (w[r * cols_ + c] % p != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    reduce_row(sel);
    if (sel != pr) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(w[sel * cols_ + j], w[pr * cols_ + j]);
      std::swap(dirty[sel], dirty[pr]);
    }
    u64 inv = fp_inv(w[pr * cols_ + c], p);
    if (inv != 1)
      for (std::size_t j = c; j < cols_; ++j) w[pr * cols_ + j] = (w[pr * cols_ + j] * inv) % p;
    const u64* piv = &w[pr * cols_];
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      u64 f = w[r * cols_ + c] % p;
      if (f == 0) continue;
      if (dirty[r] + 1 > max_axpys) reduce_row(r);
      u64 nf = p - f;
      u64* row = &w[r * cols_];
      for (std::size_t j = c; j < cols_; ++j) row[j] += nf * piv[j];
      row[c] = 0;
      ++dirty[r];
    }
    out.pivots.push_back(c);
    ++pr;
  }
  for (std::size_t r = 0; r < rows_; ++r) reduce_row(r);
  out.rank = out.pivots.size();
  return out;
}

std::size_t FpMatrix::rank() const { return rref().rank; }

bool FpMatrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

FpMatrix FpMatrix::nullspace() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMatrix basis(p_, cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.e_[fc * basis.cols_ + k] = 1 % p_;
    for (std::size_t r = 0; r < rr.rank; ++r) {
      u64 v = rr.r.at(r, fc);
      if (v != 0) basis.e_[rr.pivots[r] * basis.cols_ + k] = p_ - v;
    }
  }
  return basis;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& b) const {
  check_same_p(b);
  require(b.rows() == rows_, "FpMatrix::solve: rhs has wrong height");
  RrefResult rr = hstack(b).rref();
  // Inconsistent iff some pivot lands in the rhs block.
  for (std::size_t c : rr.pivots)
    if (c >= cols_) return std::nullopt;
  FpMatrix x(p_, cols_, b.cols());
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.e_[rr.pivots[r] * b.cols() + j] = rr.r.at(r, cols_ + j);
  return x;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
  require(rows_ == cols_, "FpMatrix::inverse: matrix not square");
  RrefResult rr = hstack(identity(p_, rows_)).rref();
  if (rr.rank < rows_ || (rows_ && rr.pivots.back() >= cols_)) return std::nullopt;
  for (std::size_t r = 0; r < rows_; ++r)
    if (rr.pivots[r] != r) return std::nullopt;
  return rr.r.submatrix(0, cols_, rows_, cols_);
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
  check_same_p(o);
  require(rows_ == o.rows_, "FpMatrix::hstack: row counts differ");
  FpMatrix r(p_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy_n(&e_[i * cols_], cols_, &r.e_[i * r.cols_]);
    std::copy_n(&o.e_[i * o.cols_], o.cols_, &r.e_[i * r.cols_ + cols_]);
  }
  return r;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
  check_same_p(o);
  require(cols_ == o.cols_, "FpMatrix::vstack: column counts differ");
  FpMatrix r(p_, rows_ + o.rows_, cols_);
  std::copy(e_.begin(), e_.end(), r.e_.begin());
  std::copy(o.e_.begin(), o.e_.end(), r.e_.begin() + static_cast<std::ptrdiff_t>(e_.size()));
  return r;
}

FpMatrix FpMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "FpMatrix::submatrix: out of range");
  FpMatrix r(p_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(&e_[(r0 + i) * cols_ + c0], nc, &r.e_[i * nc]);
  return r;
}

FpMatrix FpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  FpMatrix r(p_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    require(idx[i] < rows_, "FpMatrix::select_rows: index out of range");
    std::copy_n(&e_[idx[i] * cols_], cols_, &r.e_[i * cols_]);
  }
  return r;
}

FpMatrix FpMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  FpMatrix r(p_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    require(idx[j] < cols_, "FpMatrix::select_cols: index out of range");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      r.e_[i * idx.size() + j] = e_[i * cols_ + idx[j]];
  return r;
}

FpMatrix vec_rm(const FpMatrix& a) {
  FpMatrix v(a.p(), a.rows() * a.cols(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      v.set(i * a.cols() + j, 0, static_cast<i64>(a.at(i, j)));
  return v;
}

FpMatrix unvec_rm(const FpMatrix& v, std::size_t rows, std::size_t cols) {
  require(v.cols() == 1 && v.rows() == rows * cols, "unvec_rm: shape mismatch");
  FpMatrix a(v.p(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.set(i, j, static_cast<i64>(v.at(i * cols + j, 0)));
  return a;
}

} // namespace gw
