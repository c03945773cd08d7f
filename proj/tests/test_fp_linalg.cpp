#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gw/fp_matrix.hpp"

using gw::FpMatrix;
using gw::u64;

namespace {

FpMatrix random_matrix(u64 p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, static_cast<gw::i64>(rng() % p));
  return m;
}

} // namespace

TEST_CASE("scalar inverses") {
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    for (u64 a = 1; a < p; ++a) CHECK((a * gw::fp_inv(a, p)) % p == 1);
  CHECK_THROWS_AS((void)gw::fp_inv(0, 5), gw::contract_error);
}

TEST_CASE("prime modulus enforced") {
  CHECK_THROWS_AS(FpMatrix(4, 2, 2), gw::contract_error);
  CHECK_THROWS_AS(FpMatrix(1, 1, 1), gw::contract_error);
  CHECK_NOTHROW(FpMatrix(13, 3, 3));
}

TEST_CASE("mixed moduli rejected") {
  FpMatrix a = FpMatrix::identity(2, 2);
  FpMatrix b = FpMatrix::identity(3, 2);
  CHECK_THROWS_AS(a * b, gw::contract_error);
  CHECK_THROWS_AS(a + b, gw::contract_error);
}

TEST_CASE("rref of the all-ones 2x2 over GF(2)") {
  FpMatrix a = FpMatrix::from_rows(2, {{1, 1}, {1, 1}});
  auto rr = a.rref();
  CHECK(rr.rank == 1);
  REQUIRE(rr.pivots.size() == 1);
  CHECK(rr.pivots[0] == 0);
  CHECK(rr.r == FpMatrix::from_rows(2, {{1, 1}, {0, 0}}));
}

TEST_CASE("nullspace of [1 1] over GF(2)") {
  FpMatrix a = FpMatrix::from_rows(2, {{1, 1}});
  FpMatrix n = a.nullspace();
  REQUIRE(n.cols() == 1);
  CHECK(n.at(0, 0) == 1);
  CHECK(n.at(1, 0) == 1);
  CHECK((a * n).is_zero());
}

TEST_CASE("solve upper triangular over GF(2)") {
  FpMatrix a = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
  FpMatrix b = FpMatrix::from_rows(2, {{0}, {1}});
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == FpMatrix::from_rows(2, {{1}, {1}}));
}

TEST_CASE("inconsistent system reports no solution") {
  FpMatrix a = FpMatrix::from_rows(3, {{1, 2}, {2, 4}});
  FpMatrix b = FpMatrix::from_rows(3, {{1}, {1}});
  CHECK(!a.solve(b).has_value());
}

TEST_CASE("solve rejects dimension mismatch") {
  FpMatrix a = FpMatrix::from_rows(2, {{1, 0}});
  FpMatrix b = FpMatrix::from_rows(2, {{1}, {0}});
  CHECK_THROWS_AS((void)a.solve(b), gw::contract_error);
}

TEST_CASE("pow, nilpotency, invertibility") {
  FpMatrix n = FpMatrix::from_rows(5, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(n.is_nilpotent());
  CHECK(!n.is_invertible());
  CHECK(n.pow(3).is_zero());

  FpMatrix u = FpMatrix::from_rows(5, {{1, 1}, {0, 1}});
  CHECK(u.is_invertible());
  CHECK(!u.is_nilpotent());
  CHECK(u.pow(5) == FpMatrix::identity(5, 2)); // unipotent order p
  auto inv = u.inverse();
  REQUIRE(inv.has_value());
  CHECK((*inv * u).is_identity());
}

TEST_CASE("kron and direct_sum shapes") {
  FpMatrix a = FpMatrix::from_rows(3, {{1, 2}, {0, 1}});
  FpMatrix b = FpMatrix::from_rows(3, {{2}});
  FpMatrix k = a.kron(b);
  CHECK(k.rows() == 2);
  CHECK(k.at(0, 1) == 1); // 2*2 = 4 = 1 mod 3
  FpMatrix d = a.direct_sum(b);
  CHECK(d.rows() == 3);
  CHECK(d.at(2, 2) == 2);
  CHECK(d.at(0, 2) == 0);
}

TEST_CASE("randomized properties over GF(2), GF(3), GF(5)") {
  std::mt19937_64 rng(0xC0FFEE);
  for (u64 p : {2ull, 3ull, 5ull}) {
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
      FpMatrix a = random_matrix(p, r, c, rng);

      auto rr = a.rref();
      CHECK(rr.r.rref().r == rr.r); // rref is idempotent

      FpMatrix ns = a.nullspace();
      CHECK(rr.rank + ns.cols() == c); // rank-nullity
      if (ns.cols()) CHECK((a * ns).is_zero());

      FpMatrix x = random_matrix(p, c, 1, rng);
      FpMatrix b = a * x;
      auto sol = a.solve(b);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == b);

      FpMatrix m1 = random_matrix(p, 1 + rng() % 6, 1 + rng() % 6, rng);
      FpMatrix m2 = random_matrix(p, 1 + rng() % 6, 1 + rng() % 6, rng);
      CHECK(m1.kron(m2).rank() == m1.rank() * m2.rank());
    }
  }
}

TEST_CASE("transpose involution and product rule") {
  std::mt19937_64 rng(7);
  FpMatrix a = random_matrix(5, 7, 4, rng);
  FpMatrix b = random_matrix(5, 4, 6, rng);
  CHECK(a.transpose().transpose() == a);
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}

TEST_CASE("empty and degenerate shapes") {
  FpMatrix e(2, 0, 0);
  CHECK(e.rref().rank == 0);
  CHECK(e.is_zero());
  FpMatrix tall(3, 4, 0);
  CHECK(tall.nullspace().cols() == 0);
  FpMatrix wide(3, 0, 4);
  CHECK(wide.nullspace().cols() == 4);
}
