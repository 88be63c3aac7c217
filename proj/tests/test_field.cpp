#include "doctest.h"

#include "bspir/field.hpp"
#include "bspir/rng.hpp"

using namespace bspir;

namespace {

// independent inverse oracle: scan for the witness
Fp brute_inverse(const PrimeField& f, Fp a) {
  for (Fp b = 1; b < f.modulus(); ++b) {
    if (f.mul(a, b) == 1) return b;
  }
  FAIL("no inverse found");
  return 0;
}

// schoolbook triple-loop product, independent of mat_mul's loop order
FMatrix brute_product(const FMatrix& a, const FMatrix& b) {
  const PrimeField& f = a.field();
  FMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Fp acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  }
  return c;
}

FMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols,
                      FieldSampler& rng) {
  FMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.next_fp(f);
  return m;
}

}  // namespace

TEST_CASE("prime field construction rejects composites") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(10), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(11));
  CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("fp_inv matches the brute-force oracle") {
  PrimeField f11(11), f7(7);
  CHECK(f11.inv(1) == 1);
  CHECK(f11.inv(9) == 5);  // 9*5 = 45 = 1 mod 11
  CHECK(f7.inv(2) == 4);   // 2*4 = 8 = 1 mod 7
  CHECK_THROWS_AS(f11.inv(0), ZeroInverseError);

  for (std::uint64_t q : {2ULL, 3ULL, 7ULL, 11ULL, 101ULL}) {
    PrimeField f(q);
    for (Fp a = 1; a < q; ++a) {
      Fp b = f.inv(a);
      CHECK(b == brute_inverse(f, a));
      CHECK(f.mul(a, b) == 1);
    }
  }
}

TEST_CASE("field axioms hold on randomized triples") {
  PrimeField f(101);
  FieldSampler rng(1234);
  for (int i = 0; i < 500; ++i) {
    Fp a = rng.next_fp(f), b = rng.next_fp(f), c = rng.next_fp(f);
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.sub(a, a) == 0);
    CHECK(f.add(a, f.neg(a)) == 0);
  }
}

TEST_CASE("mat_mul") {
  PrimeField f(11);
  FieldSampler rng(99);

  SUBCASE("identity is neutral") {
    FMatrix m = random_matrix(f, 2, 2, rng);
    CHECK(mat_mul(FMatrix::identity(f, 2), m) == m);
    CHECK(mat_mul(m, FMatrix::identity(f, 2)) == m);
  }

  SUBCASE("worked-example product Phi * Psi^-1") {
    FMatrix phi(f, 2, 2), psi_inv(f, 2, 2);
    phi.at(0, 0) = 8; phi.at(0, 1) = 10; phi.at(1, 0) = 1; phi.at(1, 1) = 9;
    psi_inv.at(0, 0) = 8; psi_inv.at(0, 1) = 3;
    psi_inv.at(1, 0) = 8; psi_inv.at(1, 1) = 0;
    FMatrix prod = mat_mul(phi, psi_inv);
    CHECK(prod == brute_product(phi, psi_inv));
    // frozen from the brute oracle
    CHECK(prod.at(0, 0) == 1);
    CHECK(prod.at(0, 1) == 2);
    CHECK(prod.at(1, 0) == 3);
    CHECK(prod.at(1, 1) == 3);
  }

  SUBCASE("random pairs match the schoolbook oracle") {
    for (int i = 0; i < 50; ++i) {
      FMatrix a = random_matrix(f, 3, 3, rng);
      FMatrix b = random_matrix(f, 3, 3, rng);
      CHECK(mat_mul(a, b) == brute_product(a, b));
    }
  }

  SUBCASE("dimension mismatch throws") {
    FMatrix a(f, 2, 3), b(f, 2, 2);
    CHECK_THROWS_AS(mat_mul(a, b), DimensionError);
    PrimeField f7(7);
    FMatrix c(f7, 3, 2);
    CHECK_THROWS_AS(mat_mul(a, c), DimensionError);
  }
}

TEST_CASE("mat_inv") {
  PrimeField f(11);

  SUBCASE("identity") {
    FMatrix i9 = FMatrix::identity(f, 9);
    CHECK(mat_inv(i9) == i9);
  }

  SUBCASE("worked-example Psi({2,3}) inverse") {
    FMatrix psi(f, 2, 2);
    psi.at(0, 0) = 0; psi.at(0, 1) = 7; psi.at(1, 0) = 4; psi.at(1, 1) = 7;
    FMatrix inv = mat_inv(psi);
    CHECK(inv.at(0, 0) == 8);
    CHECK(inv.at(0, 1) == 3);
    CHECK(inv.at(1, 0) == 8);
    CHECK(inv.at(1, 1) == 0);
    CHECK(mat_mul(psi, inv) == FMatrix::identity(f, 2));
  }

  SUBCASE("singular matrix throws") {
    FMatrix m(f, 2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 2; m.at(1, 1) = 4;
    CHECK_THROWS_AS(mat_inv(m), SingularMatrixError);
  }

  SUBCASE("random invertible matrices round-trip") {
    FieldSampler rng(5);
    int found = 0;
    while (found < 20) {
      FMatrix m = random_matrix(f, 4, 4, rng);
      try {
        FMatrix inv = mat_inv(m);
        CHECK(mat_mul(m, inv) == FMatrix::identity(f, 4));
        ++found;
      } catch (const SingularMatrixError&) {
      }
    }
  }
}

TEST_CASE("solve_in_colspace") {
  PrimeField f(11);

  SUBCASE("identity system") {
    FMatrix i2 = FMatrix::identity(f, 2);
    auto x = solve_in_colspace(i2, {3, 5});
    REQUIRE(x.has_value());
    CHECK(*x == FVector{3, 5});
  }

  SUBCASE("inconsistent tall system") {
    FMatrix m(f, 2, 1);
    m.at(0, 0) = 1; m.at(1, 0) = 2;
    CHECK_FALSE(solve_in_colspace(m, {1, 3}).has_value());
    auto x = solve_in_colspace(m, {1, 2});
    REQUIRE(x.has_value());
    CHECK(*x == FVector{1});
  }

  SUBCASE("constructed rhs is always recovered") {
    FieldSampler rng(77);
    for (int i = 0; i < 100; ++i) {
      FMatrix m = random_matrix(f, 4, 2, rng);
      FVector x0 = {rng.next_fp(f), rng.next_fp(f)};
      FVector y = mat_vec(m, x0);
      auto x = solve_in_colspace(m, y);
      REQUIRE(x.has_value());
      CHECK(mat_vec(m, *x) == y);
    }
  }

  SUBCASE("rank-deficient system keeps free variables at zero") {
    FMatrix m(f, 2, 2);  // second column = 2 * first
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = 6;
    auto x = solve_in_colspace(m, {1, 3});
    REQUIRE(x.has_value());
    CHECK(*x == FVector{1, 0});
  }
}
