#include "doctest.h"

#include "bspir/csa.hpp"
#include "bspir/rng.hpp"

using namespace bspir;

namespace {

ParamErrorCode error_code(const PirParams& p) {
  try {
    validate_params(p);
  } catch (const ParamError& e) {
    return e.code();
  }
  FAIL("expected a ParamError");
  return ParamErrorCode::BadMessageLength;
}

}  // namespace

TEST_CASE("make_default_params reproduces the worked instance") {
  PirParams p = make_default_params(9, 2, 1);
  CHECK(p.l == 1);
  CHECK(p.q == 11);
  CHECK(p.alphas == FVector{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(p.fs == FVector{10});
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("validate_params error variants") {
  PirParams good = make_default_params(9, 2, 1);

  SUBCASE("wrong L") {
    PirParams p = good;
    p.l = 2;
    CHECK(error_code(p) == ParamErrorCode::BadMessageLength);
  }
  SUBCASE("alpha/f collision") {
    PirParams p = good;
    p.fs = {9};
    CHECK(error_code(p) == ParamErrorCode::AlphaFCollision);
  }
  SUBCASE("non-prime modulus") {
    PirParams p = good;
    p.q = 12;
    CHECK(error_code(p) == ParamErrorCode::ModulusNotPrime);
  }
  SUBCASE("field too small") {
    PirParams p = make_default_params(9, 2, 1, 7);
    p.alphas = {1, 2, 3, 4, 5, 6, 0, 0, 0};  // points must stay < q
    CHECK(error_code(p) == ParamErrorCode::FieldTooSmall);
  }
  SUBCASE("duplicate alpha") {
    PirParams p = good;
    p.alphas[8] = 1;
    CHECK(error_code(p) == ParamErrorCode::DuplicateAlpha);
  }
  SUBCASE("N <= 4B") {
    PirParams p = make_default_params(8, 2, 1);
    p.l = 0;
    CHECK(error_code(p) == ParamErrorCode::TooManyByzantine);
  }
  SUBCASE("B = 0 rejected outside oracle mode") {
    PirParams p = make_default_params(5, 0, 1);
    CHECK(error_code(p) == ParamErrorCode::TooManyByzantine);
  }
}

TEST_CASE("CSA matrix entries and cached inverse") {
  CsaContext ctx(make_default_params(9, 2, 1));
  const FMatrix& csa = ctx.csa();
  PrimeField f = ctx.field();

  // server 1 (alpha=1): Cauchy entry 1/(10-1) = 5, Vandermonde all ones
  CHECK(csa.at(0, 0) == 5);
  for (std::size_t j = 1; j < 9; ++j) CHECK(csa.at(0, j) == 1);
  // server 2 (alpha=2): powers of 2
  CHECK(csa.at(1, 1) == 1);
  CHECK(csa.at(1, 2) == 2);
  CHECK(csa.at(1, 8) == f.pow(2, 7));

  CHECK(mat_mul(csa, ctx.csa_inv()) == FMatrix::identity(f, 9));

  // inverse columns frozen from the worked example's corruption coefficients
  CHECK(ctx.csa_inv().column(0) == FVector{9, 5, 6, 1, 10, 8, 3, 4, 7});
  CHECK(ctx.csa_inv().column(1) == FVector{5, 7, 3, 4, 3, 8, 1, 0, 4});
}

TEST_CASE("candidate submatrices reproduce the worked example") {
  CsaContext ctx(make_default_params(9, 2, 1));

  auto [phi, psi] = ctx.candidate_submatrices({2, 3});
  CHECK(phi.at(0, 0) == 8);
  CHECK(phi.at(0, 1) == 10);
  CHECK(phi.at(1, 0) == 1);
  CHECK(phi.at(1, 1) == 9);
  CHECK(psi.at(0, 0) == 0);
  CHECK(psi.at(0, 1) == 7);
  CHECK(psi.at(1, 0) == 4);
  CHECK(psi.at(1, 1) == 7);

  auto [phi12, psi12] = ctx.candidate_submatrices({1, 2});
  CHECK(phi12.column(0) == FVector{8, 3});
  CHECK(psi12.column(0) == FVector{4, 7});

  CHECK_THROWS_AS(ctx.candidate_submatrices({1}), DimensionError);
  CHECK_THROWS_AS(ctx.candidate_submatrices({1, 10}), DimensionError);
}

TEST_CASE("syndrome matrix stacks Phi over Psi") {
  CsaContext ctx(make_default_params(9, 2, 1));
  FMatrix syn = ctx.syndrome_matrix({2, 3});
  auto [phi, psi] = ctx.candidate_submatrices({2, 3});
  REQUIRE(syn.rows() == 4);
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(syn.at(0, c) == phi.at(0, c));
    CHECK(syn.at(1, c) == phi.at(1, c));
    CHECK(syn.at(2, c) == psi.at(0, c));
    CHECK(syn.at(3, c) == psi.at(1, c));
  }

  FMatrix syn12 = ctx.syndrome_matrix({1, 2});
  CHECK(syn12.column(0) == FVector{8, 3, 4, 7});
  CHECK(syn12.column(1) == FVector{8, 1, 0, 4});
}

TEST_CASE("CSA is invertible across randomized valid parameter draws") {
  FieldSampler rng(3);
  const int configs[][2] = {{5, 1}, {9, 2}, {12, 2}, {13, 3}, {7, 1}, {11, 2}};
  for (auto [n, b] : configs) {
    int k = static_cast<int>(rng.next_u64() % 3) + 1;
    CHECK_NOTHROW(CsaContext(make_default_params(n, b, k)));
  }
  // a larger prime than the default also works
  CHECK_NOTHROW(CsaContext(make_default_params(9, 2, 1, 23)));
}
