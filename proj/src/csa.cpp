#include "bspir/csa.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bspir {

PirParams make_default_params(int n, int b, int k,
                              std::optional<std::uint64_t> q_opt) {
  PirParams p;
  p.n = n;
  p.b = b;
  p.k = k;
  p.l = n - 4 * b;
  if (q_opt) {
    p.q = *q_opt;
  } else {
    std::uint64_t q = static_cast<std::uint64_t>(n + std::max(p.l, 0));
    while (!is_prime_u64(q)) ++q;
    p.q = q;
  }
  p.alphas.resize(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(p.alphas.begin(), p.alphas.end(), Fp{1});
  for (int l = 1; l <= p.l; ++l) p.fs.push_back(p.q - static_cast<Fp>(l));
  return p;
}

const PirParams& validate_params(const PirParams& p) {
  if (p.b < 1 || p.n <= 4 * p.b) {
    throw ParamError(ParamErrorCode::TooManyByzantine,
                     "need N > 4B and B >= 1");
  }
  if (p.l != p.n - 4 * p.b) {
    throw ParamError(ParamErrorCode::BadMessageLength, "L must equal N - 4B");
  }
  if (p.k < 1) {
    throw ParamError(ParamErrorCode::BadMessageCount, "K must be >= 1");
  }
  if (!is_prime_u64(p.q)) {
    throw ParamError(ParamErrorCode::ModulusNotPrime,
                     "q = " + std::to_string(p.q) + " is not prime");
  }
  if (p.q < static_cast<std::uint64_t>(p.n + p.l)) {
    throw ParamError(ParamErrorCode::FieldTooSmall, "need q >= N + L");
  }
  if (p.alphas.size() != static_cast<std::size_t>(p.n) ||
      p.fs.size() != static_cast<std::size_t>(p.l)) {
    throw ParamError(ParamErrorCode::BadPointCount,
                     "need N alpha points and L f points");
  }
  for (Fp a : p.alphas) {
    if (a >= p.q)
      throw ParamError(ParamErrorCode::BadPointCount, "alpha point >= q");
  }
  for (Fp f : p.fs) {
    if (f >= p.q)
      throw ParamError(ParamErrorCode::BadPointCount, "f point >= q");
  }
  std::set<Fp> aset(p.alphas.begin(), p.alphas.end());
  if (aset.size() != p.alphas.size()) {
    throw ParamError(ParamErrorCode::DuplicateAlpha, "duplicate alpha point");
  }
  std::set<Fp> fset(p.fs.begin(), p.fs.end());
  if (fset.size() != p.fs.size()) {
    throw ParamError(ParamErrorCode::DuplicateF, "duplicate f point");
  }
  for (Fp f : p.fs) {
    if (aset.count(f)) {
      throw ParamError(ParamErrorCode::AlphaFCollision,
                       "point " + std::to_string(f) + " is both alpha and f");
    }
  }
  return p;
}

namespace {

FMatrix build_csa_matrix(const PirParams& p, const PrimeField& f) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  const std::size_t l = static_cast<std::size_t>(p.l);
  FMatrix m(f, n, n);
  for (std::size_t row = 0; row < n; ++row) {
    Fp alpha = p.alphas[row];
    for (std::size_t col = 0; col < l; ++col) {
      m.at(row, col) = f.inv(f.sub(p.fs[col], alpha));
    }
    for (std::size_t j = 0; j < n - l; ++j) {
      m.at(row, l + j) = f.pow(alpha, j);
    }
  }
  return m;
}

}  // namespace

CsaContext::CsaContext(PirParams params)
    : params_(validate_params(params)),
      field_(params_.q),
      csa_(build_csa_matrix(params_, field_)),
      csa_inv_(mat_inv(csa_)) {}

std::vector<std::size_t> CsaContext::candidate_cols(
    const std::vector<int>& candidate) const {
  if (candidate.size() != static_cast<std::size_t>(params_.b)) {
    throw DimensionError("candidate set must have exactly B servers");
  }
  std::vector<std::size_t> cols;
  for (int s : candidate) {
    if (s < 1 || s > params_.n) {
      throw DimensionError("candidate server index out of range");
    }
    cols.push_back(static_cast<std::size_t>(s - 1));
  }
  return cols;
}

std::pair<FMatrix, FMatrix> CsaContext::candidate_submatrices(
    const std::vector<int>& candidate) const {
  const auto cols = candidate_cols(candidate);
  const std::size_t l = static_cast<std::size_t>(params_.l);
  const std::size_t b = static_cast<std::size_t>(params_.b);
  std::vector<std::size_t> phi_rows, psi_rows;
  for (std::size_t i = 0; i < b; ++i) phi_rows.push_back(l + 2 * b + i);
  for (std::size_t i = 0; i < b; ++i) psi_rows.push_back(l + 3 * b + i);
  return {csa_inv_.select(phi_rows, cols), csa_inv_.select(psi_rows, cols)};
}

FMatrix CsaContext::syndrome_matrix(const std::vector<int>& candidate) const {
  const auto cols = candidate_cols(candidate);
  const std::size_t l = static_cast<std::size_t>(params_.l);
  const std::size_t b = static_cast<std::size_t>(params_.b);
  const std::size_t n = static_cast<std::size_t>(params_.n);
  std::vector<std::size_t> rows;
  for (std::size_t r = l + 2 * b; r < n; ++r) rows.push_back(r);
  return csa_inv_.select(rows, cols);
}

}  // namespace bspir
