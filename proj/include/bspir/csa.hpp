// Cauchy-Vandermonde alignment matrix for the Byzantine SPIR scheme:
// column l < L of the N x N matrix holds 1/(f_l - alpha_n), the remaining
// N - L columns hold the Vandermonde powers alpha_n^j. Its inverse separates
// the downloaded answers into message rows, masked-interference rows, and
// pure-syndrome rows.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bspir/field.hpp"

namespace bspir {

enum class ParamErrorCode {
  TooManyByzantine,   // N <= 4B
  BadMessageLength,   // L != N - 4B
  ModulusNotPrime,
  FieldTooSmall,      // q < N + L
  DuplicateAlpha,
  DuplicateF,
  AlphaFCollision,
  BadMessageCount,    // K < 1
  BadPointCount,      // |alphas| != N or |fs| != L, or a point >= q
};

class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ParamErrorCode code() const { return code_; }

 private:
  ParamErrorCode code_;
};

// Public protocol parameters. Server indices are 1-based throughout the
// public API (alphas[n-1] is server n's evaluation point).
struct PirParams {
  int n = 0;  // servers
  int b = 0;  // Byzantine bound
  int k = 0;  // messages
  int l = 0;  // symbols per message, must equal n - 4b
  std::uint64_t q = 0;
  std::vector<Fp> alphas;  // N distinct points
  std::vector<Fp> fs;      // L distinct points, disjoint from alphas

  PrimeField field() const { return PrimeField(q); }
};

// alphas = 1..N, fs = q-1 .. q-L, q = given or the smallest prime >= N+L.
// N+L = 2(N-2B) is even, so the default q strictly exceeds N+L and the two
// point sets never meet.
PirParams make_default_params(int n, int b, int k,
                              std::optional<std::uint64_t> q = std::nullopt);

// Returns params unchanged iff every invariant holds; throws ParamError with
// a distinct code per violation otherwise.
const PirParams& validate_params(const PirParams& params);

class CsaContext {
 public:
  // Validates, builds the CSA matrix and caches its inverse. Immutable after
  // construction; safe for concurrent reads.
  explicit CsaContext(PirParams params);

  const PirParams& params() const { return params_; }
  const PrimeField& field() const { return field_; }
  const FMatrix& csa() const { return csa_; }
  const FMatrix& csa_inv() const { return csa_inv_; }

  // Decoder submatrices for a size-B candidate set (1-based, ascending):
  // Phi = rows L+2B+1 .. L+3B of csa_inv at the candidate columns,
  // Psi = rows L+3B+1 .. N. Matches the worked N=9, B=2 matrices exactly.
  std::pair<FMatrix, FMatrix> candidate_submatrices(
      const std::vector<int>& candidate) const;

  // Phi stacked over Psi: rows L+2B+1 .. N of csa_inv at candidate columns.
  FMatrix syndrome_matrix(const std::vector<int>& candidate) const;

 private:
  std::vector<std::size_t> candidate_cols(const std::vector<int>& candidate) const;

  PirParams params_;
  PrimeField field_;
  FMatrix csa_;
  FMatrix csa_inv_;
};

}  // namespace bspir
