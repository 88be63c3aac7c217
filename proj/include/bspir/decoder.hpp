// Candidate-set syndrome decoder. Applies CSA^{-1} to the N downloaded
// answers, reads the last 2B rows as a syndrome, and searches size-B
// candidate corruption sets in lexicographic order for one whose syndrome
// columns explain it. Consumes only public information.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bspir/csa.hpp"
#include "bspir/field.hpp"

namespace bspir {

enum class DecodeErrorKind {
  NoConsistentCandidate,  // adversary outside the model, or corrupt params
  AmbiguousDecode,        // distinct messages from distinct consistent sets
};

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DecodeErrorKind kind() const { return kind_; }

 private:
  DecodeErrorKind kind_;
};

struct DecodeResult {
  FVector message;                // recovered W_theta symbols, length L
  std::vector<int> byz_estimate;  // first consistent candidate set, 1-based
  FVector delta_hat;              // recovered corruption magnitudes, length B
  std::size_t candidates_tested = 0;
};

// Some delta with syndrome_matrix(ctx, candidate) * delta = syndrome, if it
// exists. Column-space membership generalizes the Phi Psi^{-1} product test
// to candidates with singular Psi, and coincides with it otherwise.
std::optional<FVector> consistency_check(const CsaContext& ctx,
                                         const std::vector<int>& candidate,
                                         const FVector& syndrome);

// fast = stop at the first consistent candidate; otherwise the remaining
// candidates are enumerated and any disagreeing message raises
// AmbiguousDecode.
DecodeResult decode(const FVector& answers, const CsaContext& ctx,
                    bool fast = false);

}  // namespace bspir
