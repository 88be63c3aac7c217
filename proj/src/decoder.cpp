#include "bspir/decoder.hpp"

namespace bspir {

namespace {

// next size-B combination of [1..N] in lexicographic order; false when done
bool next_combination(std::vector<int>& c, int n) {
  const int b = static_cast<int>(c.size());
  for (int i = b - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - (b - 1 - i)) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < b; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

FVector message_for_candidate(const CsaContext& ctx, const FVector& a_hat,
                              const std::vector<int>& candidate,
                              const FVector& delta_hat) {
  const PrimeField& f = ctx.field();
  const std::size_t l = static_cast<std::size_t>(ctx.params().l);
  std::vector<std::size_t> top_rows, cols;
  for (std::size_t r = 0; r < l; ++r) top_rows.push_back(r);
  for (int s : candidate) cols.push_back(static_cast<std::size_t>(s - 1));
  FMatrix top = ctx.csa_inv().select(top_rows, cols);
  FVector contribution = mat_vec(top, delta_hat);
  FVector msg(l);
  for (std::size_t r = 0; r < l; ++r) msg[r] = f.sub(a_hat[r], contribution[r]);
  return msg;
}

}  // namespace

std::optional<FVector> consistency_check(const CsaContext& ctx,
                                         const std::vector<int>& candidate,
                                         const FVector& syndrome) {
  return solve_in_colspace(ctx.syndrome_matrix(candidate), syndrome);
}

DecodeResult decode(const FVector& answers, const CsaContext& ctx, bool fast) {
  const PirParams& p = ctx.params();
  if (answers.size() != static_cast<std::size_t>(p.n))
    throw DimensionError("decode: need exactly N answers");

  FVector a_hat = mat_vec(ctx.csa_inv(), answers);
  const std::size_t l = static_cast<std::size_t>(p.l);
  const std::size_t b = static_cast<std::size_t>(p.b);
  FVector syndrome(a_hat.begin() + static_cast<std::ptrdiff_t>(l + 2 * b),
                   a_hat.end());

  std::optional<DecodeResult> found;
  std::vector<int> candidate(b);
  for (std::size_t i = 0; i < b; ++i) candidate[i] = static_cast<int>(i + 1);
  std::size_t tested = 0;
  bool more = b > 0;
  // B = 0 never occurs for validated params (CsaContext validates), so the
  // loop always runs at least once.
  while (more) {
    ++tested;
    if (auto delta_hat = consistency_check(ctx, candidate, syndrome)) {
      FVector msg = message_for_candidate(ctx, a_hat, candidate, *delta_hat);
      if (!found) {
        found = DecodeResult{msg, candidate, *delta_hat, 0};
        if (fast) break;
      } else if (msg != found->message) {
        throw DecodeError(DecodeErrorKind::AmbiguousDecode,
                          "distinct consistent candidates decode to "
                          "different messages");
      }
    }
    more = next_combination(candidate, p.n);
  }
  if (!found) {
    throw DecodeError(DecodeErrorKind::NoConsistentCandidate,
                      "no size-B candidate set explains the syndrome");
  }
  found->candidates_tested = tested;
  return *found;
}

}  // namespace bspir
