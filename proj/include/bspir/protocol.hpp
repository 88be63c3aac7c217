// Honest protocol parties: the dealer encoding noisy storage replicas, the
// user generating aligned queries, the common-randomness dealer distributing
// mask shares, and the honest server answer computation.
//
// All functions are pure in (inputs, randomness); none of them validates
// params beyond dimension checks, so degenerate instances (e.g. B = 0) can
// be driven directly by the oracle.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bspir/csa.hpp"
#include "bspir/field.hpp"
#include "bspir/rng.hpp"

namespace bspir {

// K x L: row k is message k, column l is symbol position l.
struct MessageTable {
  FMatrix w;
};

// Storage noise Z_{l,i}: L x B grid of K-length vectors, index (l, i).
struct DealerRandomness {
  std::vector<FVector> z;  // size L*B, entry l*B + i
};

// Query noise R_{l,i}, same layout.
struct UserRandomness {
  std::vector<FVector> r;  // size L*B
};

// The 2B secret mask coefficients Z'.
struct MaskSecrets {
  FVector zprime;
};

struct MaskShare {
  int server = 0;  // 1-based
  Fp zhat = 0;
};

struct StorageShare {
  int server = 0;
  std::vector<FVector> blocks;  // L blocks of length K
};

struct QueryShare {
  int server = 0;
  std::vector<FVector> blocks;  // L blocks of length K
};

MessageTable sample_message_table(const PirParams& params, FieldSampler& rng);
DealerRandomness sample_dealer_randomness(const PirParams& params, FieldSampler& rng);
UserRandomness sample_user_randomness(const PirParams& params, FieldSampler& rng);
MaskSecrets sample_mask_secrets(const PirParams& params, FieldSampler& rng);

// Zero-noise variants, used by the oracle's mutation checks.
DealerRandomness zero_dealer_randomness(const PirParams& params);
UserRandomness zero_user_randomness(const PirParams& params);
MaskSecrets zero_mask_secrets(const PirParams& params);

// Share n, block l:  W_{.,l} + sum_{i=1..B} (f_l - alpha_n)^i Z_{l,i}
std::vector<StorageShare> encode_storage(const MessageTable& w,
                                         const PirParams& params,
                                         const DealerRandomness& dealer_rand);

// Share n, block l:  (f_l - alpha_n)^{-1} (e_theta + sum_i (f_l - alpha_n)^i R_{l,i})
// theta is 1-based.
std::vector<QueryShare> generate_queries(int theta, const PirParams& params,
                                         const UserRandomness& user_rand);

// zhat_n = sum_{i=1..2B} alpha_n^{i-1} Z'_i
std::vector<MaskShare> mask_shares_from_secrets(const PirParams& params,
                                                const MaskSecrets& secrets);
std::pair<MaskSecrets, std::vector<MaskShare>> deal_masks(const PirParams& params,
                                                          FieldSampler& rng);

// sum_l <S.blocks[l], Q.blocks[l]> + zhat
Fp honest_answer(const StorageShare& s, const QueryShare& q,
                 const MaskShare& zhat, const PrimeField& field);

// All N honest answers, in server order.
FVector honest_answers(const std::vector<StorageShare>& storages,
                       const std::vector<QueryShare>& queries,
                       const std::vector<MaskShare>& masks,
                       const PrimeField& field);

}  // namespace bspir
