// Byzantine server models. A strategy maps the coalition's pooled view
// (its own storage shares, query shares, mask shares, and a shared
// coordination stream gamma) to one answer per Byzantine server. The view
// type carries nothing else: no message table, no mask secrets, no honest
// shares, no theta.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bspir/protocol.hpp"

namespace bspir {

struct ByzantineView {
  std::vector<int> byz_set;  // 1-based, ascending, |byz_set| <= B
  std::vector<StorageShare> storages;     // aligned with byz_set
  std::vector<QueryShare> queries;        // aligned with byz_set
  std::vector<MaskShare> mask_shares;     // aligned with byz_set
  FVector gamma;                          // shared stream, length B
};

enum class StrategyKind {
  HonestCamouflage,  // answer truthfully; Delta = 0
  RandomNoise,       // honest answer + gamma[i]
  ConstantGarbage,   // output gamma[i], ignore the rest of the view
  EchoQuery,         // leak query block 1, coordinate 1
  ReplayStorage,     // leak storage block 1, coordinate 1
  LeakMask,          // output own mask share zhat
  CoordinatedAffine, // gamma-keyed affine function of every pooled view scalar
};

const std::vector<StrategyKind>& strategy_zoo();
StrategyKind strategy_from_name(const std::string& name);
std::string strategy_name(StrategyKind kind);
bool strategy_uses_gamma(StrategyKind kind);

// One answer per server in view.byz_set, purely a function of the view.
std::map<int, Fp> byzantine_answers(StrategyKind kind, const ByzantineView& view,
                                    const PrimeField& field);

// Replace honest entries at the corrupted positions. Throws if more than
// max_byzantine positions are touched or an index is out of range.
FVector corrupt_answers(const FVector& honest, const std::map<int, Fp>& byz,
                        int max_byzantine);

}  // namespace bspir
