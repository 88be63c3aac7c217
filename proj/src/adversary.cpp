#include "bspir/adversary.hpp"

#include <stdexcept>

namespace bspir {

const std::vector<StrategyKind>& strategy_zoo() {
  static const std::vector<StrategyKind> zoo = {
      StrategyKind::HonestCamouflage, StrategyKind::RandomNoise,
      StrategyKind::ConstantGarbage,  StrategyKind::EchoQuery,
      StrategyKind::ReplayStorage,    StrategyKind::LeakMask,
      StrategyKind::CoordinatedAffine,
  };
  return zoo;
}

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::HonestCamouflage: return "honest_camouflage";
    case StrategyKind::RandomNoise: return "random_noise";
    case StrategyKind::ConstantGarbage: return "constant_garbage";
    case StrategyKind::EchoQuery: return "echo_query";
    case StrategyKind::ReplayStorage: return "replay_storage";
    case StrategyKind::LeakMask: return "leak_mask";
    case StrategyKind::CoordinatedAffine: return "coordinated_affine";
  }
  throw std::logic_error("unknown strategy kind");
}

StrategyKind strategy_from_name(const std::string& name) {
  for (StrategyKind k : strategy_zoo()) {
    if (strategy_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown strategy: " + name);
}

bool strategy_uses_gamma(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::RandomNoise:
    case StrategyKind::ConstantGarbage:
    case StrategyKind::CoordinatedAffine:
      return true;
    default:
      return false;
  }
}

namespace {

Fp own_honest_answer(const ByzantineView& v, std::size_t i, const PrimeField& f) {
  return honest_answer(v.storages[i], v.queries[i], v.mask_shares[i], f);
}

// Every scalar a coalition member can see, in a fixed order.
FVector pooled_view_scalars(const ByzantineView& v) {
  FVector out;
  for (const auto& s : v.storages)
    for (const auto& block : s.blocks) out.insert(out.end(), block.begin(), block.end());
  for (const auto& q : v.queries)
    for (const auto& block : q.blocks) out.insert(out.end(), block.begin(), block.end());
  for (const auto& m : v.mask_shares) out.push_back(m.zhat);
  return out;
}

}  // namespace

std::map<int, Fp> byzantine_answers(StrategyKind kind, const ByzantineView& view,
                                    const PrimeField& field) {
  if (view.storages.size() != view.byz_set.size() ||
      view.queries.size() != view.byz_set.size() ||
      view.mask_shares.size() != view.byz_set.size()) {
    throw DimensionError("byzantine_answers: view shares misaligned");
  }
  std::map<int, Fp> out;
  for (std::size_t i = 0; i < view.byz_set.size(); ++i) {
    const int server = view.byz_set[i];
    Fp gamma_i = view.gamma.empty() ? 0 : view.gamma[i % view.gamma.size()];
    Fp a = 0;
    switch (kind) {
      case StrategyKind::HonestCamouflage:
        a = own_honest_answer(view, i, field);
        break;
      case StrategyKind::RandomNoise:
        a = field.add(own_honest_answer(view, i, field), gamma_i);
        break;
      case StrategyKind::ConstantGarbage:
        a = gamma_i;
        break;
      case StrategyKind::EchoQuery:
        a = view.queries[i].blocks.at(0).at(0);
        break;
      case StrategyKind::ReplayStorage:
        a = view.storages[i].blocks.at(0).at(0);
        break;
      case StrategyKind::LeakMask:
        a = view.mask_shares[i].zhat;
        break;
      case StrategyKind::CoordinatedAffine: {
        // gamma[0] keys the coefficients; all members use the full pool
        Fp key = view.gamma.empty() ? 0 : view.gamma[0];
        FVector pool = pooled_view_scalars(view);
        Fp acc = field.mul(key, static_cast<Fp>(server % field.modulus()));
        Fp coeff = field.add(key, 1);
        for (Fp s : pool) {
          acc = field.add(acc, field.mul(coeff, s));
          coeff = field.mul(coeff, field.add(key, 1));
        }
        a = acc;
        break;
      }
    }
    out[server] = a;
  }
  return out;
}

FVector corrupt_answers(const FVector& honest, const std::map<int, Fp>& byz,
                        int max_byzantine) {
  if (byz.size() > static_cast<std::size_t>(max_byzantine))
    throw std::invalid_argument("corrupt_answers: more corruptions than B");
  FVector out = honest;
  for (const auto& [server, value] : byz) {
    if (server < 1 || static_cast<std::size_t>(server) > honest.size())
      throw std::out_of_range("corrupt_answers: server index out of range");
    out[static_cast<std::size_t>(server - 1)] = value;
  }
  return out;
}

}  // namespace bspir
