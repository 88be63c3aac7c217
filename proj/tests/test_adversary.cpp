#include "doctest.h"

#include "bspir/adversary.hpp"
#include "bspir/csa.hpp"
#include "bspir/rng.hpp"

using namespace bspir;

namespace {

struct Pipeline {
  PirParams params;
  PrimeField field;
  std::vector<StorageShare> storages;
  std::vector<QueryShare> queries;
  std::vector<MaskShare> masks;
  FVector honest;
};

Pipeline make_pipeline(int n, int b, int k, std::uint64_t seed, int theta = 1) {
  PirParams p = make_default_params(n, b, k);
  PrimeField f = p.field();
  FieldSampler rng(seed);
  MessageTable w = sample_message_table(p, rng);
  auto storages = encode_storage(w, p, sample_dealer_randomness(p, rng));
  auto queries = generate_queries(theta, p, sample_user_randomness(p, rng));
  auto [secrets, masks] = deal_masks(p, rng);
  FVector honest = honest_answers(storages, queries, masks, f);
  return {p, f, std::move(storages), std::move(queries), std::move(masks),
          std::move(honest)};
}

ByzantineView make_view(const Pipeline& pl, std::vector<int> byz_set,
                        FVector gamma) {
  ByzantineView v;
  v.byz_set = std::move(byz_set);
  for (int s : v.byz_set) {
    v.storages.push_back(pl.storages[static_cast<std::size_t>(s - 1)]);
    v.queries.push_back(pl.queries[static_cast<std::size_t>(s - 1)]);
    v.mask_shares.push_back(pl.masks[static_cast<std::size_t>(s - 1)]);
  }
  v.gamma = std::move(gamma);
  return v;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (StrategyKind k : strategy_zoo()) {
    CHECK(strategy_from_name(strategy_name(k)) == k);
  }
  CHECK_THROWS_AS(strategy_from_name("nope"), std::invalid_argument);
}

TEST_CASE("honest_camouflage yields zero corruption") {
  Pipeline pl = make_pipeline(9, 2, 1, 42);
  ByzantineView v = make_view(pl, {3, 7}, {0, 0});
  auto byz = byzantine_answers(StrategyKind::HonestCamouflage, v, pl.field);
  CHECK(byz.at(3) == pl.honest[2]);
  CHECK(byz.at(7) == pl.honest[6]);
}

TEST_CASE("random_noise offsets the honest answers by gamma") {
  Pipeline pl = make_pipeline(9, 2, 1, 42);
  ByzantineView v = make_view(pl, {1, 2}, {3, 7});
  auto byz = byzantine_answers(StrategyKind::RandomNoise, v, pl.field);
  CHECK(byz.at(1) == pl.field.add(pl.honest[0], 3));
  CHECK(byz.at(2) == pl.field.add(pl.honest[1], 7));
}

TEST_CASE("leaking strategies emit the expected view scalar") {
  Pipeline pl = make_pipeline(9, 2, 1, 9);
  ByzantineView v = make_view(pl, {4, 5}, {2, 6});

  auto echo = byzantine_answers(StrategyKind::EchoQuery, v, pl.field);
  CHECK(echo.at(4) == pl.queries[3].blocks[0][0]);

  auto replay = byzantine_answers(StrategyKind::ReplayStorage, v, pl.field);
  CHECK(replay.at(5) == pl.storages[4].blocks[0][0]);

  auto leak = byzantine_answers(StrategyKind::LeakMask, v, pl.field);
  CHECK(leak.at(4) == pl.masks[3].zhat);
  CHECK(leak.at(5) == pl.masks[4].zhat);

  auto garbage = byzantine_answers(StrategyKind::ConstantGarbage, v, pl.field);
  CHECK(garbage.at(4) == 2);
  CHECK(garbage.at(5) == 6);
}

TEST_CASE("identical views produce identical answers") {
  Pipeline pl = make_pipeline(9, 2, 2, 1234, 2);
  for (StrategyKind k : strategy_zoo()) {
    ByzantineView v1 = make_view(pl, {2, 8}, {5, 1});
    ByzantineView v2 = make_view(pl, {2, 8}, {5, 1});
    CHECK(byzantine_answers(k, v1, pl.field) == byzantine_answers(k, v2, pl.field));
  }
}

TEST_CASE("corrupt_answers") {
  Pipeline pl = make_pipeline(9, 2, 1, 8);

  SUBCASE("empty corruption leaves answers unchanged") {
    CHECK(corrupt_answers(pl.honest, {}, 2) == pl.honest);
  }

  SUBCASE("corruption support is confined to the Byzantine set") {
    for (StrategyKind k : strategy_zoo()) {
      ByzantineView v = make_view(pl, {1, 6}, {4, 9});
      auto byz = byzantine_answers(k, v, pl.field);
      FVector corrupted = corrupt_answers(pl.honest, byz, 2);
      for (std::size_t i = 0; i < corrupted.size(); ++i) {
        if (i != 0 && i != 5) CHECK(corrupted[i] == pl.honest[i]);
      }
    }
  }

  SUBCASE("exceeding the bound throws") {
    std::map<int, Fp> three{{1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(corrupt_answers(pl.honest, three, 2), std::invalid_argument);
    CHECK_THROWS_AS(corrupt_answers(pl.honest, {{10, 0}}, 2), std::out_of_range);
  }
}
