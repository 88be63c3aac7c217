#include "bspir/protocol.hpp"

namespace bspir {

MessageTable sample_message_table(const PirParams& params, FieldSampler& rng) {
  PrimeField f = params.field();
  FMatrix w(f, static_cast<std::size_t>(params.k), static_cast<std::size_t>(params.l));
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) w.at(r, c) = rng.next_fp(f);
  return {w};
}

DealerRandomness sample_dealer_randomness(const PirParams& params, FieldSampler& rng) {
  PrimeField f = params.field();
  DealerRandomness d;
  d.z.reserve(static_cast<std::size_t>(params.l * params.b));
  for (int i = 0; i < params.l * params.b; ++i)
    d.z.push_back(rng.next_fvec(f, static_cast<std::size_t>(params.k)));
  return d;
}

UserRandomness sample_user_randomness(const PirParams& params, FieldSampler& rng) {
  PrimeField f = params.field();
  UserRandomness u;
  u.r.reserve(static_cast<std::size_t>(params.l * params.b));
  for (int i = 0; i < params.l * params.b; ++i)
    u.r.push_back(rng.next_fvec(f, static_cast<std::size_t>(params.k)));
  return u;
}

MaskSecrets sample_mask_secrets(const PirParams& params, FieldSampler& rng) {
  PrimeField f = params.field();
  return {rng.next_fvec(f, static_cast<std::size_t>(2 * params.b))};
}

DealerRandomness zero_dealer_randomness(const PirParams& params) {
  DealerRandomness d;
  d.z.assign(static_cast<std::size_t>(params.l * params.b),
             FVector(static_cast<std::size_t>(params.k), 0));
  return d;
}

UserRandomness zero_user_randomness(const PirParams& params) {
  UserRandomness u;
  u.r.assign(static_cast<std::size_t>(params.l * params.b),
             FVector(static_cast<std::size_t>(params.k), 0));
  return u;
}

MaskSecrets zero_mask_secrets(const PirParams& params) {
  return {FVector(static_cast<std::size_t>(2 * params.b), 0)};
}

std::vector<StorageShare> encode_storage(const MessageTable& w,
                                         const PirParams& params,
                                         const DealerRandomness& dealer_rand) {
  PrimeField f = params.field();
  const std::size_t k = static_cast<std::size_t>(params.k);
  const std::size_t l_count = static_cast<std::size_t>(params.l);
  const std::size_t b = static_cast<std::size_t>(params.b);
  if (w.w.rows() != k || w.w.cols() != l_count)
    throw DimensionError("encode_storage: message table dims");
  if (dealer_rand.z.size() != l_count * b)
    throw DimensionError("encode_storage: dealer randomness dims");

  std::vector<StorageShare> shares;
  shares.reserve(static_cast<std::size_t>(params.n));
  for (int n = 1; n <= params.n; ++n) {
    Fp alpha = params.alphas[static_cast<std::size_t>(n - 1)];
    StorageShare share{n, {}};
    share.blocks.reserve(l_count);
    for (std::size_t l = 0; l < l_count; ++l) {
      Fp base = f.sub(params.fs[l], alpha);
      FVector block = w.w.column(l);  // W_{.,l}
      Fp coeff = 1;
      for (std::size_t i = 0; i < b; ++i) {
        coeff = f.mul(coeff, base);  // (f_l - alpha_n)^{i+1}
        const FVector& z = dealer_rand.z[l * b + i];
        if (z.size() != k) throw DimensionError("encode_storage: Z vector length");
        for (std::size_t j = 0; j < k; ++j)
          block[j] = f.add(block[j], f.mul(coeff, z[j]));
      }
      share.blocks.push_back(std::move(block));
    }
    shares.push_back(std::move(share));
  }
  return shares;
}

std::vector<QueryShare> generate_queries(int theta, const PirParams& params,
                                         const UserRandomness& user_rand) {
  if (theta < 1 || theta > params.k)
    throw std::out_of_range("generate_queries: theta out of [1..K]");
  PrimeField f = params.field();
  const std::size_t k = static_cast<std::size_t>(params.k);
  const std::size_t l_count = static_cast<std::size_t>(params.l);
  const std::size_t b = static_cast<std::size_t>(params.b);
  if (user_rand.r.size() != l_count * b)
    throw DimensionError("generate_queries: user randomness dims");

  std::vector<QueryShare> shares;
  shares.reserve(static_cast<std::size_t>(params.n));
  for (int n = 1; n <= params.n; ++n) {
    Fp alpha = params.alphas[static_cast<std::size_t>(n - 1)];
    QueryShare share{n, {}};
    share.blocks.reserve(l_count);
    for (std::size_t l = 0; l < l_count; ++l) {
      Fp base = f.sub(params.fs[l], alpha);
      FVector block(k, 0);
      block[static_cast<std::size_t>(theta - 1)] = 1;  // e_theta
      Fp coeff = 1;
      for (std::size_t i = 0; i < b; ++i) {
        coeff = f.mul(coeff, base);
        const FVector& r = user_rand.r[l * b + i];
        if (r.size() != k) throw DimensionError("generate_queries: R vector length");
        for (std::size_t j = 0; j < k; ++j)
          block[j] = f.add(block[j], f.mul(coeff, r[j]));
      }
      Fp scale = f.inv(base);
      for (auto& e : block) e = f.mul(scale, e);
      share.blocks.push_back(std::move(block));
    }
    shares.push_back(std::move(share));
  }
  return shares;
}

std::vector<MaskShare> mask_shares_from_secrets(const PirParams& params,
                                                const MaskSecrets& secrets) {
  PrimeField f = params.field();
  const std::size_t two_b = static_cast<std::size_t>(2 * params.b);
  if (secrets.zprime.size() != two_b)
    throw DimensionError("mask_shares_from_secrets: need 2B secrets");
  std::vector<MaskShare> shares;
  shares.reserve(static_cast<std::size_t>(params.n));
  for (int n = 1; n <= params.n; ++n) {
    Fp alpha = params.alphas[static_cast<std::size_t>(n - 1)];
    Fp acc = 0, power = 1;
    for (std::size_t i = 0; i < two_b; ++i) {
      acc = f.add(acc, f.mul(power, secrets.zprime[i]));
      power = f.mul(power, alpha);
    }
    shares.push_back({n, acc});
  }
  return shares;
}

std::pair<MaskSecrets, std::vector<MaskShare>> deal_masks(const PirParams& params,
                                                          FieldSampler& rng) {
  MaskSecrets secrets = sample_mask_secrets(params, rng);
  auto shares = mask_shares_from_secrets(params, secrets);
  return {std::move(secrets), std::move(shares)};
}

Fp honest_answer(const StorageShare& s, const QueryShare& q,
                 const MaskShare& zhat, const PrimeField& field) {
  if (s.server != q.server || s.server != zhat.server)
    throw DimensionError("honest_answer: server index mismatch");
  if (s.blocks.size() != q.blocks.size())
    throw DimensionError("honest_answer: block count mismatch");
  Fp acc = 0;
  for (std::size_t l = 0; l < s.blocks.size(); ++l)
    acc = field.add(acc, dot(field, s.blocks[l], q.blocks[l]));
  return field.add(acc, zhat.zhat);
}

FVector honest_answers(const std::vector<StorageShare>& storages,
                       const std::vector<QueryShare>& queries,
                       const std::vector<MaskShare>& masks,
                       const PrimeField& field) {
  if (storages.size() != queries.size() || storages.size() != masks.size())
    throw DimensionError("honest_answers: share count mismatch");
  FVector a(storages.size());
  for (std::size_t i = 0; i < storages.size(); ++i)
    a[i] = honest_answer(storages[i], queries[i], masks[i], field);
  return a;
}

}  // namespace bspir
