#include "bspir/oracle.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "bspir/decoder.hpp"
#include "bspir/rng.hpp"
#include "json.hpp"

namespace bspir {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count());
}

std::string params_summary(const PirParams& p) {
  std::ostringstream os;
  os << "N=" << p.n << ",B=" << p.b << ",K=" << p.k << ",L=" << p.l
     << ",q=" << p.q;
  return os.str();
}

std::vector<std::vector<int>> size_b_subsets(int n, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(c);
    int i = b - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (b - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// q^e with a hard overflow guard; enumeration sizes only.
std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) throw EnumerationTooLarge("case count overflows");
    r *= q;
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw EnumerationTooLarge("case count overflows");
  return a * b;
}

void ensure_within_ceiling(std::uint64_t cases, const OracleOptions& opts) {
  if (cases > opts.case_ceiling) {
    throw EnumerationTooLarge("exhaustive check needs " + std::to_string(cases) +
                              " cases, ceiling is " +
                              std::to_string(opts.case_ceiling));
  }
}

UserRandomness user_rand_from_flat(const PirParams& p, const FVector& flat) {
  UserRandomness u;
  const std::size_t k = static_cast<std::size_t>(p.k);
  for (int i = 0; i < p.l * p.b; ++i) {
    auto begin = flat.begin() + static_cast<std::ptrdiff_t>(i * p.k);
    u.r.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(k));
  }
  return u;
}

DealerRandomness dealer_rand_from_flat(const PirParams& p, const FVector& flat) {
  DealerRandomness d;
  const std::size_t k = static_cast<std::size_t>(p.k);
  for (int i = 0; i < p.l * p.b; ++i) {
    auto begin = flat.begin() + static_cast<std::ptrdiff_t>(i * p.k);
    d.z.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(k));
  }
  return d;
}

// message table from theta's row and the flat assignment of the other rows
MessageTable message_table_from(const PirParams& p, int theta,
                                const FVector& wtheta, const FVector& wother) {
  PrimeField f = p.field();
  FMatrix w(f, static_cast<std::size_t>(p.k), static_cast<std::size_t>(p.l));
  std::size_t other = 0;
  for (int k = 1; k <= p.k; ++k) {
    for (int l = 0; l < p.l; ++l) {
      Fp v = (k == theta) ? wtheta[static_cast<std::size_t>(l)] : wother[other++];
      w.at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l)) = v;
    }
  }
  return {w};
}

std::vector<FVector> all_assignments(std::uint64_t q, std::size_t digits,
                                     bool collapse_to_zero) {
  if (collapse_to_zero) return {FVector(digits, 0)};
  std::vector<FVector> out;
  Odometer od(q, digits);
  do {
    out.push_back(od.value());
  } while (od.next());
  return out;
}

FVector flatten_share_blocks(const std::vector<FVector>& blocks) {
  FVector out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::string oracle_report_json(const OracleReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["tv_numerator"] = r.tv.num;
  j["tv_denominator"] = r.tv.den;
  j["cases"] = r.cases;
  j["millis"] = r.millis;
  j["applicable"] = r.applicable;
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

OracleReport check_query_privacy(const PirParams& params,
                                 const OracleOptions& opts) {
  auto start = Clock::now();
  OracleReport report;
  report.check = "query_privacy";
  report.params = params_summary(params);
  if (params.b == 0) {
    report.applicable = false;
    report.pass = true;
    report.note = "not applicable: B=0, no collusion bound";
    report.millis = elapsed_ms(start);
    return report;
  }

  const std::uint64_t r_digits =
      static_cast<std::uint64_t>(params.k) * params.l * params.b;
  const bool drop_r = opts.mutation == Mutation::DropQueryNoise;
  const std::uint64_t r_count = drop_r ? 1 : checked_pow(params.q, r_digits);
  const auto sets = size_b_subsets(params.n, params.b);
  // ceiling guards the primitive randomness space K * q^{KLB}; the per-set
  // observables reuse the same draws
  ensure_within_ceiling(checked_mul(static_cast<std::uint64_t>(params.k), r_count),
                        opts);
  const std::uint64_t cases =
      checked_mul(checked_mul(sets.size(), static_cast<std::uint64_t>(params.k)),
                  r_count);

  const std::size_t obs_digits =
      static_cast<std::size_t>(params.b * params.l * params.k);
  TranscriptCodec codec(params.q, obs_digits);

  // dists[set][theta-1]
  std::vector<std::vector<ExactDistribution>> dists(
      sets.size(), std::vector<ExactDistribution>(static_cast<std::size_t>(params.k)));

  const auto r_assignments =
      all_assignments(params.q, static_cast<std::size_t>(r_digits), drop_r);
  for (int theta = 1; theta <= params.k; ++theta) {
    for (const auto& flat : r_assignments) {
      auto queries = generate_queries(theta, params, user_rand_from_flat(params, flat));
      for (std::size_t si = 0; si < sets.size(); ++si) {
        FVector obs;
        for (int server : sets[si]) {
          FVector part = flatten_share_blocks(
              queries[static_cast<std::size_t>(server - 1)].blocks);
          obs.insert(obs.end(), part.begin(), part.end());
        }
        dists[si][static_cast<std::size_t>(theta - 1)].add(codec.pack(obs));
      }
    }
  }

  Rational max_tv{0, 1};
  for (auto& per_theta : dists) {
    for (auto& d : per_theta) d.finalize();
    for (std::size_t t = 1; t < per_theta.size(); ++t) {
      Rational tv = ExactDistribution::tv_distance(per_theta[0], per_theta[t]);
      if (tv.num * max_tv.den > max_tv.num * tv.den) max_tv = tv;
    }
  }
  report.tv = max_tv;
  report.cases = cases;
  report.pass = max_tv.num == 0;
  report.millis = elapsed_ms(start);
  return report;
}

OracleReport check_storage_security(const PirParams& params,
                                    const OracleOptions& opts) {
  auto start = Clock::now();
  OracleReport report;
  report.check = "storage_security";
  report.params = params_summary(params);
  if (params.b == 0) {
    report.applicable = false;
    report.pass = true;
    report.note = "not applicable: B=0, no communication bound";
    report.millis = elapsed_ms(start);
    return report;
  }

  const std::uint64_t w_digits =
      static_cast<std::uint64_t>(params.k) * params.l;
  const std::uint64_t z_digits =
      static_cast<std::uint64_t>(params.k) * params.l * params.b;
  const bool drop_z = opts.mutation == Mutation::DropStorageNoise;
  const std::uint64_t z_count = drop_z ? 1 : checked_pow(params.q, z_digits);
  const std::uint64_t w_count = checked_pow(params.q, w_digits);
  const auto sets = size_b_subsets(params.n, params.b);
  ensure_within_ceiling(checked_mul(w_count, z_count), opts);
  const std::uint64_t cases =
      checked_mul(checked_mul(sets.size(), w_count), z_count);

  const std::size_t obs_digits =
      static_cast<std::size_t>(params.b * params.l * params.k);
  TranscriptCodec codec(params.q, obs_digits);
  PrimeField f = params.field();

  // dists[set][w_index]
  std::vector<std::vector<ExactDistribution>> dists(
      sets.size(), std::vector<ExactDistribution>(w_count));

  const auto z_assignments =
      all_assignments(params.q, static_cast<std::size_t>(z_digits), drop_z);
  Odometer w_od(params.q, static_cast<std::size_t>(w_digits));
  std::uint64_t w_idx = 0;
  do {
    // row-major: digit k*L + l is message k+1, symbol l+1
    FMatrix w(f, static_cast<std::size_t>(params.k), static_cast<std::size_t>(params.l));
    for (std::size_t i = 0; i < w_digits; ++i)
      w.at(i / static_cast<std::size_t>(params.l),
           i % static_cast<std::size_t>(params.l)) = w_od.value()[i];
    MessageTable table{w};
    for (const auto& flat : z_assignments) {
      auto storages = encode_storage(table, params, dealer_rand_from_flat(params, flat));
      for (std::size_t si = 0; si < sets.size(); ++si) {
        FVector obs;
        for (int server : sets[si]) {
          FVector part = flatten_share_blocks(
              storages[static_cast<std::size_t>(server - 1)].blocks);
          obs.insert(obs.end(), part.begin(), part.end());
        }
        dists[si][w_idx].add(codec.pack(obs));
      }
    }
    ++w_idx;
  } while (w_od.next());

  Rational max_tv{0, 1};
  for (auto& per_w : dists) {
    for (auto& d : per_w) d.finalize();
    for (std::size_t w = 1; w < per_w.size(); ++w) {
      Rational tv = ExactDistribution::tv_distance(per_w[0], per_w[w]);
      if (tv.num * max_tv.den > max_tv.num * tv.den) max_tv = tv;
    }
  }
  report.tv = max_tv;
  report.cases = cases;
  report.pass = max_tv.num == 0;
  report.millis = elapsed_ms(start);
  return report;
}

namespace {

struct SymmetricGroupResult {
  Rational max_tv{0, 1};
  std::uint64_t cases = 0;
};

// One (byzantine set, theta) group of the symmetric-privacy enumeration.
SymmetricGroupResult symmetric_privacy_group(const PirParams& params,
                                             StrategyKind strategy,
                                             const OracleOptions& opts,
                                             const std::vector<int>& byz_set,
                                             int theta) {
  PrimeField f = params.field();
  const std::uint64_t q = params.q;
  const std::size_t n = static_cast<std::size_t>(params.n);
  const std::size_t b = static_cast<std::size_t>(params.b);
  const std::uint64_t rz_digits =
      static_cast<std::uint64_t>(params.k) * params.l * params.b;

  const bool drop_r = opts.mutation == Mutation::DropQueryNoise;
  const bool drop_z = opts.mutation == Mutation::DropStorageNoise;
  const bool drop_mask = opts.mutation == Mutation::DropMask;
  const bool with_gamma = strategy_uses_gamma(strategy);

  const std::size_t query_digits =
      n * static_cast<std::size_t>(params.l) * static_cast<std::size_t>(params.k);
  TranscriptCodec codec(q, query_digits + n);
  std::vector<PackedKey> qpow(n + 1);
  qpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
  const PackedKey prefix_shift = [&] {
    PackedKey s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= q;
    return s;
  }();

  // cached queries and packed prefixes per R assignment
  const auto r_assignments =
      all_assignments(q, static_cast<std::size_t>(rz_digits), drop_r);
  std::vector<std::vector<QueryShare>> queries_by_r;
  std::vector<PackedKey> prefix_by_r;
  queries_by_r.reserve(r_assignments.size());
  for (const auto& flat : r_assignments) {
    auto qs = generate_queries(theta, params, user_rand_from_flat(params, flat));
    FVector digits;
    for (const auto& share : qs) {
      FVector part = flatten_share_blocks(share.blocks);
      digits.insert(digits.end(), part.begin(), part.end());
    }
    PackedKey prefix = 0;
    for (std::size_t i = digits.size(); i-- > 0;) prefix = prefix * q + digits[i];
    queries_by_r.push_back(std::move(qs));
    prefix_by_r.push_back(prefix * prefix_shift);
  }

  const auto z_assignments =
      all_assignments(q, static_cast<std::size_t>(rz_digits), drop_z);

  // mask shares per Z' assignment: zhats_by_zp[i][server-1]
  const auto zp_assignments = all_assignments(q, 2 * b, drop_mask);
  std::vector<FVector> zhats_by_zp;
  zhats_by_zp.reserve(zp_assignments.size());
  for (const auto& zp : zp_assignments) {
    if (drop_mask) {
      zhats_by_zp.push_back(FVector(n, 0));
      continue;
    }
    auto shares = mask_shares_from_secrets(params, MaskSecrets{zp});
    FVector zh(n);
    for (std::size_t i = 0; i < n; ++i) zh[i] = shares[i].zhat;
    zhats_by_zp.push_back(std::move(zh));
  }

  const auto gamma_assignments = all_assignments(q, b, !with_gamma);

  const std::uint64_t per_dist = static_cast<std::uint64_t>(z_assignments.size()) *
                                 r_assignments.size() * zp_assignments.size() *
                                 gamma_assignments.size();

  ByzantineView view;
  view.byz_set = byz_set;
  view.storages.resize(b);
  view.queries.resize(b);
  view.mask_shares.resize(b);
  view.gamma.assign(b, 0);

  SymmetricGroupResult result;
  const std::size_t wtheta_digits = static_cast<std::size_t>(params.l);
  const std::size_t wother_digits =
      static_cast<std::size_t>(params.l) * static_cast<std::size_t>(params.k - 1);

  Odometer wtheta_od(q, wtheta_digits);
  do {
    ExactDistribution reference;
    bool have_reference = false;
    Odometer wother_od(q, wother_digits);
    do {
      MessageTable table =
          message_table_from(params, theta, wtheta_od.value(), wother_od.value());
      ExactDistribution dist;
      dist.reserve(per_dist);
      for (const auto& zflat : z_assignments) {
        auto storages = encode_storage(table, params, dealer_rand_from_flat(params, zflat));
        for (std::size_t i = 0; i < b; ++i)
          view.storages[i] = storages[static_cast<std::size_t>(byz_set[i] - 1)];
        for (std::size_t ri = 0; ri < queries_by_r.size(); ++ri) {
          const auto& qs = queries_by_r[ri];
          FVector base(n);
          for (std::size_t s = 0; s < n; ++s) {
            Fp acc = 0;
            for (std::size_t l = 0; l < storages[s].blocks.size(); ++l)
              acc = f.add(acc, dot(f, storages[s].blocks[l], qs[s].blocks[l]));
            base[s] = acc;
          }
          for (std::size_t i = 0; i < b; ++i)
            view.queries[i] = qs[static_cast<std::size_t>(byz_set[i] - 1)];
          for (const auto& zh : zhats_by_zp) {
            for (std::size_t i = 0; i < b; ++i) {
              view.mask_shares[i] = MaskShare{
                  byz_set[i], zh[static_cast<std::size_t>(byz_set[i] - 1)]};
            }
            for (const auto& gamma : gamma_assignments) {
              view.gamma = gamma;
              auto byz = byzantine_answers(strategy, view, f);
              PackedKey key = prefix_by_r[ri];
              for (std::size_t s = 0; s < n; ++s) {
                Fp a = f.add(base[s], zh[s]);
                auto it = byz.find(static_cast<int>(s + 1));
                if (it != byz.end()) a = it->second;
                key += qpow[s] * a;
              }
              dist.add(key);
            }
          }
        }
      }
      dist.finalize();
      result.cases += per_dist;
      if (!have_reference) {
        reference = std::move(dist);
        have_reference = true;
      } else {
        Rational tv = ExactDistribution::tv_distance(reference, dist);
        if (tv.num * result.max_tv.den > result.max_tv.num * tv.den)
          result.max_tv = tv;
      }
    } while (wother_od.next());
  } while (wtheta_od.next());
  return result;
}

}  // namespace

OracleReport check_symmetric_privacy(const PirParams& params,
                                     StrategyKind strategy,
                                     const OracleOptions& opts) {
  auto start = Clock::now();
  OracleReport report;
  report.check = "symmetric_privacy";
  report.params = params_summary(params);
  report.note = "strategy=" + strategy_name(strategy);
  if (params.k < 2) {
    report.applicable = false;
    report.pass = true;
    report.note += "; not applicable: K<2 leaves no non-retrieved message";
    report.millis = elapsed_ms(start);
    return report;
  }

  const std::uint64_t q = params.q;
  const std::uint64_t rz_digits =
      static_cast<std::uint64_t>(params.k) * params.l * params.b;
  const std::uint64_t r_count =
      opts.mutation == Mutation::DropQueryNoise ? 1 : checked_pow(q, rz_digits);
  const std::uint64_t z_count =
      opts.mutation == Mutation::DropStorageNoise ? 1 : checked_pow(q, rz_digits);
  const std::uint64_t zp_count = opts.mutation == Mutation::DropMask
                                     ? 1
                                     : checked_pow(q, 2 * static_cast<std::uint64_t>(params.b));
  const std::uint64_t g_count =
      strategy_uses_gamma(strategy) ? checked_pow(q, static_cast<std::uint64_t>(params.b)) : 1;
  const auto sets = size_b_subsets(params.n, params.b);
  // primitive space: (theta, W, Z, R, Z', gamma); per-set transcripts reuse it
  std::uint64_t primitive = static_cast<std::uint64_t>(params.k);
  primitive = checked_mul(
      primitive, checked_pow(q, static_cast<std::uint64_t>(params.k) * params.l));
  primitive = checked_mul(primitive, checked_mul(checked_mul(r_count, z_count),
                                                 checked_mul(zp_count, g_count)));
  ensure_within_ceiling(primitive, opts);

  // groups are independent; counts merge commutatively, so the result does
  // not depend on the partitioning
  std::vector<std::future<SymmetricGroupResult>> futures;
  for (const auto& set : sets) {
    for (int theta = 1; theta <= params.k; ++theta) {
      futures.push_back(std::async(std::launch::async, [&, set, theta] {
        return symmetric_privacy_group(params, strategy, opts, set, theta);
      }));
    }
  }
  Rational max_tv{0, 1};
  std::uint64_t counted = 0;
  for (auto& fut : futures) {
    SymmetricGroupResult r = fut.get();
    counted += r.cases;
    if (r.max_tv.num * max_tv.den > max_tv.num * r.max_tv.den) max_tv = r.max_tv;
  }

  report.tv = max_tv;
  report.cases = counted;
  report.pass = max_tv.num == 0;
  report.millis = elapsed_ms(start);
  return report;
}

OracleReport check_correctness_exhaustive(const PirParams& params,
                                          StrategyKind strategy,
                                          const OracleOptions& opts) {
  auto start = Clock::now();
  OracleReport report;
  report.check = "correctness_exhaustive";
  report.params = params_summary(params);
  report.note = "strategy=" + strategy_name(strategy);

  const std::uint64_t q = params.q;
  const std::uint64_t rz_digits =
      static_cast<std::uint64_t>(params.k) * params.l * params.b;
  const std::uint64_t w_digits =
      static_cast<std::uint64_t>(params.k) * params.l;
  const bool with_gamma = strategy_uses_gamma(strategy);
  const auto sets = size_b_subsets(params.n, params.b);
  std::uint64_t cases = checked_mul(checked_pow(q, w_digits),
                                    static_cast<std::uint64_t>(params.k));
  cases = checked_mul(cases, sets.size());
  cases = checked_mul(cases, checked_pow(q, rz_digits));
  cases = checked_mul(cases, checked_pow(q, rz_digits));
  cases = checked_mul(cases, checked_pow(q, 2 * static_cast<std::uint64_t>(params.b)));
  if (with_gamma)
    cases = checked_mul(cases, checked_pow(q, static_cast<std::uint64_t>(params.b)));
  ensure_within_ceiling(cases, opts);

  CsaContext ctx(params);
  PrimeField f = params.field();
  const std::size_t b = static_cast<std::size_t>(params.b);

  const auto z_assignments = all_assignments(q, static_cast<std::size_t>(rz_digits), false);
  const auto r_assignments = all_assignments(q, static_cast<std::size_t>(rz_digits), false);
  const auto zp_assignments = all_assignments(q, 2 * b, false);
  const auto gamma_assignments = all_assignments(q, b, !with_gamma);

  std::uint64_t failures = 0, counted = 0;
  Odometer w_od(q, static_cast<std::size_t>(w_digits));
  do {
    FMatrix w(f, static_cast<std::size_t>(params.k), static_cast<std::size_t>(params.l));
    for (std::size_t i = 0; i < w_digits; ++i)
      w.at(i / static_cast<std::size_t>(params.l),
           i % static_cast<std::size_t>(params.l)) = w_od.value()[i];
    MessageTable table{w};
    for (int theta = 1; theta <= params.k; ++theta) {
      FVector expected = w.row(static_cast<std::size_t>(theta - 1));
      for (const auto& rflat : r_assignments) {
        auto queries = generate_queries(theta, params, user_rand_from_flat(params, rflat));
        for (const auto& zflat : z_assignments) {
          auto storages =
              encode_storage(table, params, dealer_rand_from_flat(params, zflat));
          for (const auto& zp : zp_assignments) {
            auto masks = mask_shares_from_secrets(params, MaskSecrets{zp});
            FVector honest = honest_answers(storages, queries, masks, f);
            for (const auto& set : sets) {
              ByzantineView view;
              view.byz_set = set;
              for (int s : set) {
                view.storages.push_back(storages[static_cast<std::size_t>(s - 1)]);
                view.queries.push_back(queries[static_cast<std::size_t>(s - 1)]);
                view.mask_shares.push_back(masks[static_cast<std::size_t>(s - 1)]);
              }
              for (const auto& gamma : gamma_assignments) {
                view.gamma = gamma;
                auto byz = byzantine_answers(strategy, view, f);
                FVector answers = corrupt_answers(honest, byz, params.b);
                ++counted;
                try {
                  DecodeResult res = decode(answers, ctx);
                  if (res.message != expected) ++failures;
                } catch (const DecodeError&) {
                  ++failures;
                }
              }
            }
          }
        }
      }
    }
  } while (w_od.next());

  report.tv = Rational::make(failures, counted);
  report.cases = counted;
  report.pass = failures == 0;
  report.millis = elapsed_ms(start);
  return report;
}

OracleReport check_correctness_sampled(const PirParams& params,
                                       StrategyKind strategy,
                                       std::uint64_t draws, std::uint64_t seed) {
  auto start = Clock::now();
  OracleReport report;
  report.check = "correctness_sampled";
  report.params = params_summary(params);
  report.note = "strategy=" + strategy_name(strategy) + "; sampled, not exact";

  CsaContext ctx(params);
  PrimeField f = params.field();
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < draws; ++t) {
    FieldSampler rng(derive_seed(seed, t, StreamTag::Harness));
    MessageTable table = sample_message_table(params, rng);
    int theta = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(params.k)) + 1;
    FieldSampler dealer_rng(derive_seed(seed, t, StreamTag::DealerNoise));
    FieldSampler user_rng(derive_seed(seed, t, StreamTag::UserNoise));
    FieldSampler mask_rng(derive_seed(seed, t, StreamTag::MaskSecrets));
    FieldSampler gamma_rng(derive_seed(seed, t, StreamTag::AdversaryGamma));

    auto storages = encode_storage(table, params, sample_dealer_randomness(params, dealer_rng));
    auto queries = generate_queries(theta, params, sample_user_randomness(params, user_rng));
    auto [secrets, masks] = deal_masks(params, mask_rng);
    FVector honest = honest_answers(storages, queries, masks, f);

    // uniform size-B Byzantine set via partial Fisher-Yates on [1..N]
    std::vector<int> pool(static_cast<std::size_t>(params.n));
    for (int i = 0; i < params.n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < params.b; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      gamma_rng.next_u64() % static_cast<std::uint64_t>(params.n - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> set(pool.begin(), pool.begin() + params.b);
    std::sort(set.begin(), set.end());

    ByzantineView view;
    view.byz_set = set;
    for (int s : set) {
      view.storages.push_back(storages[static_cast<std::size_t>(s - 1)]);
      view.queries.push_back(queries[static_cast<std::size_t>(s - 1)]);
      view.mask_shares.push_back(masks[static_cast<std::size_t>(s - 1)]);
    }
    view.gamma = gamma_rng.next_fvec(f, static_cast<std::size_t>(params.b));

    auto byz = byzantine_answers(strategy, view, f);
    FVector answers = corrupt_answers(honest, byz, params.b);
    try {
      DecodeResult res = decode(answers, ctx);
      if (res.message != table.w.row(static_cast<std::size_t>(theta - 1))) ++failures;
    } catch (const DecodeError&) {
      ++failures;
    }
  }
  report.tv = Rational::make(failures, draws == 0 ? 1 : draws);
  report.cases = draws;
  report.pass = failures == 0;
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace bspir
