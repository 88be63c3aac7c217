// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failed criteria. Each check is self-contained and timed where the
// criterion carries a budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bspir/adversary.hpp"
#include "bspir/decoder.hpp"
#include "bspir/harness.hpp"
#include "bspir/oracle.hpp"
#include "bspir/protocol.hpp"
#include "bspir/rng.hpp"

using namespace bspir;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool matrix_equals(const FMatrix& got, const std::vector<std::vector<Fp>>& want) {
  if (got.rows() != want.size()) return false;
  for (std::size_t r = 0; r < want.size(); ++r) {
    if (got.cols() != want[r].size()) return false;
    for (std::size_t c = 0; c < want[r].size(); ++c) {
      if (got.at(r, c) != want[r][c]) return false;
    }
  }
  return true;
}

// 1. Worked-instance linear algebra is bit-exact and immediate.
bool criterion_golden_matrices(std::string& detail) {
  auto start = Clock::now();
  CsaContext ctx(make_default_params(9, 2, 1));
  bool ok = ctx.params().q == 11;
  ok = ok && ctx.csa_inv().column(0) == FVector{9, 5, 6, 1, 10, 8, 3, 4, 7};
  ok = ok && ctx.csa_inv().column(1) == FVector{5, 7, 3, 4, 3, 8, 1, 0, 4};
  auto [phi, psi] = ctx.candidate_submatrices({2, 3});
  ok = ok && matrix_equals(phi, {{8, 10}, {1, 9}});
  ok = ok && matrix_equals(psi, {{0, 7}, {4, 7}});
  ok = ok && matrix_equals(mat_inv(psi), {{8, 3}, {8, 0}});
  double secs = seconds_since(start);
  ok = ok && secs < 1.0;
  detail = "q=11 inverse columns and {2,3} candidate matrices, " +
           std::to_string(secs) + "s";
  return ok;
}

// 2. Candidate sweep: the true support always recovers the corruption, the
//    overlapping wrong support coincides on at most a line, never ambiguous.
bool criterion_golden_sweep(std::string& detail) {
  GoldenRecord rec = run_golden();
  detail = std::to_string(rec.cases) + " corruptions, " +
           std::to_string(rec.wrong_candidate_consistent) +
           " wrong-candidate coincidences";
  if (!rec.failures.empty()) detail += "; first: " + rec.failures.front();
  return rec.pass && rec.cases == 121 && rec.wrong_candidate_consistent <= 11;
}

// 3. 100% decode success across configurations and the whole strategy zoo.
bool criterion_trial_campaigns(std::string& detail) {
  auto start = Clock::now();
  const int configs[][2] = {{5, 1}, {9, 2}, {13, 3}};
  std::uint64_t total = 0, good = 0;
  for (auto [n, b] : configs) {
    RunConfig cfg;
    cfg.n = n;
    cfg.b = b;
    cfg.seed = 1000 + static_cast<std::uint64_t>(n);
    cfg.strategy = "all";
    cfg.trials = 1000;
    cfg.threads = 4;
    TrialReport rep = run_trials(cfg);
    total += rep.trials;
    good += rep.successes;
  }
  double secs = seconds_since(start);
  detail = std::to_string(good) + "/" + std::to_string(total) +
           " trials succeeded, " + std::to_string(secs) + "s";
  return total == 3000 && good == total && secs < 60.0;
}

// 4. The reported download rate is exactly (N-4B)/N.
bool criterion_rate(std::string& detail) {
  const int configs[][2] = {{5, 1}, {9, 2}, {13, 3}, {12, 2}};
  const Rational want[] = {{1, 5}, {1, 9}, {1, 13}, {4, 12}};
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    RunConfig cfg;
    cfg.n = configs[i][0];
    cfg.b = configs[i][1];
    cfg.trials = 1;
    ok = ok && run_trials(cfg).rate == want[i];
  }
  detail = "L/N reported unreduced for (5,1),(9,2),(13,3),(12,2)";
  return ok;
}

// 5. Query privacy: exact distribution equality across theta.
bool criterion_query_privacy(std::string& detail) {
  OracleReport r = check_query_privacy(make_default_params(5, 1, 2));
  double secs = static_cast<double>(r.millis) / 1000.0;
  detail = "TV=" + std::to_string(r.tv.num) + "/" + std::to_string(r.tv.den) +
           " over " + std::to_string(r.cases) + " cases, " +
           std::to_string(secs) + "s";
  return r.pass && r.tv == Rational{0, 1} && r.millis < 1000;
}

// 6. Storage security: exact distribution equality across message tables.
bool criterion_storage_security(std::string& detail) {
  OracleReport r = check_storage_security(make_default_params(5, 1, 2));
  detail = "TV=" + std::to_string(r.tv.num) + "/" + std::to_string(r.tv.den) +
           " over " + std::to_string(r.cases) + " cases, " +
           std::to_string(r.millis) + "ms";
  return r.pass && r.tv == Rational{0, 1} && r.millis < 10'000;
}

// 7. Symmetric privacy holds against adaptive strategies, exact TV = 0.
bool criterion_symmetric_privacy(std::string& detail) {
  auto start = Clock::now();
  const StrategyKind strategies[] = {
      StrategyKind::HonestCamouflage, StrategyKind::LeakMask,
      StrategyKind::EchoQuery,        StrategyKind::ReplayStorage,
      StrategyKind::CoordinatedAffine};
  PirParams p = make_default_params(5, 1, 2);
  bool ok = true;
  std::uint64_t cases = 0;
  for (StrategyKind s : strategies) {
    OracleReport r = check_symmetric_privacy(p, s);
    ok = ok && r.pass && r.tv == Rational{0, 1};
    cases += r.cases;
  }
  double secs = seconds_since(start);
  detail = std::to_string(cases) + " transcripts over 5 strategies, " +
           std::to_string(secs) + "s";
  return ok && secs < 600.0;
}

// 8. The oracle is non-vacuous: removing any protection leaks.
bool criterion_mutations(std::string& detail) {
  PirParams p = make_default_params(5, 1, 2);
  OracleOptions drop_r, drop_z, drop_mask;
  drop_r.mutation = Mutation::DropQueryNoise;
  drop_z.mutation = Mutation::DropStorageNoise;
  drop_mask.mutation = Mutation::DropMask;
  OracleReport a = check_query_privacy(p, drop_r);
  OracleReport b = check_storage_security(p, drop_z);
  OracleReport c = check_symmetric_privacy(p, StrategyKind::ReplayStorage,
                                           drop_mask);
  detail = "drop query noise / storage noise / mask each yield TV > 0";
  return !a.pass && a.tv.num > 0 && !b.pass && b.tv.num > 0 && !c.pass &&
         c.tv.num > 0;
}

// 9. All-honest answers always carry an identically zero check block.
bool criterion_zero_syndrome(std::string& detail) {
  CsaContext ctx(make_default_params(9, 2, 1));
  const PirParams& p = ctx.params();
  PrimeField f = ctx.field();
  for (std::uint64_t t = 0; t < 10'000; ++t) {
    FieldSampler harness_rng(derive_seed(9, t, StreamTag::Harness));
    FieldSampler dealer_rng(derive_seed(9, t, StreamTag::DealerNoise));
    FieldSampler user_rng(derive_seed(9, t, StreamTag::UserNoise));
    FieldSampler mask_rng(derive_seed(9, t, StreamTag::MaskSecrets));
    MessageTable w = sample_message_table(p, harness_rng);
    auto storages =
        encode_storage(w, p, sample_dealer_randomness(p, dealer_rng));
    auto queries = generate_queries(1, p, sample_user_randomness(p, user_rng));
    auto [secrets, masks] = deal_masks(p, mask_rng);
    FVector a_hat =
        mat_vec(ctx.csa_inv(), honest_answers(storages, queries, masks, f));
    for (std::size_t r = static_cast<std::size_t>(p.l + 2 * p.b); r < 9; ++r) {
      if (a_hat[r] != 0) {
        detail = "nonzero check symbol at trial " + std::to_string(t);
        return false;
      }
    }
  }
  detail = "10000 seeded honest runs, check block identically zero";
  return true;
}

// 10. Reports are byte-deterministic in the seed, independent of threads.
bool criterion_determinism(std::string& detail) {
  RunConfig cfg;
  cfg.n = 9;
  cfg.b = 2;
  cfg.seed = 42;
  cfg.trials = 1000;
  cfg.strategy = "all";
  RunConfig cfg4 = cfg;
  cfg4.threads = 4;
  std::string one = report_to_json(run_trials(cfg));
  std::string four = report_to_json(run_trials(cfg4));
  detail = "seed 42, 1000 trials: 1-thread and 4-thread reports " +
           std::string(one == four ? "byte-identical" : "differ");
  return one == four;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden matrices", criterion_golden_matrices},
      {"golden candidate sweep", criterion_golden_sweep},
      {"trial campaigns", criterion_trial_campaigns},
      {"download rate", criterion_rate},
      {"query privacy", criterion_query_privacy},
      {"storage security", criterion_storage_security},
      {"symmetric privacy", criterion_symmetric_privacy},
      {"mutation leakage", criterion_mutations},
      {"zero check block", criterion_zero_syndrome},
      {"report determinism", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %2zu [%s]: %s (%s)\n", i + 1,
                ok ? "PASS" : "FAIL", criteria[i].name, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
