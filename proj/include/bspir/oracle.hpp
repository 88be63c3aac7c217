// Exhaustive verification of the scheme's information-theoretic claims at
// tiny parameter scale. Mutual-information-zero claims are checked as exact
// distribution equality (TV = 0), by enumerating every randomness draw and
// counting transcripts with integers.

#pragma once

#include <cstdint>
#include <string>

#include "bspir/adversary.hpp"
#include "bspir/csa.hpp"
#include "bspir/dist.hpp"

namespace bspir {

// Deliberately broken variants, used to prove the oracle is non-vacuous:
// each drop pins one randomness stream at zero and must surface TV > 0.
enum class Mutation {
  None,
  DropQueryNoise,    // R = 0: queries become deterministic in theta
  DropStorageNoise,  // Z = 0: storage shares equal the plain messages
  DropMask,          // Zhat = 0: a storage-replaying server lets the user
                     // cancel the dealer noise and read other messages
};

struct OracleOptions {
  std::uint64_t case_ceiling = 100'000'000;
  Mutation mutation = Mutation::None;
};

struct OracleReport {
  std::string check;
  std::string params;
  Rational tv;          // max total-variation distance observed; 0 expected
  std::uint64_t cases = 0;
  std::uint64_t millis = 0;
  bool applicable = true;
  bool pass = false;
  std::string note;
};

std::string oracle_report_json(const OracleReport& report);

// Queries of any size-B server set are distributed identically for every
// theta, over the user's noise draws.
OracleReport check_query_privacy(const PirParams& params,
                                 const OracleOptions& opts = {});

// Storage shares of any size-B server set are distributed identically for
// every message table, over the dealer's noise draws.
OracleReport check_storage_security(const PirParams& params,
                                    const OracleOptions& opts = {});

// The full transcript (all queries, all answers) is distributed identically
// across the values of the non-retrieved messages, for every Byzantine set
// and the given strategy, over all of (Z, R, Z', gamma).
OracleReport check_symmetric_privacy(const PirParams& params,
                                     StrategyKind strategy,
                                     const OracleOptions& opts = {});

// decode() recovers the true W_theta for every randomness draw, every
// message table, every theta and every Byzantine set.
OracleReport check_correctness_exhaustive(const PirParams& params,
                                          StrategyKind strategy,
                                          const OracleOptions& opts = {});

// Seeded sampled variant for instances beyond exhaustive reach; statistical
// evidence, not exact.
OracleReport check_correctness_sampled(const PirParams& params,
                                       StrategyKind strategy,
                                       std::uint64_t draws, std::uint64_t seed);

}  // namespace bspir
