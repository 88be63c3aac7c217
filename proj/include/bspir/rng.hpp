// Deterministic seeded randomness for the harness and actors.
//
// The derivation hash is splitmix64. Per-trial / per-stream seeds are
// splitmix64(master ^ STREAM_TAG ^ golden-ratio-spread(index)), so any trial
// or stream can be regenerated in isolation, independent of scheduling.

#pragma once

#include <cstdint>

#include "bspir/field.hpp"

namespace bspir {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream tags keep dealer noise, user noise, mask secrets, adversary gamma
// and harness draws statistically and reproducibly separate.
enum class StreamTag : std::uint64_t {
  DealerNoise = 0x11,
  UserNoise = 0x22,
  MaskSecrets = 0x33,
  AdversaryGamma = 0x44,
  Harness = 0x55,
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 StreamTag tag) {
  return splitmix64(master ^ static_cast<std::uint64_t>(tag) ^
                    (index * 0x9e3779b97f4a7c15ULL));
}

// splitmix64-backed stream of uniform field elements (rejection sampled).
class FieldSampler {
 public:
  explicit FieldSampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  Fp next_fp(const PrimeField& f) {
    const std::uint64_t q = f.modulus();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % q;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % q;
  }

  FVector next_fvec(const PrimeField& f, std::size_t n) {
    FVector v(n);
    for (auto& e : v) e = next_fp(f);
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace bspir
