// Exact distribution machinery for the privacy oracle. Observables are
// tuples of GF(q) symbols packed injectively into 128-bit keys (base-q,
// little-endian); distributions are integer counts, and distance is the
// exact total-variation rational. No floating point anywhere.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bspir/field.hpp"

namespace bspir {

using PackedKey = unsigned __int128;

struct EnumerationTooLarge : std::runtime_error {
  explicit EnumerationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational in lowest terms, value in [0, 1] for TV distances.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Injective base-q packing of fixed-length symbol tuples.
class TranscriptCodec {
 public:
  TranscriptCodec(std::uint64_t q, std::size_t digits) : q_(q), digits_(digits) {
    PackedKey cap = 1;
    for (std::size_t i = 0; i < digits; ++i) {
      if (cap > (static_cast<PackedKey>(-1) / q)) {
        throw EnumerationTooLarge("transcript does not fit a 128-bit key");
      }
      cap *= q;
    }
  }

  std::size_t digits() const { return digits_; }

  PackedKey pack(const FVector& symbols) const {
    if (symbols.size() != digits_)
      throw DimensionError("pack: wrong tuple length");
    PackedKey key = 0;
    for (std::size_t i = digits_; i-- > 0;) key = key * q_ + symbols[i];
    return key;
  }

  FVector unpack(PackedKey key) const {
    FVector out(digits_);
    for (std::size_t i = 0; i < digits_; ++i) {
      out[i] = static_cast<Fp>(key % q_);
      key /= q_;
    }
    return out;
  }

 private:
  std::uint64_t q_;
  std::size_t digits_;
};

// Multiset of packed observations; finalize() sorts so equal multisets
// compare equal and TV can be computed by a linear merge.
class ExactDistribution {
 public:
  void reserve(std::size_t n) { keys_.reserve(n); }
  void add(PackedKey key) { keys_.push_back(key); }

  void finalize() { std::sort(keys_.begin(), keys_.end()); }
  std::uint64_t total() const { return keys_.size(); }

  // Both sides must be finalized and hold the same number of observations.
  static Rational tv_distance(const ExactDistribution& a, const ExactDistribution& b);

 private:
  std::vector<PackedKey> keys_;
};

// Odometer over all assignments of `digits` symbols from GF(q). Starts at
// the all-zero assignment; next() advances, returning false after the last.
class Odometer {
 public:
  Odometer(std::uint64_t q, std::size_t digits) : q_(q), value_(digits, 0) {}

  const FVector& value() const { return value_; }

  bool next() {
    for (std::size_t i = 0; i < value_.size(); ++i) {
      if (++value_[i] < q_) return true;
      value_[i] = 0;
    }
    return false;
  }

 private:
  std::uint64_t q_;
  FVector value_;
};

}  // namespace bspir
