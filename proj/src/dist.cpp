#include "bspir/dist.hpp"

namespace bspir {

Rational ExactDistribution::tv_distance(const ExactDistribution& a,
                                        const ExactDistribution& b) {
  if (a.total() != b.total())
    throw std::invalid_argument("tv_distance: totals differ");
  if (a.total() == 0) return {0, 1};
  // linear merge over sorted keys, accumulating sum |count_a - count_b|
  std::uint64_t l1 = 0;
  std::size_t i = 0, j = 0;
  const auto& ka = a.keys_;
  const auto& kb = b.keys_;
  while (i < ka.size() || j < kb.size()) {
    if (j == kb.size() || (i < ka.size() && ka[i] < kb[j])) {
      PackedKey key = ka[i];
      std::uint64_t run = 0;
      while (i < ka.size() && ka[i] == key) { ++i; ++run; }
      l1 += run;
    } else if (i == ka.size() || kb[j] < ka[i]) {
      PackedKey key = kb[j];
      std::uint64_t run = 0;
      while (j < kb.size() && kb[j] == key) { ++j; ++run; }
      l1 += run;
    } else {
      PackedKey key = ka[i];
      std::uint64_t ra = 0, rb = 0;
      while (i < ka.size() && ka[i] == key) { ++i; ++ra; }
      while (j < kb.size() && kb[j] == key) { ++j; ++rb; }
      l1 += ra > rb ? ra - rb : rb - ra;
    }
  }
  return Rational::make(l1, 2 * a.total());
}

}  // namespace bspir
