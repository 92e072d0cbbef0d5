#ifndef POLYTORIC_RNG_HPP
#define POLYTORIC_RNG_HPP

#include <cstdint>

namespace polytoric {

// splitmix64 (Steele, Lea, Flood).  Fixed constants, no library
// distributions, so streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  // Derive an independent stream; used to give each corpus instance its
  // own generator so instance i is reproducible in isolation.
  SplitMix64 fork(std::uint64_t salt) {
    SplitMix64 mixer(state_ ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    return SplitMix64(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace polytoric

#endif
