#ifndef RGC_RNG_HPP
#define RGC_RNG_HPP

#include <cstdint>

namespace rgc {

// SplitMix64 finalizer. Stable across platforms; the only randomness
// primitive the library uses.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ (stream * 0xd6e8feb86659fd93ULL));
}

// Counter-based keyed generator: the stream is fully determined by
// (seed, stream), independent of any other stream. Draws within a
// stream are sequential splitmix64 outputs.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream) : state_(mix_key(seed, stream)) {}
  KeyedRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
      : state_(mix_key(mix_key(seed, stream), substream)) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bit() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

}  // namespace rgc

#endif
