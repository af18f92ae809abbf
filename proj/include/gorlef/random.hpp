#ifndef GORLEF_RANDOM_HPP
#define GORLEF_RANDOM_HPP

#include <cstdint>
#include <random>

namespace gorlef {

// Default seed for every randomized routine; bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20211115;

// Seed of child stream `index` under `parent`. Trials and samples are seeded this way
// so serial and parallel runs draw identical values.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t parent, std::uint64_t index) : engine_(derive_seed(parent, index)) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(parent), static_cast<std::uint32_t>(parent >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

}  // namespace gorlef

#endif  // GORLEF_RANDOM_HPP
