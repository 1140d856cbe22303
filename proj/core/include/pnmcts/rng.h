#ifndef PNMCTS_RNG_H_
#define PNMCTS_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace pnmcts {

using Rng = std::mt19937_64;

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (parent seed, index), e.g. a game within a
// series or a move within a game.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

inline std::size_t UniformIndex(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace pnmcts

#endif  // PNMCTS_RNG_H_
