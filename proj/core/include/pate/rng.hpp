#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pate {

// Named sub-streams of the master seed. Every random decision in a run is
// seeded by hashing (master_seed, stream tag, indices...), so results do not
// depend on scheduling or worker count.
enum class Stream : std::uint64_t {
  kSplit = 1,
  kPartition,
  kSynth,
  kTeacherInit,
  kTeacherShuffle,
  kStudentInit,
  kStudentShuffle,
  kBoundaryInit,
  kBoundaryShuffle,
  kVoteNoise,
  kFlipMc,
  kPermutation,
};

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = 0x8f1bbcdcbfa53e0bULL;
  for (std::uint64_t p : parts) s = splitmix64(s ^ splitmix64(p));
  return s;
}

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream) {
  return derive_seed({master, static_cast<std::uint64_t>(stream)});
}

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a) {
  return derive_seed({master, static_cast<std::uint64_t>(stream), a});
}

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a,
                                 std::uint64_t b) {
  return derive_seed({master, static_cast<std::uint64_t>(stream), a, b});
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace pate
