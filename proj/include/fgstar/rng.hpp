// Deterministic, portable randomness for experiment trials.
//
// Each trial derives an independent stream from (seed, trial index) via
// splitmix64, so trials can run in any order without changing results.
// The underlying generator is std::mt19937_64, which the standard pins
// down bit-exactly across platforms.

#pragma once

#include <cstdint>
#include <random>

#include "fgstar/word.hpp"

namespace fgstar {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

// Uniform random freely reduced word of exactly the given length (or shorter
// only when rank == 1 forces it); empty when len == 0.
inline Word random_word(std::mt19937_64& rng, int rank, int len) {
  Word w;
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  while (static_cast<int>(w.size()) < len) {
    int g = gen(rng);
    Letter l = coin(rng) ? g : -g;
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace fgstar
