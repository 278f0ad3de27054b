#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace featscale::detail {

/// Engine seeded from a base seed plus stream identifiers, so that every
/// (seed, repetition, restart, ...) tuple has its own reproducible stream.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> streams) {
  std::vector<std::uint32_t> words;
  words.push_back(static_cast<std::uint32_t>(seed));
  words.push_back(static_cast<std::uint32_t>(seed >> 32));
  for (auto s : streams) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace featscale::detail
