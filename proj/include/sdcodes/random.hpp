// Seeded random streams shared by the randomized searches.
//
// Every stream is a std::mt19937_64 seeded through std::seed_seq from the
// 128 bits (seed, stream). Candidate i of a search or iteration i of a
// low-weight search always uses stream i, so results do not depend on the
// number of worker threads.
#pragma once

#include <cstdint>
#include <random>

namespace sdc {

inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

/// Value in [0, bound). Plain modulo reduction; the bias is below 2^-50 for the
/// bounds used here, and it keeps the sequence identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline bool random_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

}  // namespace sdc
