#pragma once

#include <cstdint>
#include <random>

namespace signet {

/// splitmix64 step; used to derive independent per-task seeds from one root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for subtask `index` derived from `root`. Stable across runs and
/// independent of evaluation order, so parallel fan-out stays deterministic.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

} // namespace signet
