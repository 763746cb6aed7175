#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pilotwell {

/// FNV-1a 64-bit hash; stable across platforms and runs.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 14695981039346656037ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// splitmix64 step, used to expand one master seed into per-component seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic per-component seed derived from a master seed and a tag.
inline std::uint64_t component_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t s = master ^ fnv1a(tag);
    return splitmix64(s);
}

/// Engine for a named component.  All randomness in the library flows
/// through this so that a single top-level seed reproduces every output.
inline std::mt19937_64 component_engine(std::uint64_t master, std::string_view tag) {
    return std::mt19937_64(component_seed(master, tag));
}

} // namespace pilotwell
