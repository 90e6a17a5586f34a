#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace atomless {

/// Seeded generator with a portable bounded draw. std::*_distribution output
/// differs between standard libraries, which would break byte-identical
/// witness files, so draws are done by hand on top of mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [lo, hi]; modulo bias is negligible for the small ranges used here.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a, used to derive per-query seeds from canonical text.
inline std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace atomless
