#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace petal {

// Deterministic random plumbing. std::uniform_real_distribution is
// implementation-defined, so engine output is mapped to doubles by hand;
// the byte-identical-reports contract depends on this.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

class rng64 {
public:
    explicit rng64(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    // Sub-stream derivation: independent per-task streams, so partitioning
    // work across threads or filtering tasks cannot change any draw.
    rng64 fork(std::string_view tag) const { return rng64(seed_ ^ fnv1a64(tag)); }
    rng64 fork(std::uint64_t salt) const { return rng64(seed_ ^ splitmix64(salt)); }

    double uniform() {  // [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }  // small-n use only

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace petal
