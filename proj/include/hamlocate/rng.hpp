#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hamlocate {

// Stable sub-seed derivation: FNV-1a over the label, mixed with the root seed
// and instance index through splitmix64. Deterministic across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                 std::uint64_t instance = 0) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : label) {
        h ^= (unsigned char)c;
        h *= 1099511628211ull;
    }
    return splitmix64(splitmix64(root ^ h) + instance);
}

// Thin mt19937_64 wrapper with hand-rolled bounded draws, because the
// std::uniform_* distributions are not bit-identical across standard
// libraries and seeds must reproduce everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi_inclusive) {
        return lo + (int)below((std::uint64_t)(hi_inclusive - lo + 1));
    }

    // Bernoulli with exact rational probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) {
        return below(den) < num;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = (std::size_t)below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[(std::size_t)below(v.size())];
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hamlocate
