#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace mlspread::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; full 64-bit avalanche.
inline std::uint64_t mix64(std::uint64_t x) {
    x += kGolden;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t combine(std::uint64_t key, std::uint64_t value) {
    return mix64(key ^ mix64(value));
}

// Derives an independent stream key from a base key and up to three indices.
inline std::uint64_t derive(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
    std::uint64_t h = mix64(key);
    h = combine(h, a);
    h = combine(h, b);
    h = combine(h, c);
    return h;
}

inline std::uint64_t hash_string(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

// Maps a 64-bit value to [0, 1) with 53 bits of precision.
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// One uniform draw in [0, 1), fully determined by the key.
inline double unit_draw(std::uint64_t key) {
    return to_unit(mix64(key));
}

// Sequential generator for sampling and shuffling.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += kGolden;
        std::uint64_t x = state;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    double next_unit() { return to_unit(next()); }

    // Unbiased integer in [0, bound); Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) {
            return 0;
        }
        while (true) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t low = static_cast<std::uint64_t>(m);
            if (low >= bound || low >= static_cast<std::uint64_t>(-bound) % bound) {
                return static_cast<std::uint64_t>(m >> 64);
            }
        }
    }
};

// Fisher-Yates; stdlib-independent so results are stable across platforms.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& gen) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(gen.below(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace mlspread::rng
