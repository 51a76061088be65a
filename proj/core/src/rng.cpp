#include "cosep/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cosep {

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
    if (bound == 1) return 0;
    int bits = 64 - __builtin_clzll(bound - 1);
    std::uint64_t mask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    for (;;) {
        std::uint64_t x = next_u64() & mask;
        if (x < bound) return x;
    }
}

mpz_class RandomSource::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
    if (bound == 1) return 0;
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    std::uint64_t top_mask = (bits % 64 == 0) ? ~0ULL : ((1ULL << (bits % 64)) - 1);
    std::vector<std::uint64_t> buf(words);
    mpz_class x;
    for (;;) {
        for (std::size_t i = 0; i < words; ++i) buf[i] = next_u64();
        buf[words - 1] &= top_mask;
        // least significant word first, native endianness within words
        mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
        if (x < bound) return x;
    }
}

double RandomSource::normal() {
    double u1 = next_real_pos();
    double u2 = next_real();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

std::array<double, 3> RandomSource::dirichlet_half3() {
    double g0 = gamma_half(), g1 = gamma_half(), g2 = gamma_half();
    double s = g0 + g1 + g2;
    while (s == 0.0) {  // all three zero is essentially impossible, but stay safe
        g0 = gamma_half(); g1 = gamma_half(); g2 = gamma_half();
        s = g0 + g1 + g2;
    }
    return {g0 / s, g1 / s, g2 / s};
}

std::uint64_t RandomSource::mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined words
    auto step = [](std::uint64_t& state) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t state = seed;
    std::uint64_t h = step(state);
    state ^= a * 0xff51afd7ed558ccdULL;
    h ^= step(state);
    state ^= b * 0xc4ceb9fe1a85ec53ULL;
    h ^= step(state);
    return h;
}

}  // namespace cosep
