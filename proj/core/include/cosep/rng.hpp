#pragma once

#include <array>
#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace cosep {

// Deterministic random stream. Built on std::mt19937_64, whose output sequence
// is fixed by the C++ standard, so the same seed gives the same stream on every
// platform. All derived draws (reals, big integers, normals) use explicit
// algorithms rather than implementation-defined standard distributions.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in (0, 1); rejects the single zero value.
    double next_real_pos() {
        double u;
        do { u = next_real(); } while (u == 0.0);
        return u;
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection on the smallest
    // covering power of two.
    std::uint64_t below(std::uint64_t bound);

    // Uniform big integer in [0, bound), bound >= 1. Rejection on fixed-width
    // 64-bit chunks covering the bit length of bound.
    mpz_class below(const mpz_class& bound);

    // Standard normal via Box-Muller (one value per call).
    double normal();

    // Gamma(1/2, 1) as a squared standard normal halved.
    double gamma_half() { double z = normal(); return 0.5 * z * z; }

    // Symmetric Dirichlet(1/2, 1/2, 1/2) via three normalized Gamma(1/2) draws.
    std::array<double, 3> dirichlet_half3();

    // Bernoulli with success probability p.
    bool bernoulli(double p) { return next_real() < p; }

    // Derives an independent stream for a work unit; used to make parallel
    // Monte-Carlo runs independent of the worker count.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

private:
    std::mt19937_64 eng_;
};

}  // namespace cosep
