#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace bnd {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(long long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

/*
 * SplitMix64. Tiny, seedable, and stable across platforms, which is all the
 * reproducible-randomness contract asks for. Not for cryptography.
 */
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling to kill modulo bias
        std::uint64_t limit = bound * (0xffffffffffffffffULL / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace bnd
