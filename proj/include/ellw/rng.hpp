#ifndef ELLW_RNG_HPP
#define ELLW_RNG_HPP

#include <cstdint>

#include "ellw/numerics.hpp"

namespace ellw {

/// Deterministic RNG with an implementation-independent real mapping
/// (std::uniform_real_distribution is not portable bit-for-bit).
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64() {
        // splitmix64
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_real(double lo, double hi) {
        double x = double(next_u64() >> 11) * 0x1.0p-53;
        return lo + x * (hi - lo);
    }
    cplx next_cplx(double re_span, double im_span) {
        double re = next_real(-re_span, re_span);
        double im = next_real(-im_span, im_span);
        return cplx(re, im);
    }
};

}  // namespace ellw

#endif
