#pragma once

#include <cmath>
#include <cstdint>

// Deterministic generator for property-style tests (xorshift64*); seeded
// explicitly so failures reproduce across platforms and runs.
struct Prop {
    std::uint64_t s;

    explicit Prop(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545f4914f6cdd1dull;
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }
};
