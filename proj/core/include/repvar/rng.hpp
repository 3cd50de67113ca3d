#pragma once

#include <cmath>
#include <cstdint>

namespace repvar {

// Counter-based generator (splitmix64 over a keyed counter).  Every draw is a
// pure function of (seed, counter), so parallel consumers can partition the
// counter range and reproduce identical streams regardless of worker count.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    static std::uint64_t hash(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return hash(seed_, counter_++); }

    // uniform in [0,1), 53-bit mantissa
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    static double uniform_at(std::uint64_t seed, std::uint64_t counter) {
        return static_cast<double>(hash(seed, counter) >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller (discards the companion variate)
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace repvar
