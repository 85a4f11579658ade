#ifndef PLAP_RNG_HPP
#define PLAP_RNG_HPP

#include <cstdint>

#include "plap/grid_function.hpp"

namespace plap {

/// splitmix64 generator with explicit value mappings, so seeded runs
/// reproduce bit-for-bit on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// log-uniform in [a, b], a, b > 0
    double log_uniform(double a, double b);

    /// integer uniform in [0, n)
    std::int64_t index(std::int64_t n) {
        return static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(n));
    }

    GridFunction uniform_field(DomainPtr d, double lo, double hi);

private:
    std::uint64_t state_;
};

}  // namespace plap

#endif
