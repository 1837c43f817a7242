#pragma once

#include <cstdint>
#include <random>

#include "dlower/scalar.hpp"

namespace dlower {

/// Seeded source of small integers and rationals.
///
/// Built on mt19937_64 with its own range reduction, so a seed gives the
/// same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long between(long lo, long hi);
    bool coin() { return below(2) == 1; }
    /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Scalar rational(long num_bound = 9, long den_bound = 4);
    Scalar nonzero_rational(long num_bound = 9, long den_bound = 4);

private:
    std::mt19937_64 engine_;
};

}  // namespace dlower
