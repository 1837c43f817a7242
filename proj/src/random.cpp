#include "dlower/random.hpp"

#include <limits>
#include <stdexcept>

namespace dlower {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
}

long Rng::between(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::between: hi < lo");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Rng::rational(long num_bound, long den_bound) {
    const long p = between(-num_bound, num_bound);
    const long q = between(1, den_bound);
    return {p, q};
}

Scalar Rng::nonzero_rational(long num_bound, long den_bound) {
    for (;;) {
        Scalar s = rational(num_bound, den_bound);
        if (!s.is_zero()) return s;
    }
}

}  // namespace dlower
