#pragma once

#include <cstddef>

#include "dlower/data.hpp"
#include "dlower/recurrence.hpp"
#include "dlower/report.hpp"

namespace dlower {

/// classify() next to the brute-force lowering-space dimension.
struct CrossCheck {
    Classification classification;
    std::size_t dim = 0;
    bool agree = false;
};

/// Throws DegenerateData on invalid input and InternalDisagreement if the
/// lowering space has dimension >= 2.
CrossCheck cross_check(const Data& data);

/// Every data-level identity that applies to `data`: verdict against the
/// solver, the lowering criterion, the Delta series and the family forms of
/// Delta for whichever structural cases hold.
Report verify_data(const Data& data);

}  // namespace dlower
