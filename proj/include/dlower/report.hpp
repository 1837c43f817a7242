#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlower {

/// One verified identity.
struct IdentityResult {
    std::string identity;
    bool pass = false;
    std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

using Report = std::vector<IdentityResult>;

inline bool all_pass(const Report& r) {
    return std::all_of(r.begin(), r.end(), [](const IdentityResult& x) { return x.pass; });
}

}  // namespace dlower
