#ifndef TVS_EXACT_HPP
#define TVS_EXACT_HPP

#include <optional>
#include <stdexcept>

#include "tvs/forest.hpp"
#include "tvs/labeler.hpp"

namespace tvs {

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExactResult {
    int s = 0;
    TotalWeighting witness;
};

inline constexpr int kDefaultSizeGuard = 14;

// Exhaustive backtracking search for an irregular total weighting with labels
// in 1..s. Independent of the constructive labeler.
std::optional<TotalWeighting> feasible(const Forest& f, int s,
                                       int size_guard = kDefaultSizeGuard);

// Minimum s with feasible(f, s), searched upward from the applicable lower
// bound. Throws GuardExceeded when cap is passed without a witness.
ExactResult exact_tvs(const Forest& f, int cap, int size_guard = kDefaultSizeGuard);

}  // namespace tvs

#endif
