#ifndef TVS_VERIFIER_HPP
#define TVS_VERIFIER_HPP

#include <string>
#include <tuple>
#include <vector>

#include "tvs/classify.hpp"
#include "tvs/forest.hpp"
#include "tvs/labeler.hpp"

namespace tvs {

struct Certificate {
    bool valid = false;
    int s_used = 0;  // max label actually present
    std::vector<std::tuple<int, int, int>> collisions;  // (u, v, wt)
    std::vector<std::string> out_of_range;
};

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    bool all_pass = false;
    std::vector<AuditCheck> checks;
};

// wt(v) = w(v) + sum of incident edge labels. Throws on missing labels.
std::vector<int> weighted_degrees(const Forest& f, const TotalWeighting& tw);

Certificate verify(const Forest& f, const TotalWeighting& tw, int s_claimed);

// Construction-specific invariants (non-pendant edges = s, distinct pool
// values, pair sums, range containment, the 2s+1 reservation). Failures are
// data, not errors.
AuditReport audit_construction(const Forest& f, const TotalWeighting& tw, const ClassTable& ct,
                               Mode mode);

}  // namespace tvs

#endif
