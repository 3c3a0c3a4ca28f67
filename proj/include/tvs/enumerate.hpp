#ifndef TVS_ENUMERATE_HPP
#define TVS_ENUMERATE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tvs/forest.hpp"

namespace tvs {

// Unique labeled tree on n vertices for a Prüfer sequence of length n-2.
Forest decode_prufer(const std::vector<int>& seq, int n);

// Isomorphism-invariant code: AHU encoding rooted at the centroid, the
// lexicographically smaller rooting for bicentroidal trees. Input must be a
// single tree.
std::string canonical_form(const Forest& t);

struct TreeConstraints {
    int min_n2 = 0;
    int max_n2 = std::numeric_limits<int>::max();
};

// All non-isomorphic trees on n vertices (2 <= n <= 10), one representative
// per class, deduped over every Prüfer sequence.
std::vector<Forest> enumerate_trees(int n, const TreeConstraints& c = {});

struct GeneratorSpec {
    int min_components = 1;
    int max_components = 1;
    int min_size = 2;  // per component
    int max_size = 8;
    int max_n2 = 0;  // whole-forest budget
    bool allow_isolated_edges = true;
    std::uint64_t seed = 0;
    int retry_budget = 20000;
};

// Seeded rejection sampling; deterministic per spec+seed. Throws
// std::runtime_error when the retry budget runs out.
Forest random_forest(const GeneratorSpec& spec);

// Non-isomorphic trees whose internal vertices all have degree 3
// (with_degree2_root=false), or all but a single degree-2 root
// (with_degree2_root=true). Covers 1..max_leaves leaves.
std::vector<Forest> enumerate_binary_trees(int max_leaves, bool with_degree2_root);

}  // namespace tvs

#endif
