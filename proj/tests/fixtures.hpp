#ifndef TVS_TEST_FIXTURES_HPP
#define TVS_TEST_FIXTURES_HPP

#include <utility>
#include <vector>

#include "tvs/forest.hpp"

namespace fixtures {

inline tvs::Forest make(int n, std::vector<std::pair<int, int>> edges) {
    return tvs::Forest::from_edges(n, std::move(edges));
}

inline tvs::Forest k2() { return make(2, {{0, 1}}); }

inline tvs::Forest path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make(n, std::move(edges));
}

inline tvs::Forest star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make(leaves + 1, std::move(edges));
}

// Centers 0-1, leaves {2,3} on 0 and {4,5} on 1.
inline tvs::Forest double_star() {
    return make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

// Center 0 in C30; arms 1,2,3 each in C32 with two leaves.
inline tvs::Forest spider3() {
    return make(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
}

// K_{1,3} on {0..3} plus an isolated edge {4,5}.
inline tvs::Forest star3_plus_k2() {
    return make(6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
}

inline tvs::Forest triple_k2() { return make(6, {{0, 1}, {2, 3}, {4, 5}}); }

}  // namespace fixtures

#endif
