#ifndef TVS_CLASSIFY_HPP
#define TVS_CLASSIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tvs/forest.hpp"

namespace tvs {

struct DegreeCensus {
    std::map<int, std::vector<int>> vertices_by_degree;  // V_i
    std::map<int, int> count_by_degree;                  // n_i
    int max_degree = 0;
    int min_degree = 0;
};

// Vertices of degree k with exactly j pendant neighbors, plus the pendant
// structure the construction works from.
struct ClassTable {
    std::map<std::pair<int, int>, std::vector<int>> classes;  // (k,j) -> ids, ascending
    std::vector<int> pendant_vertices;                        // V_1
    std::vector<int> pendant_edges;                           // edge ids
    std::vector<int> isolated_edges;                          // edge ids (K2 components)
    int n1 = 0;

    int count(int k, int j) const {
        auto it = classes.find({k, j});
        return it == classes.end() ? 0 : static_cast<int>(it->second.size());
    }
};

struct BoundsReport {
    int lb_eq1 = 0;        // ceil((n + delta) / (Delta + 1))
    int ub_eq1 = 0;        // n + Delta - 2*delta + 1
    int ub_eq2 = 0;        // ceil(3n / delta) + 1, needs delta >= 1
    int lb_forest = 0;     // ceil((n1 + 1) / 2)
    int ub_tree_eq4 = 0;   // n1, for trees with no degree-2 vertices
    bool eq1_applicable = false;
    bool eq2_applicable = false;
    bool lb_forest_applicable = false;
    bool eq4_applicable = false;
};

struct DegreeIdentity {
    int lhs = 0;  // n1 of the tree
    int rhs = 0;  // 2 + sum_{j>=3} (j-2) n_j
    bool holds = false;
};

struct StructuralInequality {
    int lhs = 0;  // 2 n30 + n43 + 2 n44
    int bound_minus2 = 0;
    int bound_minus3 = 0;
    bool equality_case = false;  // K_{1,4} or P_3
    bool weak_holds = false;     // lhs <= n1 - 2
    bool strict_holds = false;   // lhs <= n1 - 3
};

std::pair<DegreeCensus, ClassTable> classify(const Forest& f);

// s = ceil((n1+1)/2); throws std::invalid_argument for n1 < 2.
int strength_target(int n1);

// component must induce a tree with >= 2 vertices inside f.
DegreeIdentity degree_identity_check(const Forest& f, const std::vector<int>& component);

// Requires n >= 3 and n2 <= 1.
StructuralInequality structural_inequality_check(const Forest& f);

BoundsReport bounds(const Forest& f);

std::string class_table_to_json(const ClassTable& ct);

}  // namespace tvs

#endif
