#include "tvs/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace tvs {

std::pair<DegreeCensus, ClassTable> classify(const Forest& f) {
    DegreeCensus census;
    ClassTable ct;
    const int n = f.vertex_count();

    for (int v = 0; v < n; ++v) {
        int d = f.degree(v);
        census.vertices_by_degree[d].push_back(v);
        census.count_by_degree[d]++;
    }
    census.min_degree = n > 0 ? census.count_by_degree.begin()->first : 0;
    census.max_degree = n > 0 ? census.count_by_degree.rbegin()->first : 0;

    for (int v = 0; v < n; ++v) {
        int k = f.degree(v);
        if (k == 0) continue;
        int j = 0;
        for (const auto& [w, e] : f.incident(v)) {
            (void)e;
            if (f.degree(w) == 1) ++j;
        }
        ct.classes[{k, j}].push_back(v);
        if (k == 1) ct.pendant_vertices.push_back(v);
    }
    ct.n1 = static_cast<int>(ct.pendant_vertices.size());

    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edge(e);
        bool up = f.degree(u) == 1, vp = f.degree(v) == 1;
        if (up || vp) ct.pendant_edges.push_back(e);
        if (up && vp) ct.isolated_edges.push_back(e);
    }
    return {std::move(census), std::move(ct)};
}

int strength_target(int n1) {
    if (n1 < 2) throw std::invalid_argument("strength_target: n1 must be >= 2");
    return (n1 + 2) / 2;  // ceil((n1+1)/2)
}

DegreeIdentity degree_identity_check(const Forest& f, const std::vector<int>& component) {
    if (component.size() < 2)
        throw std::invalid_argument("degree_identity_check: tree must have >= 2 vertices");
    DegreeIdentity id;
    id.rhs = 2;
    for (int v : component) {
        int d = f.degree(v);
        if (d == 1) ++id.lhs;
        if (d >= 3) id.rhs += d - 2;
    }
    id.holds = id.lhs == id.rhs;
    return id;
}

StructuralInequality structural_inequality_check(const Forest& f) {
    auto [census, ct] = classify(f);
    const int n = f.vertex_count();
    int n2 = census.count_by_degree.count(2) ? census.count_by_degree.at(2) : 0;
    if (n < 3 || n2 > 1)
        throw std::invalid_argument("structural_inequality_check: needs n >= 3 and n2 <= 1");

    StructuralInequality si;
    si.lhs = 2 * ct.count(3, 0) + ct.count(4, 3) + 2 * ct.count(4, 4);
    si.bound_minus2 = ct.n1 - 2;
    si.bound_minus3 = ct.n1 - 3;
    si.weak_holds = si.lhs <= si.bound_minus2;
    si.strict_holds = si.lhs <= si.bound_minus3;

    // K_{1,4} and P_3 are determined by (n, degree multiset) among forests.
    bool k14 = n == 5 && census.count_by_degree.count(4) &&
               census.count_by_degree.at(4) == 1 && ct.n1 == 4;
    bool p3 = n == 3 && n2 == 1 && ct.n1 == 2;
    si.equality_case = k14 || p3;
    return si;
}

BoundsReport bounds(const Forest& f) {
    auto [census, ct] = classify(f);
    const int n = f.vertex_count();
    BoundsReport b;
    int delta = census.min_degree;
    int Delta = census.max_degree;

    if (n > 0) {
        b.eq1_applicable = true;
        b.lb_eq1 = (n + delta + Delta) / (Delta + 1);  // ceil((n+delta)/(Delta+1))
        b.ub_eq1 = n + Delta - 2 * delta + 1;
    }
    if (delta >= 1) {
        b.eq2_applicable = true;
        b.ub_eq2 = (3 * n + delta - 1) / delta + 1;
    }
    if (ct.n1 >= 2) {
        b.lb_forest_applicable = true;
        b.lb_forest = strength_target(ct.n1);
    }
    int n2 = census.count_by_degree.count(2) ? census.count_by_degree.at(2) : 0;
    if (f.components().size() == 1 && n >= 2 && n2 == 0) {
        b.eq4_applicable = true;
        b.ub_tree_eq4 = ct.n1;
    }
    return b;
}

std::string class_table_to_json(const ClassTable& ct) {
    nlohmann::json j;
    j["n1"] = ct.n1;
    j["classes"] = nlohmann::json::object();
    for (const auto& [kj, ids] : ct.classes)
        j["classes"][std::to_string(kj.first) + "," + std::to_string(kj.second)] = ids;
    j["pendant_vertices"] = ct.pendant_vertices;
    j["pendant_edges"] = ct.pendant_edges;
    j["isolated_edges"] = ct.isolated_edges;
    return j.dump();
}

}  // namespace tvs
