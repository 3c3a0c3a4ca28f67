#include "tvs/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tvs {

std::vector<int> weighted_degrees(const Forest& f, const TotalWeighting& tw) {
    if (static_cast<int>(tw.vertex_label.size()) != f.vertex_count() ||
        static_cast<int>(tw.edge_label.size()) != f.edge_count())
        throw std::invalid_argument("weighted_degrees: labeling does not cover the forest");
    std::vector<int> wt(f.vertex_count(), 0);
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (tw.vertex_label[v] < 1)
            throw std::invalid_argument("weighted_degrees: missing label at vertex " +
                                        std::to_string(v));
        wt[v] = tw.vertex_label[v];
    }
    for (int e = 0; e < f.edge_count(); ++e) {
        if (tw.edge_label[e] < 1)
            throw std::invalid_argument("weighted_degrees: missing label at edge " +
                                        std::to_string(e));
        wt[f.edge(e).first] += tw.edge_label[e];
        wt[f.edge(e).second] += tw.edge_label[e];
    }
    return wt;
}

Certificate verify(const Forest& f, const TotalWeighting& tw, int s_claimed) {
    Certificate cert;
    if (static_cast<int>(tw.vertex_label.size()) != f.vertex_count() ||
        static_cast<int>(tw.edge_label.size()) != f.edge_count()) {
        cert.out_of_range.push_back("labeling does not cover the forest");
        return cert;
    }
    for (int v = 0; v < f.vertex_count(); ++v) {
        int w = tw.vertex_label[v];
        cert.s_used = std::max(cert.s_used, w);
        if (w < 1 || w > s_claimed)
            cert.out_of_range.push_back("vertex " + std::to_string(v) + " label " +
                                        std::to_string(w));
    }
    for (int e = 0; e < f.edge_count(); ++e) {
        int w = tw.edge_label[e];
        cert.s_used = std::max(cert.s_used, w);
        if (w < 1 || w > s_claimed)
            cert.out_of_range.push_back("edge (" + std::to_string(f.edge(e).first) + "," +
                                        std::to_string(f.edge(e).second) + ") label " +
                                        std::to_string(w));
    }
    if (!cert.out_of_range.empty()) return cert;

    auto wt = weighted_degrees(f, tw);
    std::map<int, int> first_seen;
    for (int v = 0; v < f.vertex_count(); ++v) {
        auto [it, fresh] = first_seen.emplace(wt[v], v);
        if (!fresh) cert.collisions.emplace_back(it->second, v, wt[v]);
    }
    cert.valid = cert.collisions.empty();
    return cert;
}

namespace {

void add_check(AuditReport& rep, const std::string& name, bool pass, std::string detail = "") {
    rep.checks.push_back({name, pass, std::move(detail)});
}

}  // namespace

AuditReport audit_construction(const Forest& f, const TotalWeighting& tw, const ClassTable& ct,
                               Mode mode) {
    AuditReport rep;
    const int s = tw.s;

    bool labels_ok = true;
    for (int w : tw.vertex_label) labels_ok &= w >= 1 && w <= s;
    for (int w : tw.edge_label) labels_ok &= w >= 1 && w <= s;
    add_check(rep, "labels_in_range", labels_ok);
    if (!labels_ok) {
        rep.all_pass = false;
        return rep;
    }

    std::vector<bool> isolated(f.edge_count(), false);
    for (int e : ct.isolated_edges) isolated[e] = true;

    int degree_two = -1;
    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) degree_two = v;

    bool nonpendant_s = true;
    std::string bad_edge;
    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edge(e);
        if (f.degree(u) >= 2 && f.degree(v) >= 2 && tw.edge_label[e] != s) {
            nonpendant_s = false;
            bad_edge = "(" + std::to_string(u) + "," + std::to_string(v) + ")=" +
                       std::to_string(tw.edge_label[e]);
        }
    }
    add_check(rep, "non_pendant_edges_s", nonpendant_s, bad_edge);

    // Sub-s labels on non-isolated pendant edges are single-use pool draws.
    std::set<int> pool_seen;
    bool pool_distinct = true;
    int sub_s_pendant_edges = 0;
    for (int e : ct.pendant_edges) {
        int w = tw.edge_label[e];
        if (w < s) ++sub_s_pendant_edges;
        if (isolated[e] || w >= s) continue;
        if (!pool_seen.insert(w).second) pool_distinct = false;
    }
    add_check(rep, "pool_values_distinct", pool_distinct);

    // Sub-s pendant labels at each vertex split into pairs summing to s plus
    // at most one tail value.
    bool pairs_ok = true;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (f.degree(v) < 3) continue;
        std::multiset<int> vals;
        for (const auto& [w, e] : f.incident(v))
            if (f.degree(w) == 1 && tw.edge_label[e] < s) vals.insert(tw.edge_label[e]);
        int leftover = 0;
        while (!vals.empty()) {
            int x = *vals.begin();
            vals.erase(vals.begin());
            auto mate = vals.find(s - x);
            if (mate != vals.end())
                vals.erase(mate);
            else
                ++leftover;
        }
        if (leftover > 1) pairs_ok = false;
    }
    add_check(rep, "front_pairs_sum_s", pairs_ok);

    std::vector<int> wt = weighted_degrees(f, tw);
    bool pendant_range = true;
    for (int v : ct.pendant_vertices) pendant_range &= wt[v] >= 2 && wt[v] <= 2 * s;
    add_check(rep, "pendant_totals_in_2_2s", pendant_range);

    bool nonpendant_range = true;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (f.degree(v) < 2) continue;
        if (mode == Mode::theorem2 && v == degree_two) continue;
        nonpendant_range &= wt[v] >= 2 * s + 2;
    }
    add_check(rep, "non_pendant_totals_above_2s1", nonpendant_range);

    int reserved_users = 0;
    bool reserved_by_d2 = true;
    for (int v = 0; v < f.vertex_count(); ++v)
        if (wt[v] == 2 * s + 1) {
            ++reserved_users;
            if (v != degree_two) reserved_by_d2 = false;
        }
    if (mode == Mode::theorem2 && degree_two >= 0)
        add_check(rep, "reserved_total_2s1", reserved_users == 1 && reserved_by_d2,
                  "uses=" + std::to_string(reserved_users));
    else
        add_check(rep, "reserved_total_2s1", reserved_users == 0,
                  "uses=" + std::to_string(reserved_users));

    bool forced_present = false;
    if (degree_two >= 0)
        for (const auto& [w, e] : f.incident(degree_two)) {
            (void)e;
            if (f.degree(w) == 1) forced_present = true;
        }
    if (ct.isolated_edges.empty() && !forced_present) {
        bool window = sub_s_pendant_edges == s - 2 || sub_s_pendant_edges == s - 1;
        add_check(rep, "sub_s_pendant_window", window,
                  "count=" + std::to_string(sub_s_pendant_edges));
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const AuditCheck& c) { return c.pass; });
    return rep;
}

}  // namespace tvs
