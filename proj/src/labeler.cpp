#include "tvs/labeler.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tvs {

ValueList::ValueList(int s) : s_(s) {
    if (s < 2) throw ConstructionError("build_value_list", "strength must be >= 2");
    int lo = 1, hi = s - 1;
    while (lo <= hi) {
        order_.push_back(lo++);
        if (lo <= hi) order_.push_back(hi--);
    }
    back_ = static_cast<int>(order_.size()) - 1;
}

std::pair<int, int> ValueList::pop_front_pair() {
    if (front_ + 1 > back_)
        throw ConstructionError("assign_edge_labels", "value pool exhausted (front pair)");
    int a = order_[front_++];
    int b = order_[front_++];
    assert(a + b == s_);
    return {a, b};
}

int ValueList::pop_tail() {
    if (front_ > back_)
        throw ConstructionError("assign_edge_labels", "value pool exhausted (tail)");
    return order_[back_--];
}

ValueList build_value_list(int s) { return ValueList(s); }

namespace {

int find_degree_two_vertex(const Forest& f) {
    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) return v;
    return -1;
}

// Pendant edges labeled s by a vertex's parity/variant choice.
int s_edge_count(int j, Variant var) {
    if (j % 2 == 0) return j / 2;
    return var == Variant::v1 ? (j - 1) / 2 : (j + 1) / 2;
}

}  // namespace

VariantPlan select_variants(const Forest& f, const ClassTable& ct, int s, Mode mode) {
    VariantPlan plan;

    if (mode == Mode::theorem2) {
        int d2 = find_degree_two_vertex(f);
        if (d2 >= 0)
            for (const auto& [w, e] : f.incident(d2))
                if (f.degree(w) == 1) plan.forced_s_edges.push_back(e);
    }

    // Start every odd-j vertex at variant 2 (maximum s-edges).
    std::vector<int> odd_non_c33, c33;
    for (const auto& [kj, ids] : ct.classes) {
        auto [k, j] = kj;
        if (k < 3 || j < 1 || j % 2 == 0) continue;
        for (int v : ids) {
            plan.variant[v] = Variant::v2;
            (k == 3 && j == 3 ? c33 : odd_non_c33).push_back(v);
        }
    }

    // P counts pendant vertices whose pendant edge carries s; an s-labeled
    // isolated edge contributes two such vertices.
    int q = static_cast<int>(ct.isolated_edges.size());
    plan.isolated_ones = q / 2;
    auto pendant_s = [&] {
        int p = 2 * (q - plan.isolated_ones) + static_cast<int>(plan.forced_s_edges.size());
        for (const auto& [kj, ids] : ct.classes) {
            auto [k, j] = kj;
            if (k < 3 || j < 1) continue;
            for (int v : ids)
                p += s_edge_count(j, j % 2 == 0 ? Variant::v1 : plan.variant.at(v));
        }
        return p;
    };

    // Flip v2 -> v1 while over the cap: non-C33 first (descending k, then j,
    // then ascending id), then every other C33 vertex.
    std::sort(odd_non_c33.begin(), odd_non_c33.end(), [&](int a, int b) {
        int ka = f.degree(a), kb = f.degree(b);
        if (ka != kb) return ka > kb;
        return a < b;
    });
    std::vector<int> flip_order = odd_non_c33;
    std::sort(c33.begin(), c33.end());
    for (size_t i = 0; i < c33.size(); i += 2) flip_order.push_back(c33[i]);

    int p = pendant_s();
    for (size_t i = 0; p > s && i < flip_order.size(); ++i) {
        plan.variant[flip_order[i]] = Variant::v1;
        --p;
    }
    // Flips alone can leave P over the cap when forced edges meet isolated
    // edges; demoting an isolated s-edge to 1 frees two pendant slots.
    while (p > s && plan.isolated_ones < q) {
        ++plan.isolated_ones;
        p -= 2;
    }
    plan.planned_pendant_s = p;

    if (p > s)
        throw ConstructionError("select_variants",
                                "cannot reduce pendant s-count to cap s=" + std::to_string(s));

    int n33 = ct.count(3, 3);
    int c33_v1 = 0;
    for (int v : c33)
        if (plan.variant.at(v) == Variant::v1) ++c33_v1;
    if (c33_v1 > (n33 + 1) / 2)
        throw ConstructionError("select_variants", "too many pair-type C33 vertices");

    if (ct.isolated_edges.empty() && plan.forced_s_edges.empty()) {
        int below_s = ct.n1 - p;
        if (below_s != s - 2 && below_s != s - 1)
            throw ConstructionError("select_variants",
                                    "pendant sub-s edge count " + std::to_string(below_s) +
                                        " outside {s-2, s-1}");
    }
    return plan;
}

LabelerState assign_edge_labels(const Forest& f, const ClassTable& ct, const VariantPlan& plan,
                                int s, Mode mode) {
    LabelerState st;
    st.forest = &f;
    st.classes = &ct;
    st.s = s;
    st.mode = mode;
    st.pool = build_value_list(s);
    st.tw.s = s;
    st.tw.mode = mode;
    st.tw.edge_label.assign(f.edge_count(), 0);
    st.tw.vertex_label.assign(f.vertex_count(), 0);
    if (mode == Mode::theorem2) st.degree_two_vertex = find_degree_two_vertex(f);

    std::vector<bool> forced(f.edge_count(), false);
    for (int e : plan.forced_s_edges) forced[e] = true;

    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edge(e);
        if (f.degree(u) >= 2 && f.degree(v) >= 2) st.tw.edge_label[e] = s;  // non-pendant
        if (forced[e]) st.tw.edge_label[e] = s;
    }

    int q = static_cast<int>(ct.isolated_edges.size());
    for (int i = 0; i < q; ++i)  // isolated edges ascend by edge id already
        st.tw.edge_label[ct.isolated_edges[i]] = i < plan.isolated_ones ? 1 : s;

    for (int v = 0; v < f.vertex_count(); ++v) {
        int k = f.degree(v);
        if (k < 3) continue;
        std::vector<int> pend;  // pendant edge ids, ascending neighbor id
        for (const auto& [w, e] : f.incident(v))
            if (f.degree(w) == 1 && !forced[e]) pend.push_back(e);
        int j = static_cast<int>(pend.size());
        if (j == 0) continue;
        int ns = s_edge_count(j, j % 2 == 0 ? Variant::v1 : plan.variant.at(v));
        int rest = j - ns;
        int pairs = rest / 2, tail = rest % 2;

        int idx = 0;
        for (int t = 0; t < ns; ++t) st.tw.edge_label[pend[idx++]] = s;
        for (int t = 0; t < pairs; ++t) {
            auto [a, b] = st.pool.pop_front_pair();
            st.tw.edge_label[pend[idx++]] = a;
            st.tw.edge_label[pend[idx++]] = b;
        }
        BaseDecomposition bd;
        bd.b = (k - j) + ns + pairs;
        if (tail) {
            bd.tail_delta = 1;
            bd.tail_value = st.pool.pop_tail();
            st.tw.edge_label[pend[idx++]] = bd.tail_value;
        }
        st.base[v] = bd;
    }

    // Non-pendant vertices untouched above carry only s-labeled edges.
    for (int v = 0; v < f.vertex_count(); ++v) {
        int k = f.degree(v);
        if (k < 2 || st.base.count(v)) continue;
        st.base[v] = BaseDecomposition{k, 0, 0};
    }

    for (const auto& [v, bd] : st.base) {
        int sum = 0;
        for (const auto& [w, e] : f.incident(v)) {
            (void)w;
            if (st.tw.edge_label[e] == 0)
                throw ConstructionError("assign_edge_labels", "unlabeled edge at vertex " +
                                                                  std::to_string(v));
            sum += st.tw.edge_label[e];
        }
        if (sum != bd.edge_sum(s))
            throw ConstructionError("assign_edge_labels", "base decomposition mismatch at " +
                                                              std::to_string(v));
        if (bd.b < 2 || (bd.b == 2 && f.degree(v) > 3))
            throw ConstructionError("assign_edge_labels", "invalid base at " + std::to_string(v));
    }
    return st;
}

void weight_pendant_vertices(LabelerState& st) {
    const Forest& f = *st.forest;
    const int s = st.s;
    std::vector<bool> isolated(f.edge_count(), false);
    for (int e : st.classes->isolated_edges) isolated[e] = true;

    std::vector<std::pair<int, int>> greedy;  // (edge label, vertex)
    for (int v : st.classes->pendant_vertices) {
        int e = f.incident(v)[0].second;
        int w = st.tw.edge_label[e];
        if (!isolated[e] && w < s) {
            st.tw.vertex_label[v] = 1;
            if (!st.used_pendant_totals.insert(1 + w).second)
                throw ConstructionError("weight_pendant", "duplicate sub-s pendant total");
        } else {
            greedy.emplace_back(w, v);
        }
    }
    std::sort(greedy.begin(), greedy.end());
    for (const auto& [w, v] : greedy) {
        int total = 0;
        for (int t = std::max(2, w + 1); t <= w + s; ++t)
            if (!st.used_pendant_totals.count(t)) {
                total = t;
                break;
            }
        if (total == 0)
            throw ConstructionError("weight_pendant",
                                    "no free total for pendant vertex " + std::to_string(v));
        st.tw.vertex_label[v] = total - w;
        st.used_pendant_totals.insert(total);
    }
}

void weight_midrange(LabelerState& st) {
    const int s = st.s;
    std::vector<std::pair<int, int>> tails;  // (tail value, vertex)
    std::vector<int> pairs;
    for (const auto& [v, bd] : st.base) {
        if (v == st.degree_two_vertex || bd.b != 2) continue;
        if (bd.tail_delta)
            tails.emplace_back(bd.tail_value, v);
        else
            pairs.push_back(v);
    }
    int capacity = (s - 1) - static_cast<int>(pairs.size());
    if (capacity < 0) throw ConstructionError("weight_midrange", "more pair-type vertices than slots");

    // Overflow: largest tail values move to 3s + w(e) in the next range.
    std::sort(tails.begin(), tails.end());
    int overflow = std::max(0, static_cast<int>(tails.size()) - capacity);
    for (int i = static_cast<int>(tails.size()) - overflow; i < static_cast<int>(tails.size());
         ++i) {
        auto [w, v] = tails[i];
        st.tw.vertex_label[v] = s;
        int total = 3 * s + w;
        st.midrange_overflow_totals.insert(total);
        if (!st.used_high_totals.insert(total).second)
            throw ConstructionError("weight_midrange", "duplicate overflow total");
    }
    for (int i = 0; i < static_cast<int>(tails.size()) - overflow; ++i) {
        auto [w, v] = tails[i];
        st.tw.vertex_label[v] = 1;
        if (!st.used_midrange_totals.insert(2 * s + w + 1).second)
            throw ConstructionError("weight_midrange", "duplicate tail total");
    }
    for (int v : pairs) {
        int total = 0;
        for (int t = 2 * s + 2; t <= 3 * s; ++t)
            if (!st.used_midrange_totals.count(t)) {
                total = t;
                break;
            }
        if (total == 0)
            throw ConstructionError("weight_midrange", "midrange full at vertex " +
                                                           std::to_string(v));
        st.tw.vertex_label[v] = total - 2 * s;  // in [2, s]; 2s+1 stays reserved
        st.used_midrange_totals.insert(total);
    }
}

void weight_highrange(LabelerState& st) {
    const int s = st.s;
    for (const auto& [v, bd] : st.base) {
        if (v == st.degree_two_vertex || bd.b != 3 || !bd.tail_delta) continue;
        st.tw.vertex_label[v] = s;
        int total = 4 * s + bd.tail_value;
        st.highrange_fixed_totals.insert(total);
        if (!st.used_high_totals.insert(total).second)
            throw ConstructionError("weight_highrange", "duplicate fixed total");
    }
    for (const auto& [v, bd] : st.base) {
        if (v == st.degree_two_vertex || bd.b != 3 || bd.tail_delta) continue;
        int total = 0;
        for (int t = 3 * s + 1; t <= 4 * s; ++t)
            if (!st.used_high_totals.count(t)) {
                total = t;
                break;
            }
        if (total == 0)
            throw ConstructionError("weight_highrange",
                                    "range full at vertex " + std::to_string(v));
        st.tw.vertex_label[v] = total - 3 * s;
        st.used_high_totals.insert(total);
    }
}

void weight_toprange(LabelerState& st) {
    const int s = st.s;
    std::vector<std::pair<int, int>> rest;  // (edge sum, vertex)
    for (const auto& [v, bd] : st.base) {
        if (v == st.degree_two_vertex || st.tw.vertex_label[v] != 0) continue;
        if (bd.b < 4)
            throw ConstructionError("weight_toprange",
                                    "unhandled low-base vertex " + std::to_string(v));
        rest.emplace_back(bd.edge_sum(s), v);
    }
    std::sort(rest.begin(), rest.end());
    for (const auto& [base, v] : rest) {
        int total = 0;
        for (int t = base + 1; t <= base + s; ++t)
            if (!st.used_high_totals.count(t)) {
                total = t;
                break;
            }
        if (total == 0)
            throw ConstructionError("weight_toprange",
                                    "no slot in window at vertex " + std::to_string(v));
        st.tw.vertex_label[v] = total - base;
        st.used_high_totals.insert(total);
    }
}

void weight_degree_two_vertex(LabelerState& st, int v) {
    if (st.mode != Mode::theorem2)
        throw ConstructionError("weight_degree_two", "not in theorem2 mode");
    const Forest& f = *st.forest;
    if (v < 0 || f.degree(v) != 2)
        throw ConstructionError("weight_degree_two", "vertex is not the degree-2 vertex");
    for (const auto& [w, e] : f.incident(v)) {
        (void)w;
        if (st.tw.edge_label[e] != st.s)
            throw ConstructionError("weight_degree_two", "incident edge not labeled s");
    }
    st.tw.vertex_label[v] = 1;  // wt(v) = 2s+1, the reserved total
}

TotalWeighting construct(const Forest& f, Mode mode) {
    int n2 = 0;
    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) ++n2;

    Mode resolved = mode;
    if (mode == Mode::any) resolved = n2 == 0 ? Mode::theorem1 : Mode::theorem2;
    if (resolved == Mode::theorem2 && n2 == 0) resolved = Mode::theorem1;

    auto report = validate(f, resolved);
    if (!report.ok) {
        std::string msg = "construct: forest outside " + mode_name(resolved) + " scope:";
        for (const auto& viol : report.violations) msg += " " + viol.code;
        throw std::invalid_argument(msg);
    }

    auto [census, ct] = classify(f);
    (void)census;
    int s = strength_target(ct.n1);

    VariantPlan plan = select_variants(f, ct, s, resolved);
    LabelerState st = assign_edge_labels(f, ct, plan, s, resolved);
    weight_pendant_vertices(st);
    if (resolved == Mode::theorem2) weight_degree_two_vertex(st, st.degree_two_vertex);
    weight_midrange(st);
    weight_highrange(st);
    weight_toprange(st);

    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) > 0 && (st.tw.vertex_label[v] < 1 || st.tw.vertex_label[v] > s))
            throw ConstructionError("construct", "vertex label out of range at " +
                                                     std::to_string(v));
    for (int e = 0; e < f.edge_count(); ++e)
        if (st.tw.edge_label[e] < 1 || st.tw.edge_label[e] > s)
            throw ConstructionError("construct", "edge label out of range at edge " +
                                                     std::to_string(e));
    return st.tw;
}

}  // namespace tvs
