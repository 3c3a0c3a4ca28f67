#include "tvs/exact.hpp"

#include <algorithm>

#include "tvs/classify.hpp"

namespace tvs {

namespace {

class Searcher {
public:
    Searcher(const Forest& f, int s) : f_(f), s_(s) {
        edge_label_.assign(f.edge_count(), 0);
        vertex_label_.assign(f.vertex_count(), 0);
        wt_used_.assign((f.vertex_count() + 1) * s + 2, false);

        // DFS preorder per component, components by smallest vertex id. Each
        // vertex's step labels its child edges then the vertex itself, so its
        // weighted degree finalizes immediately and prunes early.
        std::vector<bool> seen(f.vertex_count(), false);
        for (int root = 0; root < f.vertex_count(); ++root) {
            if (seen[root]) continue;
            std::vector<int> stack{root};
            seen[root] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                preorder_.push_back(v);
                child_edges_.emplace_back();
                std::vector<int> children;
                for (const auto& [w, e] : f.incident(v)) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    child_edges_.back().push_back(e);
                    children.push_back(w);
                }
                // Keep DFS order deterministic: descend into smallest id last
                // pushed first.
                for (auto it = children.rbegin(); it != children.rend(); ++it)
                    stack.push_back(*it);
            }
        }
    }

    std::optional<TotalWeighting> run() {
        if (!visit(0)) return std::nullopt;
        TotalWeighting tw;
        tw.s = s_;
        tw.edge_label = edge_label_;
        tw.vertex_label = vertex_label_;
        return tw;
    }

private:
    bool visit(std::size_t idx) {
        if (idx == preorder_.size()) return true;
        return assign_edges(idx, 0, 1);
    }

    bool assign_edges(std::size_t idx, std::size_t ei, int leaf_floor) {
        int v = preorder_[idx];
        const auto& edges = child_edges_[idx];
        if (ei == edges.size()) {
            int edge_sum = 0;
            for (const auto& [w, e] : f_.incident(v)) {
                (void)w;
                edge_sum += edge_label_[e];
            }
            for (int wv = 1; wv <= s_; ++wv) {
                int wt = edge_sum + wv;
                if (wt_used_[wt]) continue;
                wt_used_[wt] = true;
                vertex_label_[v] = wv;
                if (visit(idx + 1)) return true;
                vertex_label_[v] = 0;
                wt_used_[wt] = false;
            }
            return false;
        }
        int e = edges[ei];
        const auto& [a, b] = f_.edge(e);
        int child = a == v ? b : a;
        // Sibling leaves are interchangeable: force non-decreasing labels.
        bool leaf = f_.degree(child) == 1;
        int from = leaf ? leaf_floor : 1;
        for (int we = from; we <= s_; ++we) {
            edge_label_[e] = we;
            if (assign_edges(idx, ei + 1, leaf ? we : leaf_floor)) return true;
            edge_label_[e] = 0;
        }
        return false;
    }

    const Forest& f_;
    int s_;
    std::vector<int> edge_label_, vertex_label_;
    std::vector<bool> wt_used_;
    std::vector<int> preorder_;
    std::vector<std::vector<int>> child_edges_;
};

}  // namespace

std::optional<TotalWeighting> feasible(const Forest& f, int s, int size_guard) {
    if (s < 1) throw std::invalid_argument("feasible: s must be >= 1");
    if (f.vertex_count() > size_guard)
        throw GuardExceeded("feasible: instance size " + std::to_string(f.vertex_count()) +
                            " exceeds guard " + std::to_string(size_guard));
    return Searcher(f, s).run();
}

ExactResult exact_tvs(const Forest& f, int cap, int size_guard) {
    BoundsReport b = bounds(f);
    int start = std::max(1, b.eq1_applicable ? b.lb_eq1 : 1);
    if (b.lb_forest_applicable) start = std::max(start, b.lb_forest);
    for (int s = start; s <= cap; ++s) {
        if (auto witness = feasible(f, s, size_guard)) {
            return {s, std::move(*witness)};
        }
    }
    throw GuardExceeded("exact_tvs: no feasible labeling up to cap " + std::to_string(cap));
}

}  // namespace tvs
