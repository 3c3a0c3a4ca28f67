#include "tvs/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tvs {

Forest decode_prufer(const std::vector<int>& seq, int n) {
    if (n < 2) throw std::invalid_argument("decode_prufer: n must be >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("decode_prufer: sequence length must be n-2");
    for (int x : seq)
        if (x < 0 || x >= n) throw std::invalid_argument("decode_prufer: entry out of range");

    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];

    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.emplace_back(a, b);
    return Forest::from_edges(n, std::move(edges));
}

namespace {

std::string ahu_code(const Forest& t, int v, int parent) {
    std::vector<std::string> kids;
    for (const auto& [w, e] : t.incident(v)) {
        (void)e;
        if (w != parent) kids.push_back(ahu_code(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (const auto& k : kids) code += k;
    code += ")";
    return code;
}

std::vector<int> centroids(const Forest& t) {
    int n = t.vertex_count();
    std::vector<int> size(n, 1), best;
    int best_weight = n + 1;
    std::function<void(int, int)> sizes = [&](int v, int parent) {
        for (const auto& [w, e] : t.incident(v)) {
            (void)e;
            if (w != parent) {
                sizes(w, v);
                size[v] += size[w];
            }
        }
    };
    sizes(0, -1);
    std::function<void(int, int)> find = [&](int v, int parent) {
        int weight = n - size[v];
        for (const auto& [w, e] : t.incident(v)) {
            (void)e;
            if (w != parent) weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
        for (const auto& [w, e] : t.incident(v)) {
            (void)e;
            if (w != parent) find(w, v);
        }
    };
    find(0, -1);
    return best;
}

int count_degree2(const Forest& f) {
    int n2 = 0;
    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) ++n2;
    return n2;
}

}  // namespace

std::string canonical_form(const Forest& t) {
    if (t.components().size() != 1)
        throw std::invalid_argument("canonical_form: input must be a single tree");
    if (t.vertex_count() == 1) return "()";
    auto cs = centroids(t);
    std::string code = ahu_code(t, cs[0], -1);
    for (std::size_t i = 1; i < cs.size(); ++i)
        code = std::min(code, ahu_code(t, cs[i], -1));
    return code;
}

namespace {

// Allocation-light tree scratchpad for the exhaustive sweep; a Forest is
// only materialized for the first representative of each class.
constexpr int kMaxEnum = 10;

struct FlatTree {
    int n = 0;
    int adj[kMaxEnum][kMaxEnum];
    int adjn[kMaxEnum];
    int size[kMaxEnum];

    void add_edge(int u, int v) {
        adj[u][adjn[u]++] = v;
        adj[v][adjn[v]++] = u;
    }
};

// O(n) pointer-based Prüfer decode.
void decode_flat(const int* seq, int n, FlatTree& t) {
    t.n = n;
    std::fill(t.adjn, t.adjn + n, 0);
    int deg[kMaxEnum];
    std::fill(deg, deg + n, 1);
    for (int i = 0; i < n - 2; ++i) ++deg[seq[i]];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        int x = seq[i];
        t.add_edge(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.add_edge(leaf, n - 1);
}

void flat_sizes(FlatTree& t, int v, int parent) {
    t.size[v] = 1;
    for (int i = 0; i < t.adjn[v]; ++i) {
        int w = t.adj[v][i];
        if (w == parent) continue;
        flat_sizes(t, w, v);
        t.size[v] += t.size[w];
    }
}

std::string flat_ahu(const FlatTree& t, int v, int parent) {
    std::string kids[kMaxEnum];
    int k = 0;
    for (int i = 0; i < t.adjn[v]; ++i) {
        int w = t.adj[v][i];
        if (w != parent) kids[k++] = flat_ahu(t, w, v);
    }
    std::sort(kids, kids + k);
    std::string code = "(";
    for (int i = 0; i < k; ++i) code += kids[i];
    code += ")";
    return code;
}

std::string flat_canonical(FlatTree& t) {
    flat_sizes(t, 0, -1);
    int best_weight = t.n + 1;
    int cs[2] = {-1, -1};
    int cn = 0;
    for (int v = 0; v < t.n; ++v) {
        // size[] is rooted at 0; the piece through the parent has n - size[v].
        int weight = t.n - t.size[v];
        for (int i = 0; i < t.adjn[v]; ++i) {
            int w = t.adj[v][i];
            if (t.size[w] < t.size[v]) weight = std::max(weight, t.size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            cs[0] = v;
            cn = 1;
        } else if (weight == best_weight && cn < 2) {
            cs[cn++] = v;
        }
    }
    std::string code = flat_ahu(t, cs[0], -1);
    if (cn == 2) code = std::min(code, flat_ahu(t, cs[1], -1));
    return code;
}

}  // namespace

std::vector<Forest> enumerate_trees(int n, const TreeConstraints& c) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("enumerate_trees: n out of guard range [2,10]");
    std::vector<Forest> out;
    std::set<std::string> seen;
    std::vector<int> seq(std::max(0, n - 2), 0);
    FlatTree t;
    while (true) {
        decode_flat(seq.data(), n, t);
        if (seen.insert(flat_canonical(t)).second) {
            int n2 = 0;
            for (int v = 0; v < n; ++v)
                if (t.adjn[v] == 2) ++n2;
            if (n2 >= c.min_n2 && n2 <= c.max_n2) {
                std::vector<std::pair<int, int>> edges;
                for (int v = 0; v < n; ++v)
                    for (int i = 0; i < t.adjn[v]; ++i)
                        if (v < t.adj[v][i]) edges.emplace_back(v, t.adj[v][i]);
                out.push_back(Forest::from_edges(n, std::move(edges)));
            }
        }
        // Odometer over all n^(n-2) sequences.
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

Forest random_forest(const GeneratorSpec& spec) {
    if (spec.min_components < 1 || spec.max_components < spec.min_components ||
        spec.min_size < 1 || spec.max_size < spec.min_size)
        throw std::invalid_argument("random_forest: empty spec ranges");

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> comp_dist(spec.min_components, spec.max_components);
    std::uniform_int_distribution<int> size_dist(spec.min_size, spec.max_size);

    int components = comp_dist(rng);
    int budget = spec.retry_budget;
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    int n2_used = 0;

    for (int cix = 0; cix < components; ++cix) {
        while (true) {
            if (--budget < 0)
                throw std::runtime_error("random_forest: retry budget exhausted; "
                                         "constraints likely infeasible");
            int k = size_dist(rng);
            if (k == 1) continue;  // no isolated vertices in any theorem mode
            if (k == 2 && !spec.allow_isolated_edges) continue;
            std::vector<int> seq(k - 2);
            std::uniform_int_distribution<int> vert(0, k - 1);
            for (int& x : seq) x = vert(rng);
            Forest t = decode_prufer(seq, k);
            int n2 = count_degree2(t);
            if (n2_used + n2 > spec.max_n2) continue;
            n2_used += n2;
            for (const auto& [u, v] : t.edges()) edges.emplace_back(u + offset, v + offset);
            offset += k;
            break;
        }
    }
    return Forest::from_edges(offset, std::move(edges));
}

namespace {

// Rooted full binary tree shape: index -1 = leaf, otherwise a pair of
// subtree handles into the pool.
struct Shape {
    int left = -1, right = -1;
};

struct ShapePool {
    std::vector<Shape> nodes;                  // internal nodes only
    std::vector<std::vector<int>> by_leaves;   // handles; leaf handle = -1

    // handle encoding: -1 = single leaf, otherwise index into nodes.
    void build(int max_leaves) {
        by_leaves.assign(max_leaves + 1, {});
        if (max_leaves >= 1) by_leaves[1] = {-1};
        for (int l = 2; l <= max_leaves; ++l) {
            for (int l1 = 1; l1 * 2 <= l; ++l1) {
                int l2 = l - l1;
                const auto& lhs = by_leaves[l1];
                const auto& rhs = by_leaves[l2];
                for (std::size_t i = 0; i < lhs.size(); ++i) {
                    std::size_t jstart = l1 == l2 ? i : 0;
                    for (std::size_t j = jstart; j < rhs.size(); ++j) {
                        nodes.push_back({lhs[i], rhs[j]});
                        by_leaves[l].push_back(static_cast<int>(nodes.size()) - 1);
                    }
                }
            }
        }
    }

    // Materialize the subtree under `handle`; returns its root vertex id.
    int emit(int handle, std::vector<std::pair<int, int>>& edges, int& next_id) const {
        int id = next_id++;
        if (handle >= 0) {
            int l = emit(nodes[handle].left, edges, next_id);
            int r = emit(nodes[handle].right, edges, next_id);
            edges.emplace_back(id, l);
            edges.emplace_back(id, r);
        }
        return id;
    }
};

}  // namespace

std::vector<Forest> enumerate_binary_trees(int max_leaves, bool with_degree2_root) {
    if (max_leaves < 2) return {};
    ShapePool pool;
    pool.build(max_leaves - 1 + (with_degree2_root ? 0 : 1));

    std::vector<Forest> out;
    std::set<std::string> seen;
    auto join = [&](int h1, int h2) {
        std::vector<std::pair<int, int>> edges;
        int next_id = 0;
        if (with_degree2_root) {
            int root = next_id++;
            int a = pool.emit(h1, edges, next_id);
            int b = pool.emit(h2, edges, next_id);
            edges.emplace_back(root, a);
            edges.emplace_back(root, b);
        } else {
            int a = pool.emit(h1, edges, next_id);
            int b = pool.emit(h2, edges, next_id);
            edges.emplace_back(a, b);
        }
        Forest t = Forest::from_edges(next_id, std::move(edges));
        if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
    };

    for (int l = 2; l <= max_leaves; ++l) {
        for (int l1 = 1; l1 * 2 <= l; ++l1) {
            int l2 = l - l1;
            if (l2 >= static_cast<int>(pool.by_leaves.size())) continue;
            for (int h1 : pool.by_leaves[l1])
                for (int h2 : pool.by_leaves[l2]) join(h1, h2);
        }
    }
    return out;
}

}  // namespace tvs
