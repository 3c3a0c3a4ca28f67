#include "tvs/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace tvs {

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::theorem1: return "theorem1";
        case Mode::theorem2: return "theorem2";
        case Mode::any: return "any";
    }
    return "any";
}

Mode mode_from_name(const std::string& name) {
    if (name == "theorem1" || name == "t1") return Mode::theorem1;
    if (name == "theorem2" || name == "t2") return Mode::theorem2;
    if (name == "any" || name == "auto") return Mode::any;
    throw ParseError("unknown mode: " + name);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false if x and y were already connected.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

Forest Forest::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ParseError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge");

    UnionFind uf(n);
    for (const auto& [u, v] : edges)
        if (!uf.unite(u, v))
            throw ParseError("cycle through edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");

    Forest f;
    f.n_ = n;
    f.edges_ = std::move(edges);
    f.adj_.assign(n, {});
    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edges_[e];
        f.adj_[u].emplace_back(v, e);
        f.adj_[v].emplace_back(u, e);
    }
    for (auto& nbrs : f.adj_) std::sort(nbrs.begin(), nbrs.end());
    return f;
}

std::vector<std::vector<int>> Forest::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> parts;
    for (int root = 0; root < n_; ++root) {
        if (comp[root] != -1) continue;
        std::vector<int> part, stack{root};
        comp[root] = static_cast<int>(parts.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (const auto& [w, e] : adj_[v]) {
                (void)e;
                if (comp[w] == -1) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

Forest parse_json_forest(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("json: expected object with \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : j.at("edges")) {
        if (!item.is_array() || item.size() != 2)
            throw ParseError("json: each edge must be a pair [u,v]");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return Forest::from_edges(n, std::move(edges));
}

Forest parse_edgelist_forest(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("n=", 0) == 0) {
            declared_n = std::stoi(first.substr(2));
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("edgelist line " + std::to_string(lineno) + ": bad vertex id");
        }
        if (!(ls >> v))
            throw ParseError("edgelist line " + std::to_string(lineno) + ": expected two ids");
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    return Forest::from_edges(n, std::move(edges));
}

}  // namespace

Forest parse_forest(std::istream& in, ForestFormat format) {
    return format == ForestFormat::json ? parse_json_forest(in) : parse_edgelist_forest(in);
}

Forest parse_forest(const std::string& text, ForestFormat format) {
    std::istringstream in(text);
    return parse_forest(in, format);
}

std::string serialize_forest(const Forest& f, ForestFormat format) {
    if (format == ForestFormat::json) {
        nlohmann::json j;
        j["n"] = f.vertex_count();
        j["edges"] = nlohmann::json::array();
        for (const auto& [u, v] : f.edges()) j["edges"].push_back({u, v});
        return j.dump();
    }
    std::ostringstream out;
    out << "n=" << f.vertex_count() << "\n";
    for (const auto& [u, v] : f.edges()) out << u << " " << v << "\n";
    return out.str();
}

ValidationReport validate(const Forest& f, Mode mode) {
    ValidationReport report;
    report.mode = mode;
    if (mode != Mode::any) {
        int n0 = 0, n2 = 0;
        for (int v = 0; v < f.vertex_count(); ++v) {
            if (f.degree(v) == 0) ++n0;
            if (f.degree(v) == 2) ++n2;
        }
        if (n0 > 0)
            report.violations.push_back(
                {"isolated_vertex", std::to_string(n0) + " isolated vertices"});
        int allowed_n2 = mode == Mode::theorem2 ? 1 : 0;
        if (n2 > allowed_n2)
            report.violations.push_back(
                {"degree_two_count", std::to_string(n2) + " degree-2 vertices (allowed " +
                                         std::to_string(allowed_n2) + ")"});
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace tvs
