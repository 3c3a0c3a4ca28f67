#ifndef TVS_FOREST_HPP
#define TVS_FOREST_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { theorem1, theorem2, any };

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

struct Violation {
    std::string code;    // "cycle", "isolated_vertex", "degree_two_count", "multi_edge"
    std::string detail;
};

struct ValidationReport {
    Mode mode = Mode::any;
    bool ok = false;
    std::vector<Violation> violations;
};

// Immutable simple acyclic undirected graph. Vertices are dense ids 0..n-1,
// edges stored normalized (u < v) and sorted, so edge ids are deterministic.
class Forest {
public:
    // Throws ParseError on self-loops, duplicate edges, out-of-range ids or cycles.
    static Forest from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // Neighbors as (neighbor id, edge id), ascending by neighbor id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

    // Vertex partition into trees, parts ordered by smallest member id.
    std::vector<std::vector<int>> components() const;

private:
    Forest() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

enum class ForestFormat { json, edgelist };

Forest parse_forest(std::istream& in, ForestFormat format);
Forest parse_forest(const std::string& text, ForestFormat format);
std::string serialize_forest(const Forest& f, ForestFormat format);

ValidationReport validate(const Forest& f, Mode mode);

}  // namespace tvs

#endif
