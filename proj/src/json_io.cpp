#include "tvs/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace tvs {

std::string labeling_to_json(const Forest& f, const TotalWeighting& tw) {
    nlohmann::json j;
    j["s"] = tw.s;
    j["mode"] = mode_name(tw.mode);
    j["edge_labels"] = nlohmann::json::array();
    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edge(e);
        j["edge_labels"].push_back({{"u", u}, {"v", v}, {"w", tw.edge_label[e]}});
    }
    j["vertex_labels"] = tw.vertex_label;
    j["weighted_degrees"] = weighted_degrees(f, tw);
    return j.dump(2);
}

TotalWeighting labeling_from_json(const std::string& text, const Forest& f) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("labeling json: ") + e.what());
    }
    TotalWeighting tw;
    tw.s = j.at("s").get<int>();
    tw.mode = j.contains("mode") ? mode_from_name(j.at("mode").get<std::string>())
                                 : Mode::theorem1;
    tw.vertex_label = j.at("vertex_labels").get<std::vector<int>>();
    if (static_cast<int>(tw.vertex_label.size()) != f.vertex_count())
        throw ParseError("labeling json: vertex_labels size mismatch");
    tw.edge_label.assign(f.edge_count(), 0);
    for (const auto& item : j.at("edge_labels")) {
        int u = item.at("u").get<int>(), v = item.at("v").get<int>();
        if (u > v) std::swap(u, v);
        bool found = false;
        for (int e = 0; e < f.edge_count(); ++e)
            if (f.edge(e) == std::pair<int, int>{u, v}) {
                tw.edge_label[e] = item.at("w").get<int>();
                found = true;
                break;
            }
        if (!found)
            throw ParseError("labeling json: edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") not in forest");
    }
    return tw;
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["valid"] = cert.valid;
    j["s_used"] = cert.s_used;
    j["collisions"] = nlohmann::json::array();
    for (const auto& [u, v, wt] : cert.collisions)
        j["collisions"].push_back({{"u", u}, {"v", v}, {"wt", wt}});
    j["out_of_range"] = cert.out_of_range;
    return j.dump(2);
}

std::string audit_to_json(const AuditReport& rep) {
    nlohmann::json j;
    j["all_pass"] = rep.all_pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j.dump(2);
}

std::string to_dot(const Forest& f, const TotalWeighting& tw) {
    auto wt = weighted_degrees(f, tw);
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < f.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << tw.vertex_label[v] << "|" << wt[v] << "\"];\n";
    for (int e = 0; e < f.edge_count(); ++e) {
        const auto& [u, v] = f.edge(e);
        out << "  " << u << " -- " << v << " [label=\"" << tw.edge_label[e] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tvs
