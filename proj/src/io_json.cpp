#include "csfkit/io_json.hpp"

#include <stdexcept>

namespace csfkit {

using nlohmann::json;

json poset_to_json(const Poset& p) {
    json pairs = json::array();
    for (auto [i, j] : p.relation_pairs()) pairs.push_back(json::array({i, j}));
    return json{{"n", p.size()}, {"lt", pairs}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("lt"))
        throw std::invalid_argument("poset JSON: expected {\"n\": ..., \"lt\": [...]}");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("lt")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("poset JSON: lt entries must be pairs");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Poset::from_relations(n, pairs);
}

json listing_to_json(const PartListing& listing) {
    json parts = json::array();
    for (const Part& p : listing.parts()) {
        if (p.is_vertex()) {
            parts.push_back(json{{"v", p.level}});
        } else {
            json edges = json::array();
            for (auto [d, u] : p.graph->edges()) edges.push_back(json::array({d + 1, u + 1}));
            parts.push_back(json{{"b", json{{"level", p.level},
                                            {"r", p.graph->r},
                                            {"s", p.graph->s},
                                            {"edges", edges}}}});
        }
    }
    return json{{"parts", parts}};
}

PartListing listing_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parts"))
        throw std::invalid_argument("listing JSON: expected {\"parts\": [...]}");
    std::vector<Part> parts;
    for (const auto& e : j.at("parts")) {
        if (e.contains("v")) {
            parts.push_back(vertex_part(e.at("v").get<int>()));
        } else if (e.contains("b")) {
            const auto& b = e.at("b");
            int r = b.at("r").get<int>();
            int s = b.at("s").get<int>();
            std::vector<Edge> edges;
            for (const auto& ed : b.at("edges"))
                edges.emplace_back(ed[0].get<int>() - 1, ed[1].get<int>() - 1);
            parts.push_back(
                graph_part(b.at("level").get<int>(), BicolouredGraph::from_edges(r, s, edges)));
        } else {
            throw std::invalid_argument("listing JSON: part must have \"v\" or \"b\"");
        }
    }
    return PartListing(std::move(parts));
}

json symfunc_to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms()) {
        json partition = json::array();
        for (int part : p.parts()) partition.push_back(part);
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"partition", partition}});
    }
    return json{{"basis", f.basis() == Basis::M ? "m" : "e"}, {"terms", terms}};
}

}  // namespace csfkit
