#include <fstream>
#include <sstream>

#include <json.hpp>

#include "probemr/mr_classify.hpp"

namespace probemr {

const SpecialGraphCatalog& SpecialGraphCatalog::builtin() {
    static SpecialGraphCatalog catalog{"1-untranscribed", {}};
    return catalog;
}

SpecialGraphCatalog SpecialGraphCatalog::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SpecialGraphCatalog catalog;
    catalog.version = j.at("version").get<std::string>();
    for (const auto& e : j.at("entries")) {
        SpecialGraphEntry entry;
        entry.name = e.at("name").get<std::string>();
        int n = e.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& uv : e.at("edges"))
            edges.emplace_back(uv.at(0).get<int>(), uv.at(1).get<int>());
        entry.base = Graph(n, edges);
        if (e.contains("labels"))
            for (auto it = e.at("labels").begin(); it != e.at("labels").end(); ++it)
                entry.labels[it.key()] = it.value().get<int>();
        if (e.contains("subdividable"))
            for (const auto& uv : e.at("subdividable"))
                entry.subdividable.emplace_back(uv.at(0).get<int>(), uv.at(1).get<int>());
        catalog.entries.push_back(std::move(entry));
    }
    return catalog;
}

SpecialGraphCatalog SpecialGraphCatalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

namespace {

// Exact subdivision embedding: an injection of base vertices into g (degrees
// are preserved by subdivision, so they must agree), each base edge realized
// by a path that is a single edge unless marked subdividable, all paths
// internally disjoint, every vertex and edge of g used.
struct SubdivisionMatcher {
    const Graph& g;
    const SpecialGraphEntry& entry;
    std::vector<std::pair<int, int>> base_edges;
    std::vector<int> map; // base vertex -> g vertex
    VertexMask used = 0;
    int edges_used = 0;
    const std::optional<std::pair<std::vector<std::string>, VertexMask>>& required;

    SubdivisionMatcher(const Graph& graph, const SpecialGraphEntry& e,
                       const std::optional<std::pair<std::vector<std::string>, VertexMask>>& req)
        : g(graph), entry(e), base_edges(e.base.edges()), map(e.base.order(), -1),
          required(req) {}

    bool subdividable(int u, int v) const {
        for (auto [a, b] : entry.subdividable)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }

    bool run() {
        if (g.order() < entry.base.order()) return false;
        if (entry.subdividable.empty() && g.order() != entry.base.order()) return false;
        return assign(0);
    }

    bool assign(size_t next) {
        if (next == map.size()) {
            if (required) {
                VertexMask got = 0;
                for (const std::string& lab : required->first) {
                    auto it = entry.labels.find(lab);
                    if (it == entry.labels.end()) return false;
                    got |= bit(map[it->second]);
                }
                if (got != required->second) return false;
            }
            return connect(0);
        }
        for (int v = 0; v < g.order(); ++v) {
            if (used >> v & 1) continue;
            if (g.degree(v) != entry.base.degree(static_cast<int>(next))) continue;
            map[next] = v;
            used |= bit(v);
            if (assign(next + 1)) return true;
            used &= ~bit(v);
            map[next] = -1;
        }
        return false;
    }

    bool connect(size_t edge_idx) {
        if (edge_idx == base_edges.size())
            return used == g.full_mask() && edges_used == g.size();
        auto [bu, bv] = base_edges[edge_idx];
        int s = map[bu], t = map[bv];
        if (!subdividable(bu, bv)) {
            if (!g.has_edge(s, t)) return false;
            ++edges_used;
            bool ok = connect(edge_idx + 1);
            --edges_used;
            return ok;
        }
        return walk(s, t, edge_idx, 0);
    }

    bool walk(int cur, int t, size_t edge_idx, int len) {
        if (g.has_edge(cur, t)) {
            edges_used += len + 1;
            if (connect(edge_idx + 1)) return true;
            edges_used -= len + 1;
        }
        VertexMask next = g.neighbors(cur) & ~used & ~bit(t);
        while (next) {
            int w = lowest_bit(next);
            next &= next - 1;
            if (g.degree(w) != 2) continue; // internal path vertices have degree 2
            used |= bit(w);
            if (walk(w, t, edge_idx, len + 1)) return true;
            used &= ~bit(w);
        }
        return false;
    }
};

} // namespace

std::optional<SpecialMatch> special_graph_match(
    const Graph& g, const SpecialGraphCatalog& catalog,
    const std::optional<std::pair<std::vector<std::string>, VertexMask>>& required) {
    for (size_t i = 0; i < catalog.entries.size(); ++i) {
        SubdivisionMatcher matcher(g, catalog.entries[i], required);
        if (!matcher.run()) continue;
        SpecialMatch match;
        match.entry_index = static_cast<int>(i);
        match.name = catalog.entries[i].name;
        for (const auto& [lab, bv] : catalog.entries[i].labels)
            match.label_to_vertex[lab] = matcher.map[bv];
        return match;
    }
    return std::nullopt;
}

} // namespace probemr
