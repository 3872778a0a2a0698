#include "polypart/graph_export.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "polypart/path_engine.hpp"

namespace polypart {

namespace {

struct DisjointSet {
    std::vector<std::uint32_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::uint64_t pack(Coord c) { return (c.i << 32) | c.j; }

}  // namespace

std::size_t TruncatedGraph::index_of(Coord v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        throw std::out_of_range("coordinate is not a vertex of the truncation");
    return static_cast<std::size_t>(it - vertices.begin());
}

TruncatedGraph build_graph(PolygonOrder s, std::uint64_t bound) {
    if (bound < 3) throw std::invalid_argument("graph bound must be >= 3");
    const Representation rep = standard_rep(s);

    TruncatedGraph g;
    g.sides = s.sides();
    g.bound = bound;

    for (std::uint64_t j = 0; j <= (bound - 3) / rep.cj; ++j) {
        const std::uint64_t rest = bound - 3 - rep.cj * j;
        for (std::uint64_t i = 0; i <= rest / rep.ci; ++i)
            g.vertices.push_back({i, j});
    }
    std::sort(g.vertices.begin(), g.vertices.end());

    // coordinates above 2^32 cannot appear under bound checks, so packing is safe
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(g.vertices.size() * 2);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(pack(g.vertices[i]), static_cast<std::uint32_t>(i));

    std::vector<std::pair<Coord, Coord>> steps;
    for_each_triple_upto(s, bound, [&](const IndexTriple& t, std::uint64_t value) {
        for (const AdmissiblePath& path : paths_for_triple(t)) {
            const std::vector<Coord>& seq = path.vertices;
            for (std::size_t v = 0; v + 1 < seq.size(); ++v) {
                // every path vertex carries a partial sum <= the triple value
                if (rep.value_at(seq[v + 1]) > value)
                    throw std::logic_error("path vertex exceeds its triple value");
                steps.emplace_back(seq[v], seq[v + 1]);
            }
        }
    });
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    g.edges = std::move(steps);

    DisjointSet dsu(g.vertices.size());
    g.on_path.assign(g.vertices.size(), 0);
    for (const auto& [from, to] : g.edges) {
        const std::uint32_t a = index.at(pack(from));
        const std::uint32_t b = index.at(pack(to));
        dsu.unite(a, b);
        g.on_path[a] = 1;
        g.on_path[b] = 1;
    }

    // label components in order of first appearance over the sorted vertices
    g.component.assign(g.vertices.size(), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> relabel;
    relabel.reserve(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const std::uint32_t root = dsu.find(static_cast<std::uint32_t>(i));
        const auto [it, fresh] =
            relabel.emplace(root, static_cast<std::uint32_t>(relabel.size()));
        g.component[i] = it->second;
        (void)fresh;
    }
    return g;
}

std::set<std::uint64_t> nontrivial_values(const TruncatedGraph& g) {
    const Representation rep =
        standard_rep(PolygonOrder{g.sides});
    std::set<std::uint64_t> values;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.on_path[i]) values.insert(rep.value_at(g.vertices[i]));
    return values;
}

std::string to_dot(const TruncatedGraph& g) {
    const Representation rep = standard_rep(PolygonOrder{g.sides});
    std::ostringstream out;
    out << "digraph G {\n";
    for (const Coord& v : g.vertices)
        out << "  v_" << v.i << "_" << v.j << " [label=\"(" << v.i << "," << v.j
            << "):" << rep.value_at(v) << "\"];\n";
    for (const auto& [from, to] : g.edges)
        out << "  v_" << from.i << "_" << from.j << " -> v_" << to.i << "_"
            << to.j << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const TruncatedGraph& g) {
    const Representation rep = standard_rep(PolygonOrder{g.sides});
    nlohmann::ordered_json doc;
    doc["s"] = g.sides;
    doc["N"] = g.bound;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const Coord& v = g.vertices[i];
        doc["vertices"].push_back({{"i", v.i},
                                   {"j", v.j},
                                   {"value", rep.value_at(v)},
                                   {"component", g.component[i]},
                                   {"nontrivial", g.on_path[i] != 0}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : g.edges)
        doc["edges"].push_back({from.i, from.j, to.i, to.j});
    return doc.dump();
}

TruncatedGraph graph_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    TruncatedGraph g;
    g.sides = doc.at("s").get<std::uint64_t>();
    g.bound = doc.at("N").get<std::uint64_t>();
    for (const auto& v : doc.at("vertices")) {
        g.vertices.push_back(
            {v.at("i").get<std::uint64_t>(), v.at("j").get<std::uint64_t>()});
        g.component.push_back(v.at("component").get<std::uint32_t>());
        g.on_path.push_back(v.at("nontrivial").get<bool>() ? 1 : 0);
    }
    for (const auto& e : doc.at("edges")) {
        g.edges.emplace_back(
            Coord{e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()},
            Coord{e.at(2).get<std::uint64_t>(), e.at(3).get<std::uint64_t>()});
    }
    return g;
}

}  // namespace polypart
