#include "gkm/graph.hpp"

#include "json_detail.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gkm {

using detail::ordered_json;

std::optional<std::size_t> CrystalGraph::node_index(const PathVector& x) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it == nodes.end() || !(*it == x))
        return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

CrystalGraph bfs_image(const PathCrystal& z, const Int& depth, const Int& window) {
    if (depth < 0)
        throw std::invalid_argument("bfs: depth must be >= 0");
    if (window < 1)
        throw std::invalid_argument("bfs: window must be >= 1");

    CrystalGraph g;
    g.depth = depth;
    g.window = window;

    std::set<IndexId> seen;
    for (Int k = 1; k <= window; ++k)
        if (seen.insert(z.iota().at(k)).second)
            g.index_set.push_back(z.iota().at(k));
    std::sort(g.index_set.begin(), g.index_set.end());

    std::set<PathVector> nodes;
    std::vector<PathVector> frontier{PathVector::zero()};
    nodes.insert(PathVector::zero());
    struct RawEdge {
        PathVector src;
        IndexId label;
        PathVector dst;
    };
    std::vector<RawEdge> raw_edges;

    for (Int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<PathVector> next;
        for (const auto& x : frontier) {
            for (const auto& i : g.index_set) {
                const Int pos = z.nf(x, i);
                if (pos >= window)
                    g.window_edge_hit = true;
                PathVector y = x.bumped(pos, 1);
                raw_edges.push_back({x, i, y});
                if (nodes.insert(y).second)
                    next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }

    g.nodes.assign(nodes.begin(), nodes.end());  // set order is the export order
    for (const auto& e : raw_edges) {
        auto s = g.node_index(e.src);
        auto t = g.node_index(e.dst);
        if (s && t)
            g.edges.push_back({*s, e.label, *t});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        if (a.src != b.src)
            return a.src < b.src;
        if (a.label != b.label)
            return a.label < b.label;
        return a.dst < b.dst;
    });
    return g;
}

CharacterTable character(const PathCrystal& z, const CrystalGraph& g, bool collapse_copies) {
    CharacterTable table;
    for (const auto& x : g.nodes) {
        Weight w = z.weight(x);
        if (collapse_copies) {
            Weight folded;
            for (const auto& [i, c] : w.coeffs())
                folded.add_multiple_of_alpha(IndexId::plain(i.level), c);
            w = std::move(folded);
        }
        table[x.degree()][w] += 1;
    }
    return table;
}

std::string export_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    for (const auto& node : g.nodes)
        out += "  \"" + node.str() + "\";\n";
    for (const auto& e : g.edges)
        out += "  \"" + g.nodes[e.src].str() + "\" -> \"" + g.nodes[e.dst].str() +
               "\" [label=\"" + e.label.str() + "\"];\n";
    out += "}\n";
    return out;
}

namespace {

ordered_json vector_to_json(const PathVector& x) {
    // Little-endian: x_1 first.
    ordered_json arr = ordered_json::array();
    const Int top = x.max_position();
    for (Int k = 1; k <= top; ++k)
        arr.push_back(detail::json_int(x.at(k)));
    return arr;
}

PathVector vector_from_json(const ordered_json& arr) {
    PathVector x;
    Int k = 1;
    for (const auto& v : arr) {
        Int value = detail::int_from_json(v);
        if (value != 0)
            x.set(k, value);
        ++k;
    }
    return x;
}

}  // namespace

std::string export_json(const CrystalGraph& g) {
    ordered_json doc;
    doc["depth"] = detail::json_int(g.depth);
    doc["window"] = detail::json_int(g.window);
    ordered_json nodes = ordered_json::array();
    for (const auto& n : g.nodes)
        nodes.push_back(vector_to_json(n));
    doc["nodes"] = std::move(nodes);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json edge;
        edge["src"] = e.src;
        edge["label"] = e.label.str();
        edge["dst"] = e.dst;
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

CrystalGraph parse_graph_json(const std::string& text) {
    ordered_json doc = ordered_json::parse(text);
    CrystalGraph g;
    g.depth = detail::int_from_json(doc.at("depth"));
    g.window = detail::int_from_json(doc.at("window"));
    for (const auto& n : doc.at("nodes"))
        g.nodes.push_back(vector_from_json(n));
    for (const auto& e : doc.at("edges")) {
        auto label = IndexId::parse(e.at("label").get<std::string>());
        if (!label)
            throw std::invalid_argument("graph json: bad edge label");
        g.edges.push_back({e.at("src").get<std::size_t>(), *label, e.at("dst").get<std::size_t>()});
    }
    return g;
}

}  // namespace gkm
