#pragma once

#include "gkm/bigint.hpp"
#include "gkm/index_id.hpp"
#include "gkm/path_crystal.hpp"
#include "gkm/path_vector.hpp"
#include "gkm/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Finite portion of the crystal graph: the lowering closure of the zero
// vector cut at a total degree, with edges labeled by the acting index.
// Nodes are sorted by (degree, little-endian lexicographic), edges by
// (source, label, target), so all exports are deterministic.
struct CrystalGraph {
    struct Edge {
        std::size_t src;
        IndexId label;
        std::size_t dst;

        friend bool operator==(const Edge& a, const Edge& b) {
            return a.src == b.src && a.label == b.label && a.dst == b.dst;
        }
    };

    std::vector<PathVector> nodes;
    std::vector<Edge> edges;
    Int depth = 0;
    Int window = 0;
    std::vector<IndexId> index_set;   // indices occurring in positions 1..window
    bool window_edge_hit = false;     // some lowering landed at or past the window edge

    std::optional<std::size_t> node_index(const PathVector& x) const;

    friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
        return a.nodes == b.nodes && a.edges == b.edges && a.depth == b.depth &&
               a.window == b.window;
    }
};

// Breadth-first closure of the zero vector under lowering by every index
// occurring in positions 1..window, cut at total degree `depth`.
CrystalGraph bfs_image(const PathCrystal& z, const Int& depth, const Int& window);

// Weight histogram of the node set, grouped by total degree. With
// collapse_copies every (level, copy) index is folded onto its plain
// level before histogramming.
using CharacterTable = std::map<Int, std::map<Weight, Int>>;
CharacterTable character(const PathCrystal& z, const CrystalGraph& g, bool collapse_copies = false);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
CrystalGraph parse_graph_json(const std::string& text);

}  // namespace gkm
