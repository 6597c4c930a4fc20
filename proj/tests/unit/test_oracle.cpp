#include "gkm/graph.hpp"

#include "gkm/presets.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gkm;
using gkm::test::pv;

TEST_CASE("depth zero explores only the highest element") {
    auto z = rank2_crystal({2, 1, 1});
    auto g = bfs_image(z, 0, 8);
    REQUIRE(g.nodes.size() == 1);
    CHECK(g.nodes.front().is_zero());
    CHECK(g.edges.empty());
}

TEST_CASE("vanishing parameters confine depth-3 enumeration to ten vectors") {
    auto z = rank2_crystal({0, 0, 0});
    auto g = bfs_image(z, 3, 12);
    CHECK(g.nodes.size() == 10);
    for (const auto& x : g.nodes) {
        CHECK(x.max_position() <= 2);
        CHECK(x.degree() <= 3);
    }
    CHECK_FALSE(g.window_edge_hit);
}

TEST_CASE("a single real index gives one chain node per degree") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1)}, {IndexClass::real}, {{2}});
    auto iota = IotaSequence::periodic(d, {}, {IndexId::plain(1)});
    PathCrystal z(d, iota);
    auto g = bfs_image(z, 6, 8);
    REQUIRE(g.nodes.size() == 7);
    for (const auto& x : g.nodes)
        CHECK(x.max_position() <= 1);
}

TEST_CASE("two lowering edges leave the highest element in rank 2") {
    auto z = rank2_crystal({2, 1, 1});
    auto g = bfs_image(z, 2, 8);
    auto root = g.node_index(PathVector::zero());
    REQUIRE(root.has_value());
    std::set<IndexId> labels;
    for (const auto& e : g.edges)
        if (e.src == *root)
            labels.insert(e.label);
    CHECK(labels.size() == 2);
}

TEST_CASE("edges invert through the raising operator") {
    auto z = rank2_crystal({4, 2, 3});
    auto g = bfs_image(z, 5, 12);
    for (const auto& e : g.edges) {
        auto up = z.e_tilde(g.nodes[e.dst], e.label);
        REQUIRE(up.has_value());
        CHECK(*up == g.nodes[e.src]);
    }
}

TEST_CASE("every nonzero node can be raised without leaving the node set") {
    auto toy = monster_crystal(toy_monster_config());
    auto r2 = rank2_crystal({2, 1, 1});
    struct Case {
        const PathCrystal* z;
        Int depth;
        Int window;
    };
    for (const auto& c : {Case{&toy, 4, 14}, Case{&r2, 5, 12}}) {
        auto g = bfs_image(*c.z, c.depth, c.window);
        std::set<PathVector> nodes(g.nodes.begin(), g.nodes.end());
        for (const auto& x : g.nodes) {
            if (x.is_zero())
                continue;
            bool raised = false;
            for (const auto& i : g.index_set) {
                auto up = c.z->e_tilde(x, i);
                if (up.has_value()) {
                    raised = true;
                    CHECK(nodes.count(*up) == 1);
                }
            }
            CHECK(raised);
        }
    }
}

TEST_CASE("the node set does not depend on expansion order") {
    auto z = rank3_crystal({2, 1, 1, 1, 2, 1, 1, 1});
    auto g = bfs_image(z, 4, 12);
    // Re-derive the closure expanding indices in reverse and frontiers
    // back to front.
    auto indices = g.index_set;
    std::reverse(indices.begin(), indices.end());
    std::set<PathVector> nodes{PathVector::zero()};
    std::vector<PathVector> frontier{PathVector::zero()};
    for (Int d = 0; d < 4; ++d) {
        std::vector<PathVector> next;
        for (auto it = frontier.rbegin(); it != frontier.rend(); ++it)
            for (const auto& i : indices) {
                auto y = z.f_tilde(*it, i);
                if (nodes.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    CHECK(nodes == std::set<PathVector>(g.nodes.begin(), g.nodes.end()));
}

TEST_CASE("node counts stabilize once the window covers the action") {
    // Window 6 misses the level-2 copy (first seen at position 7), so the
    // count grows with the window and then stabilizes.
    auto z = monster_crystal(toy_monster_config());
    std::vector<std::size_t> counts;
    for (Int w : {4, 6, 8, 12, 16, 20})
        counts.push_back(bfs_image(z, 4, w).nodes.size());
    for (std::size_t r = 1; r < counts.size(); ++r)
        CHECK(counts[r] >= counts[r - 1]);
    CHECK(counts[2] > counts[1]);
    CHECK(counts[counts.size() - 1] == counts[counts.size() - 2]);
}

TEST_CASE("character counts nodes by weight") {
    auto z = rank2_crystal({0, 0, 0});
    auto g = bfs_image(z, 3, 8);
    auto table = character(z, g);
    CHECK(table.at(0).size() == 1);
    CHECK(table.at(0).begin()->second == 1);

    Weight w;
    w.add_multiple_of_alpha(IndexId::plain(1), -1);
    w.add_multiple_of_alpha(IndexId::plain(2), -1);
    CHECK(table.at(2).at(w) == 1);

    // Total at each degree equals the recomputed histogram.
    for (const auto& [deg, row] : table) {
        Int total = 0;
        for (const auto& [wt, count] : row)
            total += count;
        Int expected = 0;
        for (const auto& node : g.nodes)
            if (node.degree() == deg)
                ++expected;
        CHECK(total == expected);
    }
}

TEST_CASE("collapsing copies folds monster weights onto levels") {
    auto toy = monster_crystal(toy_monster_config());
    auto g = bfs_image(toy, 3, 12);
    auto folded = character(toy, g, /*collapse_copies=*/true);
    for (const auto& [deg, row] : folded)
        for (const auto& [wt, count] : row)
            for (const auto& [i, c] : wt.coeffs())
                CHECK(i.copy == 0);
}

TEST_CASE("dot export of the singleton graph") {
    auto z = rank2_crystal({2, 1, 1});
    auto g = bfs_image(z, 0, 4);
    auto dot = export_dot(g);
    CHECK(dot.find("digraph crystal") != std::string::npos);
    CHECK(dot.find("\"[]\"") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("dot export lists labeled edges deterministically") {
    auto z = rank2_crystal({2, 1, 1});
    auto g = bfs_image(z, 2, 8);
    auto dot = export_dot(g);
    CHECK(dot.find("\"[]\" -> \"[1]\" [label=\"1\"]") != std::string::npos);
    CHECK(dot == export_dot(g));
}

TEST_CASE("json export round-trips") {
    auto z = monster_crystal(toy_monster_config());
    auto g = bfs_image(z, 4, 14);
    auto doc = export_json(g);
    auto parsed = parse_graph_json(doc);
    CHECK(parsed == g);
    CHECK(export_json(parsed) == doc);
}
