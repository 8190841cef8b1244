#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gog/graph_of_groups.hpp"

namespace gog {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;

    std::vector<std::vector<char>> adjacency() const;
    std::string name(int v) const;
    bool connected() const;
};

// Tree of free abelian groups with, per tree vertex, the defining-graph vertex of each coordinate.
struct RaagTree {
    GraphOfGroups tree;
    std::vector<std::vector<int>> coords;
};

struct ChordlessCycle {
    std::vector<int> cycle;
};

std::optional<std::vector<int>> find_chordless_cycle(const SimpleGraph& g);
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

// Throws std::invalid_argument on empty or disconnected input.
std::variant<RaagTree, ChordlessCycle> build_chordal_raag(const SimpleGraph& g);

// Barycentric subdivision: each edge {i,j} becomes a vertex with group G_i x G_j glued to G_i and G_j.
// Throws std::invalid_argument when the input is not a tree.
GraphOfGroups build_tree_graph_product(const SimpleGraph& tree, const std::vector<int>& ranks);

}  // namespace gog
