#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gog/group.hpp"
#include "gog/subgroup.hpp"

namespace gog {

// Directed edges come in pairs; inv is stored explicitly and validated.
struct Graph {
    int num_vertices = 0;
    std::vector<int> o, t, inv;

    int num_edges() const { return static_cast<int>(o.size()); }
    int num_pairs() const { return num_edges() / 2; }
    int add_vertex() { return num_vertices++; }
    // Returns the new edge e; its inverse is e + 1.
    int add_edge_pair(int from, int to);
    std::vector<int> out_edges(int v) const;
    bool connected() const;
    bool is_loop(int e) const { return o[static_cast<std::size_t>(e)] == t[static_cast<std::size_t>(e)]; }
};

struct GraphOfGroups {
    Graph graph;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;  // per directed edge; inverses carry a "-1" suffix
    std::vector<GroupPtr> vgroup;
    std::vector<GroupPtr> egroup;  // per directed edge
    std::vector<MonoMap> alpha;    // per directed edge, A_e -> A_o(e)

    int add_vertex(std::string name, GroupPtr G);
    int add_edge(std::string name, int from, int to, GroupPtr E, std::vector<Elem> alpha_images,
                 std::vector<Elem> omega_images);

    const MonoMap& alpha_of(int e) const { return alpha[static_cast<std::size_t>(e)]; }
    const MonoMap& omega_of(int e) const { return alpha[static_cast<std::size_t>(graph.inv[static_cast<std::size_t>(e)])]; }
    const Group& vg(int v) const { return *vgroup[static_cast<std::size_t>(v)]; }
    int o(int e) const { return graph.o[static_cast<std::size_t>(e)]; }
    int t(int e) const { return graph.t[static_cast<std::size_t>(e)]; }
    int inv(int e) const { return graph.inv[static_cast<std::size_t>(e)]; }

    int vertex_id(std::string_view name) const;  // -1 when unknown
    int edge_id(std::string_view name) const;

    // Empty iff every structural invariant holds.
    std::vector<std::string> validate() const;
};

struct APath {
    int start = 0;
    std::vector<Elem> a;  // length() + 1 elements
    std::vector<int> e;

    int length() const { return static_cast<int>(e.size()); }
    friend bool operator==(const APath&, const APath&) = default;
};

int path_end(const GraphOfGroups& A, const APath& p);
std::vector<std::string> check_path(const GraphOfGroups& A, const APath& p);
APath identity_path(const GraphOfGroups& A, int v);
APath element_path(int v, Elem a);

struct Reduction {
    int position;  // index of the middle element in the path before the step
    int edge;
    Elem c;
};

struct ReducedPath {
    APath path;
    std::vector<Reduction> log;
};

// Leftmost-first elementary reductions until none applies.
ReducedPath reduce_a_path(const GraphOfGroups& A, const APath& p);
bool is_reduced(const GraphOfGroups& A, const APath& p);
APath path_compose(const GraphOfGroups& A, const APath& p, const APath& q);
APath path_invert(const GraphOfGroups& A, const APath& p);
// True when the reduced path is the trivial element.
bool represents_identity(const GraphOfGroups& A, const APath& p);

std::string format_path(const GraphOfGroups& A, const APath& p);
// "a0 | e1 | a1 | ... | ek | ak"; empty element segments denote the identity.
APath parse_path(const GraphOfGroups& A, int start, std::string_view text);

struct SpanningTree {
    int root = 0;
    std::vector<char> in_tree;  // per directed edge
    std::vector<int> parent_edge;  // per vertex, edge into it from its parent; -1 at the root
};

SpanningTree bfs_tree(const Graph& g, int root);
// Identity-labelled tree geodesic.
APath tree_path(const GraphOfGroups& A, const SpanningTree& T, int from, int to);

struct Pi1Generators {
    std::vector<APath> edge_loops;
    std::vector<int> loop_edge;
    std::vector<APath> vertex_gens;
    std::vector<int> vertex_of;
};

// Throws std::invalid_argument when T is not a spanning tree.
Pi1Generators pi1_generators(const GraphOfGroups& A, const SpanningTree& T, int v0);

}  // namespace gog
