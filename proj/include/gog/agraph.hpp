#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gog/graph_of_groups.hpp"
#include "gog/subgroup.hpp"

namespace gog {

// Labelled graph over a graph of groups. Directed edges come in pairs (2p, 2p+1);
// the label (a, [f], b) is stored for the even edge of each pair only.
class AGraph {
public:
    AGraph() = default;
    explicit AGraph(std::shared_ptr<const GraphOfGroups> A) : A_(std::move(A)) {}

    const GraphOfGroups& ambient() const { return *A_; }
    const std::shared_ptr<const GraphOfGroups>& ambient_ptr() const { return A_; }
    const Graph& graph() const { return g_; }
    int num_vertices() const { return g_.num_vertices; }
    int num_edges() const { return g_.num_edges(); }
    int num_pairs() const { return g_.num_pairs(); }
    int base() const { return base_; }
    void set_base(int u) { base_ = u; }

    int o(int f) const { return g_.o[static_cast<std::size_t>(f)]; }
    int t(int f) const { return g_.t[static_cast<std::size_t>(f)]; }
    int inv(int f) const { return f ^ 1; }
    bool is_loop(int f) const { return o(f) == t(f); }
    std::vector<int> out_edges(int u) const { return g_.out_edges(u); }

    int vtype(int u) const { return vtype_[static_cast<std::size_t>(u)]; }
    int etype(int f) const;
    const Subgroup& group(int u) const { return vgroup_[static_cast<std::size_t>(u)]; }
    const Group& vertex_group(int u) const { return ambient().vg(vtype(u)); }
    void set_group(int u, Subgroup H);

    Elem fa(int f) const;
    Elem fw(int f) const;
    // Sets the label of the directed edge f to (a, [f], b).
    void set_label(int f, Elem a, Elem b);

    int add_vertex(int type, Subgroup B);
    // New edge of type e from u to w; returns the even directed edge.
    int add_edge(int u, int w, int e, Elem a, Elem b);
    void remove_edge_pair(int f);
    // Redirects every edge at drop to keep and deletes drop; vertex ids above drop shift down.
    void merge_vertex(int keep, int drop);

    std::vector<std::string> validate() const;
    bool connected() const { return g_.connected(); }

    friend bool operator==(const AGraph& x, const AGraph& y);

private:
    std::shared_ptr<const GraphOfGroups> A_;
    Graph g_;
    std::vector<int> vtype_;
    std::vector<int> etype_;  // per pair, type of the even edge
    std::vector<Subgroup> vgroup_;
    std::vector<Elem> la_, lb_;  // per pair
    int base_ = 0;
};

struct PairViolation {
    int f1 = -1, f2 = -1;
    Elem a_prime;  // in B_o(f1)
    Elem c;        // fa(f2) = a_prime * fa(f1) * alpha(c)
};

struct EdgeGroupViolation {
    int f = -1;  // even edge
    Subgroup pull_alpha, pull_omega;
};

using FoldViolation = std::variant<PairViolation, EdgeGroupViolation>;

// The two pullbacks of the vertex groups at the ends of f into the edge group.
Subgroup pullback_alpha(const AGraph& B, int f);
Subgroup pullback_omega(const AGraph& B, int f);
Subgroup derived_edge_group(const AGraph& B, int f);

std::optional<PairViolation> check_pair(const AGraph& B, int f1, int f2);
std::optional<PairViolation> find_pair_violation(const AGraph& B);
std::optional<EdgeGroupViolation> find_edge_violation(const AGraph& B);
// Pair violations first, then edge-group violations.
std::optional<FoldViolation> find_fold_violation(const AGraph& B);
bool is_folded(const AGraph& B);
bool pair_violation_holds(const AGraph& B, const PairViolation& v);

// Path in the labelled graph: b_i in B_{u_i}, edges f_i.
struct BPath {
    int start = 0;
    std::vector<Elem> b;
    std::vector<int> f;

    int length() const { return static_cast<int>(f.size()); }
};

// Throws std::invalid_argument when some b_i is not in its vertex group.
APath mu_translate(const AGraph& B, const BPath& q);
bool is_reduced(const AGraph& B, const BPath& q);

// Base -> u along T, then mid_edge when given, then back; identity labels except x at the turning vertex.
BPath tree_loop(const AGraph& B, const SpanningTree& T, int u, const Elem* x, int mid_edge);
// Paths whose images generate the subgroup read off B at its base vertex.
std::vector<APath> language_generators(const AGraph& B);

int complexity(const AGraph& B);

}  // namespace gog
