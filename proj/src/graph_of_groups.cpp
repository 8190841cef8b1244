#include "gog/graph_of_groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gog {

int Graph::add_edge_pair(int from, int to) {
    if (from < 0 || from >= num_vertices || to < 0 || to >= num_vertices) throw std::invalid_argument("edge endpoint out of range");
    const int e = num_edges();
    o.push_back(from);
    t.push_back(to);
    inv.push_back(e + 1);
    o.push_back(to);
    t.push_back(from);
    inv.push_back(e);
    return e;
}

std::vector<int> Graph::out_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
        if (o[static_cast<std::size_t>(e)] == v) out.push_back(e);
    return out;
}

bool Graph::connected() const {
    if (num_vertices == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(num_vertices), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int count = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int e = 0; e < num_edges(); ++e)
            if (o[static_cast<std::size_t>(e)] == v && !seen[static_cast<std::size_t>(t[static_cast<std::size_t>(e)])]) {
                seen[static_cast<std::size_t>(t[static_cast<std::size_t>(e)])] = 1;
                ++count;
                st.push_back(t[static_cast<std::size_t>(e)]);
            }
    }
    return count == num_vertices;
}

int GraphOfGroups::add_vertex(std::string name, GroupPtr G) {
    vertex_names.push_back(std::move(name));
    vgroup.push_back(std::move(G));
    return graph.add_vertex();
}

int GraphOfGroups::add_edge(std::string name, int from, int to, GroupPtr E, std::vector<Elem> alpha_images,
                            std::vector<Elem> omega_images) {
    const int e = graph.add_edge_pair(from, to);
    edge_names.push_back(name);
    edge_names.push_back(name + "-1");
    egroup.push_back(E);
    egroup.push_back(E);
    alpha.emplace_back(E, vgroup[static_cast<std::size_t>(from)], std::move(alpha_images));
    alpha.emplace_back(E, vgroup[static_cast<std::size_t>(to)], std::move(omega_images));
    return e;
}

int GraphOfGroups::vertex_id(std::string_view name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    return -1;
}

int GraphOfGroups::edge_id(std::string_view name) const {
    for (std::size_t i = 0; i < edge_names.size(); ++i)
        if (edge_names[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> GraphOfGroups::validate() const {
    std::vector<std::string> out;
    const Graph& g = graph;
    const int E = g.num_edges();
    if (static_cast<int>(vgroup.size()) != g.num_vertices) out.push_back("vertex group count differs from vertex count");
    if (static_cast<int>(egroup.size()) != E || static_cast<int>(alpha.size()) != E ||
        static_cast<int>(g.t.size()) != E || static_cast<int>(g.inv.size()) != E) {
        out.push_back("per-edge data has inconsistent length");
        return out;
    }
    auto ename = [&](int e) {
        return static_cast<std::size_t>(e) < edge_names.size() ? edge_names[static_cast<std::size_t>(e)] : "#" + std::to_string(e);
    };
    for (int e = 0; e < E; ++e) {
        const int ie = g.inv[static_cast<std::size_t>(e)];
        if (ie < 0 || ie >= E || ie == e || g.inv[static_cast<std::size_t>(ie)] != e) {
            out.push_back("edge " + ename(e) + ": involution is not fixed-point-free of order two");
            continue;
        }
        if (g.o[static_cast<std::size_t>(e)] != g.t[static_cast<std::size_t>(ie)])
            out.push_back("edge " + ename(e) + ": origin differs from terminus of its inverse");
        if (!egroup[static_cast<std::size_t>(e)]->same_as(*egroup[static_cast<std::size_t>(ie)]))
            out.push_back("edge " + ename(e) + ": involution violation, edge group differs from that of its inverse");
    }
    if (!g.connected()) out.push_back("graph is not connected");
    for (int e = 0; e < E; ++e) {
        const MonoMap& m = alpha[static_cast<std::size_t>(e)];
        if (!m.source() || !m.source()->same_as(*egroup[static_cast<std::size_t>(e)])) {
            out.push_back("edge " + ename(e) + ": boundary map source is not the edge group");
            continue;
        }
        const int v = g.o[static_cast<std::size_t>(e)];
        if (v < 0 || v >= static_cast<int>(vgroup.size()) || !m.target()->same_as(*vgroup[static_cast<std::size_t>(v)])) {
            out.push_back("edge " + ename(e) + ": boundary map target is not the origin vertex group");
            continue;
        }
        if (auto err = m.check()) out.push_back("edge " + ename(e) + ": " + *err);
    }
    return out;
}

int path_end(const GraphOfGroups& A, const APath& p) { return p.e.empty() ? p.start : A.t(p.e.back()); }

std::vector<std::string> check_path(const GraphOfGroups& A, const APath& p) {
    std::vector<std::string> out;
    if (p.a.size() != p.e.size() + 1) {
        out.push_back("path element count must be edge count + 1");
        return out;
    }
    int v = p.start;
    if (v < 0 || v >= A.graph.num_vertices) {
        out.push_back("path start out of range");
        return out;
    }
    for (std::size_t i = 0; i <= p.e.size(); ++i) {
        try {
            if (A.vg(v).normalize(p.a[i]) != p.a[i]) out.push_back("element " + std::to_string(i) + " is not in normal form");
        } catch (const std::exception& ex) {
            out.push_back("element " + std::to_string(i) + ": " + ex.what());
        }
        if (i == p.e.size()) break;
        const int e = p.e[i];
        if (e < 0 || e >= A.graph.num_edges() || A.o(e) != v) {
            out.push_back("edge " + std::to_string(i + 1) + " does not continue the path");
            return out;
        }
        v = A.t(e);
    }
    return out;
}

APath identity_path(const GraphOfGroups& A, int v) { return APath{v, {A.vg(v).id()}, {}}; }
APath element_path(int v, Elem a) { return APath{v, {std::move(a)}, {}}; }

ReducedPath reduce_a_path(const GraphOfGroups& A, const APath& p0) {
    if (auto errs = check_path(A, p0); !errs.empty()) throw std::invalid_argument("invalid path: " + errs.front());
    ReducedPath r{p0, {}};
    APath& p = r.path;
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 1; i < p.a.size() - 1; ++i) {
            const int e = p.e[i - 1];
            if (p.e[i] != A.inv(e)) continue;
            auto c = A.omega_of(e).preimage(p.a[i]);
            if (!c) continue;
            const Group& G = A.vg(A.o(e));
            Elem merged = G.mul(G.mul(p.a[i - 1], A.alpha_of(e).apply(*c)), p.a[i + 1]);
            r.log.push_back({static_cast<int>(i), e, *c});
            p.a[i - 1] = merged;
            p.a.erase(p.a.begin() + static_cast<std::ptrdiff_t>(i), p.a.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            p.e.erase(p.e.begin() + static_cast<std::ptrdiff_t>(i) - 1, p.e.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            again = true;
            break;
        }
    }
    return r;
}

bool is_reduced(const GraphOfGroups& A, const APath& p) {
    for (std::size_t i = 1; i + 1 < p.a.size(); ++i) {
        const int e = p.e[i - 1];
        if (p.e[i] == A.inv(e) && A.omega_of(e).image().contains(p.a[i])) return false;
    }
    return true;
}

APath path_compose(const GraphOfGroups& A, const APath& p, const APath& q) {
    const int v = path_end(A, p);
    if (v != q.start) throw std::invalid_argument("path_compose: end vertex of p differs from start of q");
    APath r = p;
    r.a.back() = A.vg(v).mul(p.a.back(), q.a.front());
    r.a.insert(r.a.end(), q.a.begin() + 1, q.a.end());
    r.e.insert(r.e.end(), q.e.begin(), q.e.end());
    return r;
}

APath path_invert(const GraphOfGroups& A, const APath& p) {
    APath r;
    r.start = path_end(A, p);
    int v = r.start;
    for (std::size_t i = p.a.size(); i-- > 0;) {
        r.a.push_back(A.vg(v).inv(p.a[i]));
        if (i > 0) {
            r.e.push_back(A.inv(p.e[i - 1]));
            v = A.t(r.e.back());
        }
    }
    return r;
}

bool represents_identity(const GraphOfGroups& A, const APath& p) {
    auto r = reduce_a_path(A, p).path;
    return r.e.empty() && A.vg(r.start).is_id(r.a[0]);
}

std::string format_path(const GraphOfGroups& A, const APath& p) {
    std::ostringstream os;
    int v = p.start;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        if (i) os << " | " << A.edge_names[static_cast<std::size_t>(p.e[i - 1])] << " | ";
        if (i) v = A.t(p.e[i - 1]);
        os << A.vg(v).format(p.a[i]);
    }
    return os.str();
}

APath parse_path(const GraphOfGroups& A, int start, std::string_view text) {
    std::vector<std::string> seg;
    std::string cur;
    for (char ch : text) {
        if (ch == '|') {
            seg.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    seg.push_back(cur);
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(i);
    };
    if (seg.size() % 2 == 0) throw std::invalid_argument("path literal needs alternating elements and edges");
    APath p;
    p.start = start;
    int v = start;
    for (std::size_t i = 0; i < seg.size(); ++i) {
        std::string s = trim(seg[i]);
        if (i % 2 == 0) {
            p.a.push_back(s.empty() ? A.vg(v).id() : A.vg(v).parse(s));
        } else {
            int e = A.edge_id(s);
            if (e < 0) throw std::invalid_argument("unknown edge '" + s + "'");
            if (A.o(e) != v) throw std::invalid_argument("edge '" + s + "' does not continue the path");
            p.e.push_back(e);
            v = A.t(e);
        }
    }
    return p;
}

SpanningTree bfs_tree(const Graph& g, int root) {
    SpanningTree T;
    T.root = root;
    T.in_tree.assign(static_cast<std::size_t>(g.num_edges()), 0);
    T.parent_edge.assign(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices), 0);
    std::deque<int> q{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e : g.out_edges(v)) {
            int w = g.t[static_cast<std::size_t>(e)];
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            T.in_tree[static_cast<std::size_t>(e)] = 1;
            T.in_tree[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(e)])] = 1;
            T.parent_edge[static_cast<std::size_t>(w)] = e;
            q.push_back(w);
        }
    }
    return T;
}

namespace {

std::vector<int> root_to(const GraphOfGroups& A, const SpanningTree& T, int v) {
    std::vector<int> edges;
    while (v != T.root) {
        int e = T.parent_edge[static_cast<std::size_t>(v)];
        if (e < 0) throw std::invalid_argument("vertex not reached by the spanning tree");
        edges.push_back(e);
        v = A.o(e);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

}  // namespace

APath tree_path(const GraphOfGroups& A, const SpanningTree& T, int from, int to) {
    auto a = root_to(A, T, from), b = root_to(A, T, to);
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    APath p;
    p.start = from;
    int v = from;
    p.a.push_back(A.vg(v).id());
    for (std::size_t i = a.size(); i-- > k;) {
        p.e.push_back(A.inv(a[i]));
        v = A.t(p.e.back());
        p.a.push_back(A.vg(v).id());
    }
    for (std::size_t i = k; i < b.size(); ++i) {
        p.e.push_back(b[i]);
        v = A.t(p.e.back());
        p.a.push_back(A.vg(v).id());
    }
    return p;
}

Pi1Generators pi1_generators(const GraphOfGroups& A, const SpanningTree& T0, int v0) {
    const Graph& g = A.graph;
    if (static_cast<int>(T0.in_tree.size()) != g.num_edges()) throw std::invalid_argument("tree does not match the graph");
    int tree_pairs = 0;
    for (int e = 0; e < g.num_edges(); e += 1) {
        if (T0.in_tree[static_cast<std::size_t>(e)] != T0.in_tree[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(e)])])
            throw std::invalid_argument("tree edge set is not closed under inversion");
        if (e < g.inv[static_cast<std::size_t>(e)] && T0.in_tree[static_cast<std::size_t>(e)]) ++tree_pairs;
    }
    // Re-root and check that the tree edges span.
    SpanningTree T;
    T.root = v0;
    T.in_tree = T0.in_tree;
    T.parent_edge.assign(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices), 0);
    std::deque<int> q{v0};
    seen[static_cast<std::size_t>(v0)] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e : g.out_edges(v)) {
            int w = g.t[static_cast<std::size_t>(e)];
            if (!T.in_tree[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            T.parent_edge[static_cast<std::size_t>(w)] = e;
            q.push_back(w);
        }
    }
    if (reached != g.num_vertices || tree_pairs != g.num_vertices - 1) throw std::invalid_argument("not a spanning tree");

    Pi1Generators out;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (T.in_tree[static_cast<std::size_t>(e)] || e > g.inv[static_cast<std::size_t>(e)]) continue;
        APath loop = tree_path(A, T, v0, A.o(e));
        APath step{A.o(e), {A.vg(A.o(e)).id(), A.vg(A.t(e)).id()}, {e}};
        loop = path_compose(A, path_compose(A, loop, step), tree_path(A, T, A.t(e), v0));
        out.edge_loops.push_back(loop);
        out.loop_edge.push_back(e);
    }
    for (int v = 0; v < g.num_vertices; ++v)
        for (const Elem& x : A.vg(v).generators()) {
            APath p = path_compose(A, path_compose(A, tree_path(A, T, v0, v), element_path(v, x)), tree_path(A, T, v, v0));
            out.vertex_gens.push_back(p);
            out.vertex_of.push_back(v);
        }
    return out;
}

}  // namespace gog
