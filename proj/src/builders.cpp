#include "gog/builders.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace gog {

std::vector<std::vector<char>> SimpleGraph::adjacency() const {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("not a simple graph");
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return adj;
}

std::string SimpleGraph::name(int v) const {
    return static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)] : "v" + std::to_string(v);
}

bool SimpleGraph::connected() const {
    if (n == 0) return false;
    auto adj = adjacency();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int c = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++c;
                st.push_back(w);
            }
    }
    return c == n;
}

std::optional<std::vector<int>> find_chordless_cycle(const SimpleGraph& g) {
    auto adj = g.adjacency();
    auto A = [&](int x, int y) { return adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0; };
    for (int v = 0; v < g.n; ++v)
        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y) {
                if (!A(v, x) || !A(v, y) || A(x, y)) continue;
                // Shortest x-y path avoiding v and its other neighbours.
                std::vector<int> prev(static_cast<std::size_t>(g.n), -2);
                std::deque<int> q{x};
                prev[static_cast<std::size_t>(x)] = -1;
                while (!q.empty() && prev[static_cast<std::size_t>(y)] == -2) {
                    int u = q.front();
                    q.pop_front();
                    for (int w = 0; w < g.n; ++w) {
                        if (!A(u, w) || prev[static_cast<std::size_t>(w)] != -2 || w == v) continue;
                        if (A(v, w) && w != y) continue;
                        prev[static_cast<std::size_t>(w)] = u;
                        q.push_back(w);
                    }
                }
                if (prev[static_cast<std::size_t>(y)] == -2) continue;
                std::vector<int> cyc{v};
                std::vector<int> path;
                for (int w = y; w != -1; w = prev[static_cast<std::size_t>(w)]) path.push_back(w);
                std::reverse(path.begin(), path.end());
                cyc.insert(cyc.end(), path.begin(), path.end());
                return cyc;
            }
    return std::nullopt;
}

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<std::vector<int>> out;
    std::function<void(std::vector<int>, std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> R, std::vector<int> P,
                                                                                       std::vector<int> X) {
        if (P.empty() && X.empty()) {
            std::sort(R.begin(), R.end());
            out.push_back(R);
            return;
        }
        auto Pc = P;
        for (int v : Pc) {
            std::vector<int> P2, X2;
            for (int w : P)
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) P2.push_back(w);
            for (int w : X)
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) X2.push_back(w);
            auto R2 = R;
            R2.push_back(v);
            bk(R2, P2, X2);
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> all;
    for (int v = 0; v < g.n; ++v) all.push_back(v);
    bk({}, all, {});
    std::sort(out.begin(), out.end());
    return out;
}

std::variant<RaagTree, ChordlessCycle> build_chordal_raag(const SimpleGraph& g) {
    if (!g.connected()) throw std::invalid_argument("defining graph must be nonempty and connected");
    if (auto c = find_chordless_cycle(g)) return ChordlessCycle{*c};
    auto adj = g.adjacency();
    std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
    int remaining = g.n;
    std::vector<std::pair<int, std::vector<int>>> removed;
    while (remaining > 2) {
        int pick = -1;
        std::vector<int> S;
        for (int v = 0; v < g.n && pick < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            std::vector<int> nb;
            for (int w = 0; w < g.n; ++w)
                if (alive[static_cast<std::size_t>(w)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) nb.push_back(w);
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    clique = adj[static_cast<std::size_t>(nb[i])][static_cast<std::size_t>(nb[j])] != 0;
            if (clique) {
                pick = v;
                S = nb;
            }
        }
        if (pick < 0) throw std::logic_error("chordal graph without a simplicial vertex");
        alive[static_cast<std::size_t>(pick)] = 0;
        --remaining;
        removed.push_back({pick, S});
    }

    RaagTree out;
    GraphOfGroups& T = out.tree;
    auto vname = [&](const std::vector<int>& cs) {
        std::string s = "<";
        for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + g.name(cs[i]);
        return s + ">";
    };
    std::vector<int> base;
    for (int v = 0; v < g.n; ++v)
        if (alive[static_cast<std::size_t>(v)]) base.push_back(v);
    T.add_vertex(vname(base), Group::abelian(static_cast<int>(base.size())));
    out.coords.push_back(base);
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        const auto& [v, S] = *it;
        int x = -1;
        for (std::size_t k = 0; k < out.coords.size() && x < 0; ++k)
            if (std::all_of(S.begin(), S.end(), [&](int s) {
                    return std::find(out.coords[k].begin(), out.coords[k].end(), s) != out.coords[k].end();
                }))
                x = static_cast<int>(k);
        if (x < 0) throw std::logic_error("no tree vertex contains the neighbour clique");
        std::vector<int> cs = S;
        cs.push_back(v);
        const int k = static_cast<int>(S.size());
        const int dx = static_cast<int>(out.coords[static_cast<std::size_t>(x)].size());
        int y = T.add_vertex(vname(cs), Group::abelian(k + 1));
        out.coords.push_back(cs);
        std::vector<Elem> ai, wi;
        for (int i = 0; i < k; ++i) {
            Elem a{std::vector<long long>(static_cast<std::size_t>(dx), 0)};
            auto pos = std::find(out.coords[static_cast<std::size_t>(x)].begin(), out.coords[static_cast<std::size_t>(x)].end(), S[static_cast<std::size_t>(i)]) -
                       out.coords[static_cast<std::size_t>(x)].begin();
            a.v[static_cast<std::size_t>(pos)] = 1;
            ai.push_back(a);
            Elem w{std::vector<long long>(static_cast<std::size_t>(k + 1), 0)};
            w.v[static_cast<std::size_t>(i)] = 1;
            wi.push_back(w);
        }
        T.add_edge("e" + std::to_string(y), x, y, Group::abelian(k), ai, wi);
    }
    return out;
}

GraphOfGroups build_tree_graph_product(const SimpleGraph& tree, const std::vector<int>& ranks) {
    if (!tree.connected() || static_cast<int>(tree.edges.size()) != tree.n - 1) throw std::invalid_argument("input is not a tree");
    if (static_cast<int>(ranks.size()) != tree.n) throw std::invalid_argument("one rank per tree vertex required");
    (void)tree.adjacency();
    GraphOfGroups A;
    for (int v = 0; v < tree.n; ++v) {
        if (ranks[static_cast<std::size_t>(v)] < 0) throw std::invalid_argument("negative rank");
        A.add_vertex(tree.name(v), Group::abelian(ranks[static_cast<std::size_t>(v)]));
    }
    auto units = [](int dim, int offset, int count) {
        std::vector<Elem> out;
        for (int i = 0; i < count; ++i) {
            Elem e{std::vector<long long>(static_cast<std::size_t>(dim), 0)};
            e.v[static_cast<std::size_t>(offset + i)] = 1;
            out.push_back(e);
        }
        return out;
    };
    for (auto [i, j] : tree.edges) {
        const int ri = ranks[static_cast<std::size_t>(i)], rj = ranks[static_cast<std::size_t>(j)];
        std::string bname = tree.name(i) + "x" + tree.name(j);
        int b = A.add_vertex(bname, Group::abelian(ri + rj));
        A.add_edge(tree.name(i) + "_" + bname, i, b, Group::abelian(ri), units(ri, 0, ri), units(ri + rj, 0, ri));
        A.add_edge(tree.name(j) + "_" + bname, j, b, Group::abelian(rj), units(rj, 0, rj), units(ri + rj, ri, rj));
    }
    return A;
}

}  // namespace gog
