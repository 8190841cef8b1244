#include "gog/core_graph.hpp"

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace gog {

namespace {

// Union-find with potentials: delta[v] evaluates to phi(parent) * phi(v)^-1.
struct Folder {
    int alphabet;
    std::vector<std::map<long long, std::pair<int, Word>>> adj;
    std::vector<int> parent;
    std::vector<Word> delta;
    std::vector<std::tuple<int, long long, int, Word>> pending;

    int add_vertex() {
        adj.emplace_back();
        parent.push_back(static_cast<int>(parent.size()));
        delta.emplace_back();
        return static_cast<int>(parent.size()) - 1;
    }

    std::pair<int, Word> find(int v) {
        if (parent[static_cast<std::size_t>(v)] == v) return {v, {}};
        auto [r, d] = find(parent[static_cast<std::size_t>(v)]);
        Word total = word::mul(d, delta[static_cast<std::size_t>(v)]);
        parent[static_cast<std::size_t>(v)] = r;
        delta[static_cast<std::size_t>(v)] = total;
        return {r, total};
    }

    void merge(int keep, int drop, Word d) {
        if (drop == 0) {
            std::swap(keep, drop);
            d = word::inv(d);
        }
        parent[static_cast<std::size_t>(drop)] = keep;
        delta[static_cast<std::size_t>(drop)] = d;
        auto edges = std::move(adj[static_cast<std::size_t>(drop)]);
        adj[static_cast<std::size_t>(drop)].clear();
        for (auto& [l, wt] : edges) {
            auto [w, tau] = wt;
            if (w != drop) {
                auto it = adj[static_cast<std::size_t>(w)].find(-l);
                if (it != adj[static_cast<std::size_t>(w)].end() && it->second.first == drop)
                    adj[static_cast<std::size_t>(w)].erase(it);
            }
            pending.emplace_back(drop, l, w, tau);
        }
    }

    void process(int u0, long long l, int v0, const Word& tau0) {
        auto [u, du] = find(u0);
        auto [v, dv] = find(v0);
        Word tau = word::mul(word::mul(du, tau0), word::inv(dv));
        auto& au = adj[static_cast<std::size_t>(u)];
        if (auto it = au.find(l); it != au.end()) {
            auto [w, sigma] = it->second;
            if (w != v) merge(w, v, word::mul(word::inv(sigma), tau));
            return;
        }
        auto& av = adj[static_cast<std::size_t>(v)];
        if (auto it = av.find(-l); it != av.end()) {
            auto [w, sigma] = it->second;
            if (w != u) merge(w, u, word::mul(word::inv(sigma), word::inv(tau)));
            return;
        }
        au[l] = {v, tau};
        adj[static_cast<std::size_t>(v)][-l] = {u, word::inv(tau)};
    }

    void run() {
        while (!pending.empty()) {
            auto [u, l, v, t] = pending.back();
            pending.pop_back();
            process(u, l, v, t);
        }
    }
};

}  // namespace

CoreGraph CoreGraph::build(int alphabet, const std::vector<Word>& gens) {
    Folder F;
    F.alphabet = alphabet;
    F.add_vertex();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Word x = word::reduce(gens[j]);
        for (long long l : x)
            if (l == 0 || l > alphabet || l < -alphabet) throw std::invalid_argument("letter outside alphabet");
        if (x.empty()) continue;
        int prev = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            bool last = i + 1 == x.size();
            int next = last ? 0 : F.add_vertex();
            Word tag = last ? Word{static_cast<long long>(j) + 1} : Word{};
            F.pending.emplace_back(prev, x[i], next, tag);
            prev = next;
        }
        F.run();
    }
    F.run();

    const int n = static_cast<int>(F.parent.size());
    std::vector<char> alive(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) alive[static_cast<std::size_t>(v)] = F.parent[static_cast<std::size_t>(v)] == v;
    // Trim hanging trees.
    std::deque<int> q;
    for (int v = 1; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)] && F.adj[static_cast<std::size_t>(v)].size() <= 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (!alive[static_cast<std::size_t>(v)] || F.adj[static_cast<std::size_t>(v)].size() > 1) continue;
        alive[static_cast<std::size_t>(v)] = 0;
        for (auto& [l, wt] : F.adj[static_cast<std::size_t>(v)]) {
            int w = wt.first;
            F.adj[static_cast<std::size_t>(w)].erase(-l);
            if (w != 0 && F.adj[static_cast<std::size_t>(w)].size() <= 1) q.push_back(w);
        }
        F.adj[static_cast<std::size_t>(v)].clear();
    }

    CoreGraph G;
    G.alphabet_ = alphabet;
    G.has_tags_ = true;
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    std::vector<int> order{0};
    id[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (auto& [l, wt] : F.adj[static_cast<std::size_t>(order[k])])
            if (id[static_cast<std::size_t>(wt.first)] < 0) {
                id[static_cast<std::size_t>(wt.first)] = static_cast<int>(order.size());
                order.push_back(wt.first);
            }
    const std::size_t slots = static_cast<std::size_t>(2 * alphabet);
    G.out_.assign(order.size(), std::vector<int>(slots, -1));
    G.tag_.assign(order.size(), std::vector<Word>(slots));
    for (std::size_t k = 0; k < order.size(); ++k)
        for (auto& [l, wt] : F.adj[static_cast<std::size_t>(order[k])]) {
            G.out_[k][static_cast<std::size_t>(slot(l))] = id[static_cast<std::size_t>(wt.first)];
            G.tag_[k][static_cast<std::size_t>(slot(l))] = wt.second;
        }
    G.finish();
    return G;
}

CoreGraph CoreGraph::product(const CoreGraph& a, const CoreGraph& b) {
    if (a.alphabet_ != b.alphabet_) throw std::invalid_argument("alphabet mismatch in product");
    const int r = a.alphabet_;
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> order{{0, 0}};
    id[{0, 0}] = 0;
    std::vector<std::map<long long, int>> adj(1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto [x, y] = order[k];
        for (long long l = -r; l <= r; ++l) {
            if (l == 0) continue;
            int x2 = a.target(x, l), y2 = b.target(y, l);
            if (x2 < 0 || y2 < 0) continue;
            auto [it, fresh] = id.try_emplace({x2, y2}, static_cast<int>(order.size()));
            if (fresh) {
                order.push_back({x2, y2});
                adj.emplace_back();
            }
            adj[k][l] = it->second;
        }
    }
    const int n = static_cast<int>(order.size());
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::deque<int> q;
    for (int v = 1; v < n; ++v)
        if (adj[static_cast<std::size_t>(v)].size() <= 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (!alive[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].size() > 1) continue;
        alive[static_cast<std::size_t>(v)] = 0;
        for (auto& [l, w] : adj[static_cast<std::size_t>(v)]) {
            adj[static_cast<std::size_t>(w)].erase(-l);
            if (w != 0 && adj[static_cast<std::size_t>(w)].size() <= 1) q.push_back(w);
        }
        adj[static_cast<std::size_t>(v)].clear();
    }
    CoreGraph G;
    G.alphabet_ = r;
    std::vector<int> nid(static_cast<std::size_t>(n), -1);
    std::vector<int> ord{0};
    nid[0] = 0;
    for (std::size_t k = 0; k < ord.size(); ++k)
        for (auto& [l, w] : adj[static_cast<std::size_t>(ord[k])])
            if (nid[static_cast<std::size_t>(w)] < 0) {
                nid[static_cast<std::size_t>(w)] = static_cast<int>(ord.size());
                ord.push_back(w);
            }
    G.out_.assign(ord.size(), std::vector<int>(static_cast<std::size_t>(2 * r), -1));
    G.tag_.assign(ord.size(), std::vector<Word>(static_cast<std::size_t>(2 * r)));
    for (std::size_t k = 0; k < ord.size(); ++k)
        for (auto& [l, w] : adj[static_cast<std::size_t>(ord[k])])
            G.out_[k][static_cast<std::size_t>(slot(l))] = nid[static_cast<std::size_t>(w)];
    G.finish();
    return G;
}

void CoreGraph::finish() {
    const std::size_t n = out_.size();
    const std::size_t slots = static_cast<std::size_t>(2 * alphabet_);
    tree_word_.assign(n, {});
    basis_id_.assign(n, std::vector<int>(slots, 0));
    std::vector<char> seen(n, 0);
    std::vector<std::vector<char>> tree(n, std::vector<char>(slots, 0));
    std::vector<int> order{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        int u = order[k];
        for (long long l = 1; l <= alphabet_; ++l)
            for (long long s : {l, -l}) {
                int w = target(u, s);
                if (w < 0 || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                tree[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot(s))] = 1;
                tree[static_cast<std::size_t>(w)][static_cast<std::size_t>(slot(-s))] = 1;
                tree_word_[static_cast<std::size_t>(w)] = word::mul(tree_word_[static_cast<std::size_t>(u)], Word{s});
                order.push_back(w);
            }
    }
    basis_.clear();
    for (std::size_t u = 0; u < n; ++u)
        for (long long l = 1; l <= alphabet_; ++l) {
            int w = target(static_cast<int>(u), l);
            if (w < 0 || tree[u][static_cast<std::size_t>(slot(l))]) continue;
            basis_.push_back(word::mul(word::mul(tree_word_[u], Word{l}), word::inv(tree_word_[static_cast<std::size_t>(w)])));
            int b = static_cast<int>(basis_.size());
            basis_id_[u][static_cast<std::size_t>(slot(l))] = b;
            basis_id_[static_cast<std::size_t>(w)][static_cast<std::size_t>(slot(-l))] = -b;
        }
}

int CoreGraph::num_edges() const {
    int c = 0;
    for (const auto& row : out_)
        for (std::size_t s = 0; s < row.size(); s += 2) c += row[s] >= 0;
    return c;
}

std::optional<int> CoreGraph::read(int v, const Word& w) const {
    for (long long l : w) {
        if (l == 0 || l > alphabet_ || l < -alphabet_) return std::nullopt;
        v = target(v, l);
        if (v < 0) return std::nullopt;
    }
    return v;
}

bool CoreGraph::accepts(const Word& w) const {
    auto end = read(0, word::reduce(w));
    return end && *end == 0;
}

std::optional<Word> CoreGraph::expression(const Word& w0) const {
    if (!has_tags_) throw std::logic_error("core graph carries no generator tags");
    Word w = word::reduce(w0);
    int v = 0;
    Word acc;
    for (long long l : w) {
        if (l == 0 || l > alphabet_ || l < -alphabet_) return std::nullopt;
        int nxt = target(v, l);
        if (nxt < 0) return std::nullopt;
        acc = word::mul(acc, tag_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot(l))]);
        v = nxt;
    }
    if (v != 0) return std::nullopt;
    return acc;
}

std::optional<Word> CoreGraph::basis_word(const Word& w0) const {
    Word w = word::reduce(w0);
    int v = 0;
    Word acc;
    for (long long l : w) {
        if (l == 0 || l > alphabet_ || l < -alphabet_) return std::nullopt;
        int nxt = target(v, l);
        if (nxt < 0) return std::nullopt;
        int b = basis_id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot(l))];
        if (b != 0) acc = word::mul(acc, Word{b});
        v = nxt;
    }
    if (v != 0) return std::nullopt;
    return acc;
}

std::optional<std::pair<Word, Word>> product_set_witness(const CoreGraph& H, const CoreGraph& K, const Word& g0) {
    if (H.alphabet() != K.alphabet()) throw std::invalid_argument("alphabet mismatch");
    const int r = H.alphabet();
    const int nH = H.num_vertices(), n = nH + K.num_vertices();
    const int start = 0, accept = nH;
    auto step = [&](int q, long long l) -> int {
        if (q < nH) return H.target(q, l);
        int t = K.target(q - nH, l);
        return t < 0 ? -1 : t + nH;
    };
    // Silent edges with provenance; stamp orders them for acyclic expansion.
    struct Silent {
        int from, to, stamp;
        long long letter;  // 0 marks the phase change
        int mid_from, mid_to;
    };
    std::vector<Silent> silent{{start, accept, 0, 0, -1, -1}};
    std::vector<std::vector<int>> eps_id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    eps_id[start][accept] = 0;

    auto closure = [&]() {
        std::vector<std::vector<char>> C(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int p = 0; p < n; ++p) {
            std::vector<int> st{p};
            C[p][p] = 1;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y = 0; y < n; ++y)
                    if (eps_id[x][y] >= 0 && !C[p][y]) {
                        C[p][y] = 1;
                        st.push_back(y);
                    }
            }
        }
        return C;
    };
    for (bool changed = true; changed;) {
        changed = false;
        auto C = closure();
        std::vector<Silent> fresh;
        for (int p = 0; p < n; ++p)
            for (long long l = -r; l <= r; ++l) {
                if (l == 0) continue;
                int a = step(p, l);
                if (a < 0) continue;
                for (int s = 0; s < n; ++s) {
                    if (!C[a][s]) continue;
                    int q = step(s, -l);
                    if (q < 0 || C[p][q] || eps_id[p][q] >= 0) continue;
                    bool dup = false;
                    for (auto& f : fresh) dup = dup || (f.from == p && f.to == q);
                    if (!dup) fresh.push_back({p, q, 0, l, a, s});
                }
            }
        for (auto& f : fresh) {
            f.stamp = static_cast<int>(silent.size());
            eps_id[f.from][f.to] = f.stamp;
            silent.push_back(f);
            changed = true;
        }
    }

    const Word g = word::reduce(g0);
    const std::size_t L = g.size();
    // Search over (position, state).
    auto key = [&](std::size_t i, int q) { return i * static_cast<std::size_t>(n) + static_cast<std::size_t>(q); };
    std::vector<long long> par(static_cast<std::size_t>(n) * (L + 1), -1);
    std::vector<int> via(par.size(), -2);  // -1: letter step, >= 0: silent edge id
    std::deque<std::size_t> bfs{key(0, start)};
    par[key(0, start)] = static_cast<long long>(key(0, start));
    while (!bfs.empty()) {
        std::size_t cur = bfs.front();
        bfs.pop_front();
        std::size_t i = cur / static_cast<std::size_t>(n);
        int q = static_cast<int>(cur % static_cast<std::size_t>(n));
        for (int y = 0; y < n; ++y)
            if (eps_id[q][y] >= 0 && par[key(i, y)] < 0) {
                par[key(i, y)] = static_cast<long long>(cur);
                via[key(i, y)] = eps_id[q][y];
                bfs.push_back(key(i, y));
            }
        if (i < L) {
            int y = step(q, g[i]);
            if (y >= 0 && par[key(i + 1, y)] < 0) {
                par[key(i + 1, y)] = static_cast<long long>(cur);
                via[key(i + 1, y)] = -1;
                bfs.push_back(key(i + 1, y));
            }
        }
    }
    if (par[key(L, accept)] < 0) return std::nullopt;

    // Expand into a labeled walk; a zero letter marks the phase change.
    Word walk;
    std::function<void(int)> expand = [&](int id) {
        const Silent& s = silent[static_cast<std::size_t>(id)];
        if (s.letter == 0) {
            walk.push_back(0);
            return;
        }
        walk.push_back(s.letter);
        // Silent path mid_from -> mid_to through older edges.
        std::vector<int> pe(static_cast<std::size_t>(n), -2);
        std::deque<int> qq{s.mid_from};
        pe[static_cast<std::size_t>(s.mid_from)] = -1;
        std::vector<int> prev(static_cast<std::size_t>(n), -1);
        while (!qq.empty()) {
            int x = qq.front();
            qq.pop_front();
            for (int y = 0; y < n; ++y) {
                int e = eps_id[x][y];
                if (e >= 0 && e < s.stamp && pe[static_cast<std::size_t>(y)] == -2) {
                    pe[static_cast<std::size_t>(y)] = e;
                    prev[static_cast<std::size_t>(y)] = x;
                    qq.push_back(y);
                }
            }
        }
        if (pe[static_cast<std::size_t>(s.mid_to)] == -2) throw std::logic_error("saturation provenance broken");
        std::vector<int> chain;
        for (int y = s.mid_to; y != s.mid_from; y = prev[static_cast<std::size_t>(y)]) chain.push_back(pe[static_cast<std::size_t>(y)]);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) expand(*it);
        walk.push_back(-s.letter);
    };
    std::vector<std::pair<bool, int>> steps;  // (is_letter, letter index or silent id)
    for (std::size_t cur = key(L, accept); static_cast<long long>(cur) != par[cur];
         cur = static_cast<std::size_t>(par[cur])) {
        if (via[cur] == -1)
            steps.push_back({true, static_cast<int>(cur / static_cast<std::size_t>(n)) - 1});
        else
            steps.push_back({false, via[cur]});
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->first)
            walk.push_back(g[static_cast<std::size_t>(it->second)]);
        else
            expand(it->second);
    }
    Word w1, w2;
    bool second = false;
    for (long long l : walk) {
        if (l == 0) {
            second = true;
            continue;
        }
        (second ? w2 : w1).push_back(l);
    }
    Word h = word::reduce(w1), k = word::reduce(w2);
    if (word::mul(h, k) != g || !H.accepts(h) || !K.accepts(k)) throw std::logic_error("saturation witness failed to verify");
    return std::pair{h, k};
}

}  // namespace gog
