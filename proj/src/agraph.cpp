#include "gog/agraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gog {

namespace {

std::size_t pair_of(int f) { return static_cast<std::size_t>(f / 2); }

}  // namespace

int AGraph::etype(int f) const {
    const int e = etype_[pair_of(f)];
    return f % 2 == 0 ? e : A_->inv(e);
}

void AGraph::set_group(int u, Subgroup H) {
    if (!H.group()->same_as(vertex_group(u))) throw std::invalid_argument("vertex group label lives in the wrong group");
    vgroup_[static_cast<std::size_t>(u)] = std::move(H);
}

Elem AGraph::fa(int f) const {
    if (f % 2 == 0) return la_[pair_of(f)];
    return vertex_group(o(f)).inv(lb_[pair_of(f)]);
}

Elem AGraph::fw(int f) const {
    if (f % 2 == 0) return lb_[pair_of(f)];
    return vertex_group(t(f)).inv(la_[pair_of(f)]);
}

void AGraph::set_label(int f, Elem a, Elem b) {
    const Group& Go = vertex_group(o(f));
    const Group& Gt = vertex_group(t(f));
    a = Go.normalize(a);
    b = Gt.normalize(b);
    if (f % 2 == 0) {
        la_[pair_of(f)] = std::move(a);
        lb_[pair_of(f)] = std::move(b);
    } else {
        la_[pair_of(f)] = Gt.inv(b);
        lb_[pair_of(f)] = Go.inv(a);
    }
}

int AGraph::add_vertex(int type, Subgroup B) {
    if (type < 0 || type >= A_->graph.num_vertices) throw std::invalid_argument("vertex type out of range");
    if (!B.group()->same_as(A_->vg(type))) throw std::invalid_argument("vertex group label lives in the wrong group");
    vtype_.push_back(type);
    vgroup_.push_back(std::move(B));
    return g_.add_vertex();
}

int AGraph::add_edge(int u, int w, int e, Elem a, Elem b) {
    if (e < 0 || e >= A_->graph.num_edges()) throw std::invalid_argument("edge type out of range");
    if (A_->o(e) != vtype(u) || A_->t(e) != vtype(w)) throw std::invalid_argument("edge type does not match endpoint types");
    const int f = g_.add_edge_pair(u, w);
    etype_.push_back(e);
    la_.push_back(A_->vg(A_->o(e)).normalize(a));
    lb_.push_back(A_->vg(A_->t(e)).normalize(b));
    return f;
}

void AGraph::remove_edge_pair(int f) {
    const std::size_t p = pair_of(f);
    const auto at = static_cast<std::ptrdiff_t>(2 * p);
    g_.o.erase(g_.o.begin() + at, g_.o.begin() + at + 2);
    g_.t.erase(g_.t.begin() + at, g_.t.begin() + at + 2);
    g_.inv.resize(g_.o.size());
    for (std::size_t i = 0; i < g_.inv.size(); ++i) g_.inv[i] = static_cast<int>(i ^ 1);
    etype_.erase(etype_.begin() + static_cast<std::ptrdiff_t>(p));
    la_.erase(la_.begin() + static_cast<std::ptrdiff_t>(p));
    lb_.erase(lb_.begin() + static_cast<std::ptrdiff_t>(p));
}

void AGraph::merge_vertex(int keep, int drop) {
    if (keep == drop) return;
    if (vtype(keep) != vtype(drop)) throw std::invalid_argument("cannot merge vertices of different types");
    auto fix = [&](int v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    for (auto& v : g_.o) v = fix(v);
    for (auto& v : g_.t) v = fix(v);
    base_ = fix(base_);
    vtype_.erase(vtype_.begin() + drop);
    vgroup_.erase(vgroup_.begin() + drop);
    --g_.num_vertices;
}

std::vector<std::string> AGraph::validate() const {
    std::vector<std::string> out;
    if (!A_) return {"no ambient graph of groups"};
    const int V = g_.num_vertices;
    if (base_ < 0 || base_ >= V) out.push_back("base vertex out of range");
    for (int u = 0; u < V; ++u) {
        const int v = vtype(u);
        if (v < 0 || v >= A_->graph.num_vertices) {
            out.push_back("vertex " + std::to_string(u) + ": type out of range");
            continue;
        }
        if (!group(u).group() || !group(u).group()->same_as(A_->vg(v)))
            out.push_back("vertex " + std::to_string(u) + ": subgroup not in the vertex group of its type");
    }
    for (int f = 0; f < num_edges(); f += 2) {
        const int e = etype(f);
        const std::string name = "edge " + std::to_string(f);
        if (g_.inv[static_cast<std::size_t>(f)] != f + 1 || g_.inv[static_cast<std::size_t>(f + 1)] != f ||
            o(f) != t(f + 1) || t(f) != o(f + 1)) {
            out.push_back(name + ": broken edge pair");
            continue;
        }
        if (e < 0 || e >= A_->graph.num_edges()) {
            out.push_back(name + ": type out of range");
            continue;
        }
        if (A_->o(e) != vtype(o(f)) || A_->t(e) != vtype(t(f))) out.push_back(name + ": type is not a graph morphism");
        try {
            if (vertex_group(o(f)).normalize(fa(f)) != fa(f) || vertex_group(t(f)).normalize(fw(f)) != fw(f))
                out.push_back(name + ": label not in normal form");
        } catch (const std::exception& ex) {
            out.push_back(name + ": " + ex.what());
        }
    }
    if (V > 0 && !connected()) out.push_back("underlying graph is not connected");
    return out;
}

bool operator==(const AGraph& x, const AGraph& y) {
    if (x.A_ != y.A_ || x.base_ != y.base_ || x.g_.num_vertices != y.g_.num_vertices || x.g_.o != y.g_.o ||
        x.g_.t != y.g_.t || x.vtype_ != y.vtype_ || x.etype_ != y.etype_ || x.la_ != y.la_ || x.lb_ != y.lb_)
        return false;
    for (std::size_t u = 0; u < x.vgroup_.size(); ++u)
        if (x.vgroup_[u].gens() != y.vgroup_[u].gens()) return false;
    return true;
}

Subgroup pullback_alpha(const AGraph& B, int f) {
    const int e = B.etype(f);
    return image_intersection(conjugate_subgroup(B.group(B.o(f)), B.fa(f)), B.ambient().alpha_of(e));
}

Subgroup pullback_omega(const AGraph& B, int f) {
    const int e = B.etype(f);
    const Group& G = B.vertex_group(B.t(f));
    return image_intersection(conjugate_subgroup(B.group(B.t(f)), G.inv(B.fw(f))), B.ambient().omega_of(e));
}

Subgroup derived_edge_group(const AGraph& B, int f) { return intersect(pullback_alpha(B, f), pullback_omega(B, f)); }

std::optional<PairViolation> check_pair(const AGraph& B, int f1, int f2) {
    if (f1 == f2 || B.o(f1) != B.o(f2) || B.etype(f1) != B.etype(f2)) return std::nullopt;
    const Group& G = B.vertex_group(B.o(f1));
    const Elem a1 = B.fa(f1), a2 = B.fa(f2);
    const MonoMap& alpha = B.ambient().alpha_of(B.etype(f1));
    auto w = coset_intersection_witness(conjugate_subgroup(B.group(B.o(f1)), a1), G.mul(G.inv(a1), a2), alpha);
    if (!w) return std::nullopt;
    PairViolation v{f1, f2, G.prod(a2, alpha.apply(w->c), G.inv(a1)), alpha.source()->inv(w->c)};
    if (!pair_violation_holds(B, v)) throw std::logic_error("pair violation witness does not verify");
    return v;
}

bool pair_violation_holds(const AGraph& B, const PairViolation& v) {
    if (v.f1 < 0 || v.f2 < 0 || v.f1 >= B.num_edges() || v.f2 >= B.num_edges() || v.f1 == v.f2) return false;
    if (B.o(v.f1) != B.o(v.f2) || B.etype(v.f1) != B.etype(v.f2)) return false;
    const Group& G = B.vertex_group(B.o(v.f1));
    const MonoMap& alpha = B.ambient().alpha_of(B.etype(v.f1));
    return B.group(B.o(v.f1)).contains(v.a_prime) && G.prod(v.a_prime, B.fa(v.f1), alpha.apply(v.c)) == B.fa(v.f2);
}

std::optional<PairViolation> find_pair_violation(const AGraph& B) {
    for (int u = 0; u < B.num_vertices(); ++u) {
        auto out = B.out_edges(u);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (auto v = check_pair(B, out[i], out[j])) return v;
    }
    return std::nullopt;
}

std::optional<EdgeGroupViolation> find_edge_violation(const AGraph& B) {
    for (int f = 0; f < B.num_edges(); f += 2) {
        Subgroup p1 = pullback_alpha(B, f), p2 = pullback_omega(B, f);
        if (!edge_subgroups_equal(p1, p2)) return EdgeGroupViolation{f, p1, p2};
    }
    return std::nullopt;
}

std::optional<FoldViolation> find_fold_violation(const AGraph& B) {
    if (auto v = find_pair_violation(B)) return FoldViolation{*v};
    if (auto v = find_edge_violation(B)) return FoldViolation{*v};
    return std::nullopt;
}

bool is_folded(const AGraph& B) { return !find_fold_violation(B).has_value(); }

APath mu_translate(const AGraph& B, const BPath& q) {
    if (q.b.size() != q.f.size() + 1) throw std::invalid_argument("path element count must be edge count + 1");
    APath p;
    p.start = B.vtype(q.start);
    int u = q.start;
    for (std::size_t i = 0; i <= q.f.size(); ++i) {
        if (!B.group(u).contains(q.b[i])) throw std::invalid_argument("path element not in its vertex group");
        const Group& G = B.vertex_group(u);
        Elem x = q.b[i];
        if (i > 0) x = G.mul(B.fw(q.f[i - 1]), x);
        if (i < q.f.size()) {
            const int f = q.f[i];
            if (B.o(f) != u) throw std::invalid_argument("edge does not continue the path");
            x = G.mul(x, B.fa(f));
            p.e.push_back(B.etype(f));
            u = B.t(f);
        }
        p.a.push_back(x);
    }
    return p;
}

bool is_reduced(const AGraph& B, const BPath& q) {
    for (std::size_t i = 1; i < q.f.size(); ++i) {
        const int f = q.f[i - 1];
        if (q.f[i] != B.inv(f)) continue;
        const Group& G = B.vertex_group(B.t(f));
        const Elem x = G.prod(B.fw(f), q.b[i], G.inv(B.fw(f)));
        auto c = B.ambient().omega_of(B.etype(f)).preimage(x);
        if (c && derived_edge_group(B, f).contains(*c)) return false;
    }
    return true;
}

namespace {

// Tree edges from the root down to u.
std::vector<int> tree_descent(const AGraph& B, const SpanningTree& T, int u) {
    std::vector<int> edges;
    while (u != T.root) {
        const int f = T.parent_edge[static_cast<std::size_t>(u)];
        edges.push_back(f);
        u = B.o(f);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

}  // namespace

BPath tree_loop(const AGraph& B, const SpanningTree& T, int u, const Elem* x, int mid_edge) {
    std::vector<int> edges = tree_descent(B, T, u);
    std::size_t turn = edges.size();
    int w = u;
    if (mid_edge >= 0) {
        edges.push_back(mid_edge);
        w = B.t(mid_edge);
    }
    auto back = tree_descent(B, T, w);
    for (auto it = back.rbegin(); it != back.rend(); ++it) edges.push_back(B.inv(*it));
    BPath q{B.base(), {}, edges};
    int v = B.base();
    q.b.push_back(B.vertex_group(v).id());
    for (int f : edges) {
        v = B.t(f);
        q.b.push_back(B.vertex_group(v).id());
    }
    if (x) q.b[turn] = *x;
    return q;
}

std::vector<APath> language_generators(const AGraph& B) {
    const SpanningTree T = bfs_tree(B.graph(), B.base());
    std::vector<APath> out;
    for (int u = 0; u < B.num_vertices(); ++u)
        for (const Elem& x : B.group(u).gens()) out.push_back(mu_translate(B, tree_loop(B, T, u, &x, -1)));
    for (int f = 0; f < B.num_edges(); f += 2)
        if (!T.in_tree[static_cast<std::size_t>(f)]) out.push_back(mu_translate(B, tree_loop(B, T, B.o(f), nullptr, f)));
    return out;
}

int complexity(const AGraph& B) {
    if (!B.connected()) throw std::invalid_argument("complexity needs a connected graph");
    int c = B.num_pairs() - B.num_vertices() + 1;
    for (int u = 0; u < B.num_vertices(); ++u) c += B.group(u).rank();
    return c;
}

}  // namespace gog
