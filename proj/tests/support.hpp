#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gog/catalog.hpp"
#include "gog/agraph.hpp"
#include "gog/folding.hpp"
#include "gog/testkit.hpp"
#include "gog/membership.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/group.hpp"

namespace test {

inline gog::Word random_word(std::mt19937& rng, int rank, int max_len) {
    gog::Word w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i) {
        long long l = 1 + static_cast<long long>(rng() % static_cast<unsigned>(rank));
        w.push_back(rng() % 2 ? l : -l);
    }
    return w;
}

inline gog::GroupPtr symmetric3() { return gog::catalog::symmetric(3); }
inline gog::GroupPtr klein4() { return gog::catalog::direct_product(*gog::Group::cyclic(2), *gog::Group::cyclic(2)); }

struct Embedding {
    gog::GroupPtr source, target;
    std::vector<gog::Elem> images;
};

inline Embedding random_finite_embedding(std::mt19937& rng, int max_order = 12) {
    static const auto zoo = gog::catalog::small_finite_groups(12);
    for (;;) {
        const auto& T = zoo[rng() % zoo.size()];
        if (T->order() > max_order) continue;
        std::vector<gog::GroupPtr> sources;
        for (const auto& S : zoo)
            if (T->order() % S->order() == 0) sources.push_back(S);
        const auto& S = sources[rng() % sources.size()];
        auto embs = gog::catalog::embeddings(*S, *T);
        if (embs.empty()) continue;
        return {S, T, embs[rng() % embs.size()]};
    }
}

inline gog::Elem random_element(std::mt19937& rng, const gog::Group& G) {
    return gog::Elem{{static_cast<long long>(rng() % static_cast<unsigned>(G.order()))}};
}

// Random path from v to v of exactly len edges with uniform finite-group elements, when one is found.
inline std::optional<gog::APath> random_loop(std::mt19937& rng, const gog::GraphOfGroups& A, int v, int len) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        gog::APath p{v, {random_element(rng, A.vg(v))}, {}};
        int u = v;
        for (int i = 0; i < len; ++i) {
            auto out = A.graph.out_edges(u);
            int e = out[rng() % out.size()];
            p.e.push_back(e);
            u = A.t(e);
            p.a.push_back(random_element(rng, A.vg(u)));
        }
        if (u == v) return p;
    }
    return std::nullopt;
}

struct FiniteInstance {
    std::shared_ptr<const gog::GraphOfGroups> A;
    std::vector<gog::APath> S;
    std::string label;
};

// Amalgam or one-loop HNN of finite groups with small coset indices so tree balls stay small.
inline FiniteInstance random_finite_instance(std::mt19937& rng, bool hnn, bool trivial_edge) {
    static const auto zoo = gog::catalog::small_finite_groups(12);
    auto pick = [&](int max_order) {
        for (;;) {
            const auto& G = zoo[rng() % zoo.size()];
            if (G->order() <= max_order) return G;
        }
    };
    auto embed = [&](const gog::GroupPtr& C, const gog::GroupPtr& G) -> std::optional<std::vector<gog::Elem>> {
        if (G->order() % C->order() != 0) return std::nullopt;
        auto all = gog::catalog::embeddings(*C, *G);
        if (all.empty()) return std::nullopt;
        return all[rng() % all.size()];
    };
    auto A = std::make_shared<gog::GraphOfGroups>();
    std::string label;
    for (;;) {
        *A = gog::GraphOfGroups{};
        if (!hnn) {
            gog::GroupPtr P, Q, C;
            if (trivial_edge) {
                P = pick(4);
                Q = pick(4);
                if (P->order() * Q->order() == 1) continue;
                C = gog::Group::cyclic(1);
            } else {
                P = pick(12);
                Q = pick(12);
                C = pick(12);
                if (C->order() == 1) continue;
                const int i = P->order() / C->order(), j = Q->order() / C->order();
                if ((i - 1) * (j - 1) > 4) continue;
            }
            auto a = embed(C, P), w = embed(C, Q);
            if (!a || !w) continue;
            A->add_vertex("p", P);
            A->add_vertex("q", Q);
            A->add_edge("e", 0, 1, C, *a, *w);
            label = "amalgam |P|=" + std::to_string(P->order()) + " |Q|=" + std::to_string(Q->order()) +
                    " |C|=" + std::to_string(C->order());
        } else {
            gog::GroupPtr G, C;
            if (trivial_edge) {
                G = pick(2);
                C = gog::Group::cyclic(1);
            } else {
                G = pick(12);
                C = pick(12);
                if (C->order() == 1 || G->order() > 2 * C->order()) continue;
            }
            auto a = embed(C, G), w = embed(C, G);
            if (!a || !w) continue;
            A->add_vertex("v", G);
            A->add_edge("e", 0, 0, C, *a, *w);
            label = "hnn |G|=" + std::to_string(G->order()) + " |C|=" + std::to_string(C->order());
        }
        break;
    }
    FiniteInstance inst{A, {}, label};
    const int n = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(inst.S.size()) < n) {
        auto p = random_loop(rng, *A, 0, static_cast<int>(rng() % 3));
        if (p) inst.S.push_back(*p);
    }
    return inst;
}

// Queries of length at most max_len: half random loops, half short products of generators.
inline std::vector<gog::APath> random_queries(std::mt19937& rng, const FiniteInstance& inst, int count, int max_len = 4) {
    const auto& A = *inst.A;
    std::vector<gog::APath> out;
    while (static_cast<int>(out.size()) < count) {
        if (out.size() % 2 == 0 && !inst.S.empty()) {
            gog::APath p = gog::identity_path(A, 0);
            for (int i = 0, k = 1 + static_cast<int>(rng() % 3); i < k; ++i) {
                const auto& s = inst.S[rng() % inst.S.size()];
                p = gog::path_compose(A, p, rng() % 2 ? s : gog::path_invert(A, s));
            }
            p = gog::reduce_a_path(A, p).path;
            if (p.length() <= max_len) out.push_back(p);
        } else if (auto p = random_loop(rng, A, 0, static_cast<int>(rng() % static_cast<unsigned>(max_len + 1)))) {
            out.push_back(*p);
        }
    }
    return out;
}

// Short random element of any backend group.
inline gog::Elem random_group_element(std::mt19937& rng, const gog::Group& G) {
    switch (G.kind()) {
    case gog::Kind::Finite: return random_element(rng, G);
    case gog::Kind::Abelian: {
        gog::Elem x{std::vector<long long>(static_cast<std::size_t>(G.rank()), 0)};
        for (auto& c : x.v) c = static_cast<long long>(rng() % 7) - 3;
        return x;
    }
    case gog::Kind::Free: break;
    }
    if (G.rank() == 0) return G.id();
    return G.normalize(gog::Elem{random_word(rng, G.rank(), 3)});
}

inline gog::Elem random_subgroup_element(std::mt19937& rng, const gog::Subgroup& H) {
    const gog::Group& G = *H.group();
    gog::Elem x = G.id();
    if (H.gens().empty()) return x;
    for (int i = 0, n = static_cast<int>(rng() % 4); i < n; ++i) {
        const auto& g = H.gens()[rng() % H.gens().size()];
        x = G.mul(x, rng() % 2 ? g : G.inv(g));
    }
    return x;
}

// Random path in the labelled graph from its base vertex, up to max_len edges.
inline gog::BPath random_bpath(std::mt19937& rng, const gog::AGraph& B, int max_len) {
    gog::BPath q{B.base(), {random_subgroup_element(rng, B.group(B.base()))}, {}};
    int u = B.base();
    for (int i = 0, n = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1)); i < n; ++i) {
        auto out = B.out_edges(u);
        if (out.empty()) break;
        int f = out[rng() % out.size()];
        q.f.push_back(f);
        u = B.t(f);
        q.b.push_back(random_subgroup_element(rng, B.group(u)));
    }
    return q;
}

// One random admissible A0, A1 or A2 move.
inline gog::AGraph random_aux_move(std::mt19937& rng, const gog::AGraph& B) {
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0 || B.num_edges() == 0) {
        if (B.num_vertices() == 1) return B;
        int u = static_cast<int>(rng() % static_cast<unsigned>(B.num_vertices()));
        if (u == B.base()) u = (u + 1) % B.num_vertices();
        return gog::apply_a0(B, u, random_group_element(rng, B.vertex_group(u)), true);
    }
    const int f = static_cast<int>(rng() % static_cast<unsigned>(B.num_edges()));
    if (kind == 1) {
        const auto& E = *B.ambient().egroup[static_cast<std::size_t>(B.etype(f))];
        return gog::apply_a1(B, f, random_group_element(rng, E));
    }
    return gog::apply_a2(B, f, random_subgroup_element(rng, B.group(B.o(f))));
}

// Every generator read off Bi lies in U and every element of S lies in the subgroup read off Bi.
inline bool language_preserved(const gog::AGraph& Bi, const gog::AGraph& folded, const std::vector<gog::APath>& S) {
    const gog::GraphOfGroups& A = Bi.ambient();
    auto gens = gog::language_generators(Bi);
    for (const auto& g : gens)
        if (!gog::decide_membership(folded, g, false).member) return false;
    int len = 0;
    for (const auto& s : S) len = std::max(len, gog::testkit::normal_form(A, s).length());
    gog::testkit::BruteForce bf(A, 0, gens, len);
    if (!bf.exact()) return false;
    for (const auto& s : S)
        if (!bf.query(s).member) return false;
    return true;
}

}  // namespace test
