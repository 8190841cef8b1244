#include <doctest.h>

#include <algorithm>
#include <random>

#include "gog/builders.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/instances.hpp"
#include "support.hpp"

using namespace gog;

namespace {

bool has_violation(const std::vector<std::string>& v, const std::string& needle) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

// Random path over A with vertex elements drawn from small words or whole finite groups.
APath random_path(std::mt19937& rng, const GraphOfGroups& A, int start, int len) {
    auto elem = [&](int v) {
        const Group& G = A.vg(v);
        if (G.kind() == Kind::Finite) return Elem{{static_cast<long long>(rng() % static_cast<unsigned>(G.order()))}};
        Elem x = G.id();
        for (int i = 0, n = static_cast<int>(rng() % 4); i < n && !G.generators().empty(); ++i) {
            const Elem& g = G.generators()[rng() % G.generators().size()];
            x = G.mul(x, rng() % 2 ? g : G.inv(g));
        }
        return x;
    };
    APath p{start, {elem(start)}, {}};
    int v = start;
    for (int i = 0; i < len; ++i) {
        auto out = A.graph.out_edges(v);
        int e = out[rng() % out.size()];
        p.e.push_back(e);
        v = A.t(e);
        p.a.push_back(elem(v));
    }
    return p;
}

}  // namespace

TEST_CASE("validate examples") {
    auto A = instances::free_amalgam();
    CHECK(A.validate().empty());
    CHECK(instances::z2_star_z3().validate().empty());
    CHECK(instances::ascending_hnn().validate().empty());

    // Finite amalgam S3 *_{Z/2} S3.
    GraphOfGroups B;
    auto S3 = test::symmetric3();
    auto C2 = Group::cyclic(2);
    B.add_vertex("p", S3);
    B.add_vertex("q", S3);
    Elem tau{{1}};
    for (int i = 0; i < S3->order(); ++i)
        if (!S3->is_id(Elem{{i}}) && S3->is_id(S3->mul(Elem{{i}}, Elem{{i}}))) tau = Elem{{i}};
    B.add_edge("e", 0, 1, C2, {tau}, {tau});
    CHECK(B.validate().empty());

    GraphOfGroups bad;
    auto F = Group::free({"a", "b"});
    bad.add_vertex("u", F);
    bad.add_vertex("w", F);
    bad.add_edge("e", 0, 1, Group::free({"t"}), {F->id()}, {F->parse("a")});
    CHECK(has_violation(bad.validate(), "e:"));

    GraphOfGroups mism = instances::free_amalgam();
    mism.egroup[1] = Group::free({"t", "s"});
    CHECK(has_violation(mism.validate(), "involution violation"));

    GraphOfGroups disc;
    disc.add_vertex("u", F);
    disc.add_vertex("w", F);
    CHECK(has_violation(disc.validate(), "not connected"));
}

TEST_CASE("reduce_a_path examples") {
    auto A = instances::free_amalgam();
    auto s = instances::free_amalgam_generators(A);
    APath st = path_compose(A, s[2], s[3]);
    CHECK(st.length() == 4);
    auto r = reduce_a_path(A, st);
    CHECK(format_path(A, r.path) == "1 | e | c3 d20 | e-1 | 1");
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].position == 2);
    CHECK(A.vg(0).kind() == Kind::Free);

    auto r2 = reduce_a_path(A, parse_path(A, 0, "| e | c3 | e-1 |"));
    CHECK(r2.path.length() == 0);
    CHECK(A.vg(0).format(r2.path.a[0]) == "a2");

    APath p = parse_path(A, 0, "| e | d5 | e-1 |");
    auto r3 = reduce_a_path(A, p);
    CHECK(r3.path == p);
    CHECK(r3.log.empty());
    CHECK(is_reduced(A, p));

    CHECK_THROWS(reduce_a_path(A, APath{0, {A.vg(0).id()}, {1}}));
}

TEST_CASE("compose and invert") {
    auto A = instances::free_amalgam();
    APath p = parse_path(A, 0, "b | e | d | e-1 | a2 | e | c-1");
    APath q = path_compose(A, p, path_invert(A, p));
    CHECK(q.length() == 2 * p.length());
    CHECK(represents_identity(A, q));
    CHECK(path_invert(A, path_invert(A, p)) == p);
    APath x = parse_path(A, 0, "a"), y = parse_path(A, 0, "b-1");
    CHECK(A.vg(0).format(path_compose(A, x, y).a[0]) == "a b-1");
    CHECK_THROWS(path_compose(A, p, p));
    CHECK(format_path(A, parse_path(A, 0, format_path(A, p))) == format_path(A, p));
}

TEST_CASE("pi1 generator families") {
    auto A = instances::free_amalgam();
    auto g = pi1_generators(A, bfs_tree(A.graph, 0), 0);
    CHECK(g.edge_loops.empty());
    CHECK(g.vertex_gens.size() == 4);
    CHECK(format_path(A, g.vertex_gens[2]) == "1 | e | c | e-1 | 1");

    auto H = instances::ascending_hnn();
    auto h = pi1_generators(H, bfs_tree(H.graph, 0), 0);
    REQUIRE(h.edge_loops.size() == 1);
    CHECK(format_path(H, h.edge_loops[0]) == "1 | e | 1");
    CHECK(h.vertex_gens.size() == 2);

    GraphOfGroups W;
    W.add_vertex("v", Group::cyclic(2));
    W.add_edge("e", 0, 0, Group::cyclic(1), {}, {});
    W.add_edge("f", 0, 0, Group::cyclic(1), {}, {});
    auto w = pi1_generators(W, bfs_tree(W.graph, 0), 0);
    CHECK(w.edge_loops.size() == 2);
    CHECK(w.vertex_gens.size() == 1);

    SpanningTree T = bfs_tree(A.graph, 0);
    T.in_tree.assign(T.in_tree.size(), 0);
    CHECK_THROWS(pi1_generators(A, T, 0));
}

TEST_CASE("property: reduction is a logged fixed point") {
    std::mt19937 rng(11);
    std::vector<GraphOfGroups> zoo{instances::free_amalgam(), instances::z2_star_z3(), instances::ascending_hnn()};
    for (int trial = 0; trial < 2; ++trial) {
        auto emb = test::random_finite_embedding(rng, 8);
        GraphOfGroups B;
        B.add_vertex("p", emb.target);
        B.add_vertex("q", emb.target);
        B.add_edge("e", 0, 1, emb.source, emb.images, emb.images);
        zoo.push_back(B);
    }
    for (const auto& A : zoo) {
        REQUIRE(A.validate().empty());
        for (int it = 0; it < 200; ++it) {
            APath p = random_path(rng, A, 0, static_cast<int>(rng() % 7));
            auto r = reduce_a_path(A, p);
            CHECK(is_reduced(A, r.path));
            CHECK(reduce_a_path(A, r.path).path == r.path);
            CHECK(r.path.length() == p.length() - 2 * static_cast<int>(r.log.size()));
            CHECK(path_end(A, r.path) == path_end(A, p));
            // Replay the log.
            APath q = p;
            for (const auto& step : r.log) {
                const std::size_t i = static_cast<std::size_t>(step.position);
                REQUIRE(q.e[i - 1] == step.edge);
                REQUIRE(q.e[i] == A.inv(step.edge));
                REQUIRE(A.omega_of(step.edge).apply(step.c) == q.a[i]);
                const Group& G = A.vg(A.o(step.edge));
                q.a[i - 1] = G.prod(q.a[i - 1], A.alpha_of(step.edge).apply(step.c), q.a[i + 1]);
                q.a.erase(q.a.begin() + static_cast<std::ptrdiff_t>(i), q.a.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                q.e.erase(q.e.begin() + static_cast<std::ptrdiff_t>(i) - 1, q.e.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            }
            CHECK(q == r.path);
            CHECK(represents_identity(A, path_compose(A, p, path_invert(A, r.path))));
        }
    }
}

TEST_CASE("chordal RAAG builder examples") {
    SimpleGraph p3{3, {{0, 1}, {1, 2}}, {"a", "b", "c"}};
    auto r = build_chordal_raag(p3);
    REQUIRE(std::holds_alternative<RaagTree>(r));
    const auto& T = std::get<RaagTree>(r);
    CHECK(T.tree.validate().empty());
    CHECK(T.tree.graph.num_vertices == 2);
    CHECK(T.tree.graph.num_pairs() == 1);
    CHECK(T.tree.vertex_names[0] == "<b,c>");
    CHECK(T.tree.vertex_names[1] == "<b,a>");
    CHECK(T.tree.egroup[0]->rank() == 1);
    CHECK(T.tree.alpha_of(0).images()[0] == Elem{{1, 0}});

    SimpleGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}};
    auto r4 = build_chordal_raag(c4);
    REQUIRE(std::holds_alternative<ChordlessCycle>(r4));
    CHECK(std::get<ChordlessCycle>(r4).cycle.size() == 4);

    SimpleGraph one{1, {}, {"v"}};
    auto r1 = build_chordal_raag(one);
    REQUIRE(std::holds_alternative<RaagTree>(r1));
    CHECK(std::get<RaagTree>(r1).tree.graph.num_vertices == 1);
    CHECK(std::get<RaagTree>(r1).tree.vg(0).rank() == 1);

    CHECK_THROWS_AS(build_chordal_raag(SimpleGraph{2, {}, {}}), std::invalid_argument);
}

TEST_CASE("property: chordal builder covers every maximal clique") {
    std::mt19937 rng(5);
    int accepted = 0, rejected = 0;
    for (int it = 0; it < 300; ++it) {
        SimpleGraph g;
        g.n = 1 + static_cast<int>(rng() % 7);
        // Random connected graph: random tree plus extra edges.
        for (int v = 1; v < g.n; ++v) g.edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(v)), v});
        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y)
                if (rng() % 3 == 0 && std::find(g.edges.begin(), g.edges.end(), std::pair{x, y}) == g.edges.end())
                    g.edges.push_back({x, y});
        auto r = build_chordal_raag(g);
        auto adj = g.adjacency();
        if (auto* c = std::get_if<ChordlessCycle>(&r)) {
            ++rejected;
            const auto& cyc = c->cycle;
            REQUIRE(cyc.size() >= 4);
            for (std::size_t i = 0; i < cyc.size(); ++i)
                for (std::size_t j = i + 1; j < cyc.size(); ++j) {
                    bool consecutive = j == i + 1 || (i == 0 && j == cyc.size() - 1);
                    CHECK(static_cast<bool>(adj[static_cast<std::size_t>(cyc[i])][static_cast<std::size_t>(cyc[j])]) == consecutive);
                }
            continue;
        }
        ++accepted;
        const auto& T = std::get<RaagTree>(r);
        CHECK(T.tree.validate().empty());
        CHECK(T.tree.graph.num_pairs() == T.tree.graph.num_vertices - 1);
        for (const auto& K : maximal_cliques(g)) {
            bool covered = std::any_of(T.coords.begin(), T.coords.end(), [&](const std::vector<int>& cs) {
                return std::all_of(K.begin(), K.end(), [&](int v) { return std::find(cs.begin(), cs.end(), v) != cs.end(); });
            });
            CHECK(covered);
        }
        // Each vertex group is a clique.
        for (const auto& cs : T.coords)
            for (std::size_t i = 0; i < cs.size(); ++i)
                for (std::size_t j = i + 1; j < cs.size(); ++j)
                    CHECK(adj[static_cast<std::size_t>(cs[i])][static_cast<std::size_t>(cs[j])]);
    }
    CHECK(accepted > 20);
    CHECK(rejected > 20);
}

TEST_CASE("tree graph product builder") {
    SimpleGraph edge{2, {{0, 1}}, {"h", "k"}};
    auto A = build_tree_graph_product(edge, {1, 1});
    CHECK(A.validate().empty());
    CHECK(A.graph.num_vertices == 3);
    CHECK(A.graph.num_pairs() == 2);
    CHECK(A.vg(2).rank() == 2);
    CHECK(A.vertex_names[2] == "hxk");

    auto single = build_tree_graph_product(SimpleGraph{1, {}, {}}, {3});
    CHECK(single.graph.num_vertices == 1);
    CHECK(single.vg(0).rank() == 3);

    SimpleGraph path{3, {{0, 1}, {1, 2}}, {}};
    auto P = build_tree_graph_product(path, {1, 1, 1});
    CHECK(P.validate().empty());
    CHECK(P.graph.num_vertices == 5);
    CHECK(P.vg(3).rank() == 2);
    CHECK(P.vg(4).rank() == 2);

    SimpleGraph tri{3, {{0, 1}, {1, 2}, {2, 0}}, {}};
    CHECK_THROWS_AS(build_tree_graph_product(tri, {1, 1, 1}), std::invalid_argument);
}
