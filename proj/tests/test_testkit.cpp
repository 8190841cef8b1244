#include <doctest.h>

#include <map>
#include <random>

#include "gog/folding.hpp"
#include "gog/instances.hpp"
#include "gog/membership.hpp"
#include "gog/testkit.hpp"
#include "support.hpp"

using namespace gog;
using namespace gog::testkit;

TEST_CASE("tree ball examples") {
    auto A = instances::z2_star_z3();
    CHECK(bass_serre_ball(A, 0, 0).vertices.size() == 1);
    auto b1 = bass_serre_ball(A, 0, 1);
    CHECK(b1.vertices.size() == 3);
    CHECK(b1.adjacent[0].size() == 2);
    // Children of a depth-1 vertex at v1: three cosets minus the parent.
    CHECK(bass_serre_ball(A, 0, 2).vertices.size() == 3 + 2 * 2);

    GraphOfGroups E;
    auto C2 = Group::cyclic(2);
    E.add_vertex("p", C2);
    E.add_vertex("q", C2);
    E.add_edge("e", 0, 1, C2, {Elem{{1}}}, {Elem{{1}}});
    for (int r = 1; r <= 4; ++r) CHECK(bass_serre_ball(E, 0, r).vertices.size() == 2);

    CHECK_THROWS(bass_serre_ball(instances::free_amalgam(), 0, 1));
}

TEST_CASE("property: tree ball sizes match coset indices") {
    std::mt19937 rng(3);
    for (int it = 0; it < 12; ++it) {
        auto inst = test::random_finite_instance(rng, it % 2 == 1, it % 3 == 0);
        const auto& A = *inst.A;
        auto ball = bass_serre_ball(A, 0, 3);
        for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
            if (ball.depth[i] >= 3) continue;
            const int v = path_end(A, ball.vertices[i]);
            int expect = 0;
            for (int e : A.graph.out_edges(v)) expect += A.vg(v).order() / A.egroup[static_cast<std::size_t>(e)]->order();
            CHECK(static_cast<int>(ball.adjacent[i].size()) == expect);
            CHECK(ball_index(A, ball, ball.vertices[i]) == static_cast<int>(i));
        }
    }
}

TEST_CASE("property: reduced paths for equal elements share edge sequences") {
    std::mt19937 rng(8);
    for (int it = 0; it < 10; ++it) {
        auto inst = test::random_finite_instance(rng, it % 2 == 1, it % 4 == 0);
        const auto& A = *inst.A;
        for (int k = 0; k < 40; ++k) {
            auto p = test::random_loop(rng, A, 0, static_cast<int>(rng() % 5));
            if (!p) continue;
            // Shift edge group elements across edges and insert a cancelling detour.
            APath q = *p;
            for (std::size_t i = 0; i < q.e.size(); ++i) {
                const int e = q.e[i];
                const auto& C = *A.egroup[static_cast<std::size_t>(e)];
                Elem c = test::random_element(rng, C);
                q.a[i] = A.vg(A.o(e)).mul(q.a[i], A.alpha_of(e).apply(c));
                q.a[i + 1] = A.vg(A.t(e)).mul(A.vg(A.t(e)).inv(A.omega_of(e).apply(c)), q.a[i + 1]);
            }
            if (auto d = test::random_loop(rng, A, 0, 2)) q = path_compose(A, path_compose(A, *d, path_invert(A, *d)), q);
            REQUIRE(same_element(A, *p, q));
            CHECK(reduce_a_path(A, *p).path.e == reduce_a_path(A, q).path.e);
        }
    }
}

TEST_CASE("brute force membership examples") {
    auto A = instances::z2_star_z3();
    APath x = instances::z2_star_z3_x(A), y = instances::z2_star_z3_y(A);
    APath xyx = path_compose(A, path_compose(A, x, y), x);
    auto v = brute_force_membership(A, 0, {x, y}, xyx);
    CHECK(v.member);
    CHECK(v.exact);
    auto w = brute_force_membership(A, 0, {path_compose(A, x, y)}, x);
    CHECK_FALSE(w.member);
    CHECK(w.exact);
    CHECK(brute_force_membership(A, 0, {}, identity_path(A, 0)).member);
    CHECK_FALSE(brute_force_membership(A, 0, {}, y).member);
}

TEST_CASE("homomorphism certificates") {
    auto A = instances::free_amalgam();
    auto S = instances::free_amalgam_generators(A);
    HomSpec chi{{{3, 0}, {2, 0}}, {0}};
    auto cert = hom_certificate(A, chi, S, parse_path(A, 0, "a"));
    REQUIRE(cert);
    CHECK(cert->value == 3);
    CHECK(cert->modulus == 6);
    CHECK_FALSE(hom_certificate(A, chi, S, parse_path(A, 0, "a2")));
    HomSpec bad{{{1, 0}, {1, 0}}, {0}};
    CHECK_THROWS_AS(validate_hom(A, bad), std::invalid_argument);
}

TEST_CASE("property: membership agrees with brute force on finite instances") {
    std::mt19937 rng(21);
    int positives = 0, negatives = 0;
    for (int it = 0; it < 8; ++it) {
        auto inst = test::random_finite_instance(rng, it % 2 == 1, it % 3 == 0);
        CAPTURE(inst.label);
        const auto& A = *inst.A;
        FoldTrace t = fold_to_completion(build_wedge(inst.A, 0, inst.S));
        REQUIRE(t.status == FoldStatus::Folded);
        BruteForce bf(A, 0, inst.S, 4);
        REQUIRE(bf.exact());
        for (const auto& p : test::random_queries(rng, inst, 30)) {
            auto r = decide_membership(t.final, p, false);
            CHECK(r.member == bf.query(p).member);
            if (r.member) {
                ++positives;
                CHECK(verify_certificate(t.final, p, *r.certificate));
            } else {
                ++negatives;
            }
            CHECK(decide_membership(t.final, reduce_a_path(A, p).path, false).member == r.member);
        }
    }
    CHECK(positives > 20);
    CHECK(negatives > 20);
}
