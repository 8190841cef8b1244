#include "gog/instances.hpp"

namespace gog::instances {

GraphOfGroups free_amalgam() {
    GraphOfGroups A;
    auto P = Group::free({"a", "b"});
    auto Q = Group::free({"c", "d"});
    auto E = Group::free({"t"});
    A.add_vertex("v0", P);
    A.add_vertex("v", Q);
    A.add_edge("e", 0, 1, E, {P->parse("a2")}, {Q->parse("c3")});
    return A;
}

std::vector<APath> free_amalgam_generators(const GraphOfGroups& A) {
    return {parse_path(A, 0, "a4"), parse_path(A, 0, "b2"), parse_path(A, 0, "| e | c3 d10 | e-1 |"),
            parse_path(A, 0, "| e | d10 | e-1 |")};
}

GraphOfGroups z2_star_z3() {
    GraphOfGroups A;
    auto C2 = Group::cyclic(2);
    auto C3 = Group::cyclic(3);
    A.add_vertex("v0", C2);
    A.add_vertex("v1", C3);
    A.add_edge("e", 0, 1, Group::cyclic(1), {}, {});
    return A;
}

APath z2_star_z3_x(const GraphOfGroups& A) { return element_path(0, A.vg(0).generators().at(0)); }

APath z2_star_z3_y(const GraphOfGroups& A) {
    APath p = parse_path(A, 0, "| e | | e-1 |");
    p.a[1] = A.vg(1).generators().at(0);
    return p;
}

GraphOfGroups ascending_hnn() {
    GraphOfGroups A;
    auto F = Group::free({"a", "b"});
    auto E = Group::free({"s", "u"});
    A.add_vertex("v", F);
    A.add_edge("e", 0, 0, E, {F->parse("a"), F->parse("b")}, {F->parse("a b2 a"), F->parse("b a2 b")});
    return A;
}

std::vector<APath> ascending_hnn_generators(const GraphOfGroups& A) {
    return {parse_path(A, 0, "a"), parse_path(A, 0, "| e |")};
}

}  // namespace gog::instances
