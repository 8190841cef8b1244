#pragma once

#include <vector>

#include "gog/graph_of_groups.hpp"

namespace gog::instances {

// F(a,b) *_{a^2 = c^3} F(c,d): vertices v0, v; one edge e with group F(t), t -> a^2, t -> c^3.
GraphOfGroups free_amalgam();
// {a^4, b^2, c^3 d^10, d^10} as paths at v0.
std::vector<APath> free_amalgam_generators(const GraphOfGroups& A);

// Z/2 * Z/3 over a trivial edge group; x lives at v0, y at v1.
GraphOfGroups z2_star_z3();
APath z2_star_z3_x(const GraphOfGroups& A);
APath z2_star_z3_y(const GraphOfGroups& A);

// One vertex F(a,b) with a loop e over F(s,u): alpha the identity, omega s -> a b^2 a, u -> b a^2 b.
GraphOfGroups ascending_hnn();
// {a, 1 e 1}
std::vector<APath> ascending_hnn_generators(const GraphOfGroups& A);

}  // namespace gog::instances
