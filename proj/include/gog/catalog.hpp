#pragma once

#include <vector>

#include "gog/group.hpp"

namespace gog::catalog {

// Permutation group closure turned into a multiplication table; identity gets index 0.
GroupPtr from_permutations(const std::vector<std::vector<int>>& gens);
GroupPtr dihedral(int n);  // order 2n
GroupPtr symmetric(int n);
GroupPtr alternating4();
GroupPtr quaternion8();
GroupPtr direct_product(const Group& a, const Group& b);

// All groups of order <= max_order available here, up to isomorphism where known.
std::vector<GroupPtr> small_finite_groups(int max_order);

// Generator images of every injective homomorphism source -> target.
std::vector<std::vector<Elem>> embeddings(const Group& source, const Group& target);

}  // namespace gog::catalog
