#pragma once

#include <optional>
#include <vector>

namespace gog::lattice {

using Vec = std::vector<long long>;

// Column Hermite normal form H = G * U of a generator matrix G given by its columns.
// Pivots are positive; entries left of a pivot are reduced into [0, pivot).
struct Hnf {
    int rows = 0;
    std::vector<Vec> cols;       // nonzero HNF columns
    std::vector<int> pivot_row;  // pivot row of each column, strictly increasing
    std::vector<Vec> coeff;      // coefficients of each HNF column over the original generators
    std::vector<Vec> kernel;     // integer kernel basis of G
    int rank() const { return static_cast<int>(cols.size()); }
};

Hnf hnf(int rows, const std::vector<Vec>& gens);
// Coefficients y over the original generators with G*y = x, when x lies in the lattice.
std::optional<Vec> solve(const Hnf& h, const Vec& x);
// Coefficients over the HNF columns themselves.
std::optional<Vec> solve_in_basis(const Hnf& h, const Vec& x);
// Generators of the intersection of the lattices spanned by a and b.
std::vector<Vec> intersect(int rows, const std::vector<Vec>& a, const std::vector<Vec>& b);
// Diagonal of the Smith normal form of the integer matrix (rows given as vectors).
std::vector<long long> smith_diagonal(std::vector<Vec> m);

}  // namespace gog::lattice
