#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Reference computations that share no code with the library.
namespace oracle {

using Q = mpq_class;

/// Exact determinant by cofactor-free Gaussian elimination on a private copy.
Q determinant(std::vector<std::vector<Q>> m);

/// Facets of conv{(t_i, ..., t_i^d)} as 0-based index lists: d-subsets whose hyperplane leaves all
/// other points on one side.
std::vector<std::vector<int>> hull_facets(const std::vector<Q>& t, int d);

/// Face test for a simplicial point set: the subset lies in some facet.
bool is_face(const std::vector<int>& subset, const std::vector<std::vector<int>>& facets);

/// Upper Bound Theorem facet count of a cyclic d-polytope with n vertices.
std::uint64_t cyclic_facet_count(int n, int d);

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int k);

/// Dissections of a convex m-gon, including the empty one, by recursion on the cell containing
/// the edge (1, m).
std::uint64_t polygon_dissections(int m);

/// Triangulations of C(n,d) counted by exact cover: simplices with Vandermonde volumes summing to
/// the total, no two of them containing the two halves of an alternating circuit.
std::uint64_t count_triangulations_by_cover(int n, int d);

/// Number of sign changes plus one of a zero-free sign vector.
int sign_change_blocks(const std::vector<int>& signs);

}  // namespace oracle
