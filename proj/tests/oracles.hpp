#pragma once

// Test-only reference implementations, deliberately independent of the
// library's Smith-reduction path: parity by transposition counting, rank by
// rational elimination, invariant factors by determinantal-divisor gcds,
// determinants by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <random>
#include <vector>

#include "simhom/complex.hpp"
#include "simhom/chain.hpp"
#include "simhom/int_matrix.hpp"
#include "simhom/integer.hpp"

namespace simhom::testing {

/// Parity by decomposing into transpositions (selection sort) and counting
/// them mod 2. Input must be a permutation of 0..n-1.
int transposition_parity(std::vector<int> ordering);

/// Rank over the rationals by exact Gaussian elimination.
std::size_t rational_rank(const IntMatrix& a);

/// Exact determinant of a square matrix (Bareiss).
Int exact_determinant(const IntMatrix& a);

/// gcd of all k x k minors (0 when k exceeds the matrix dimensions or all
/// minors vanish). Stops scanning once the running gcd reaches 1.
Int determinantal_divisor(const IntMatrix& a, std::size_t k);

/// Invariant factors d_1..d_m via d_k = D_k / D_{k-1} on the determinantal
/// divisors, computed for k <= max_index (capped at the rational rank).
std::vector<Int> divisor_invariant_factors(const IntMatrix& a,
                                           std::size_t max_index);

/// Betti number via rational ranks of the two adjacent boundary matrices.
long long oracle_betti(const SimplicialComplex& k, int p);

/// Torsion of H_p via determinantal divisors of the boundary matrix out of
/// dimension p+1.
std::vector<Int> oracle_torsion(const SimplicialComplex& k, int p);

/// Exhaustive face-closure check: every facet of every member is a member.
bool face_closed(const SimplicialComplex& k);

/// Random face-closed complex on at most max_vertices vertices with maximal
/// simplices of dimension at most max_dim.
SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, int max_dim);

/// Random chain over the p-simplices of k with small coefficients.
Chain random_chain(std::mt19937& rng, const SimplicialComplex& k, int p);

/// Random matrix with entries uniform in [-entry_bound, entry_bound] and
/// dimensions uniform in [0, max_rows] x [0, max_cols].
IntMatrix random_matrix(std::mt19937& rng, std::size_t max_rows,
                        std::size_t max_cols, int entry_bound);

} // namespace simhom::testing
