#pragma once

#include <vector>

#include "simhom/chain.hpp"
#include "simhom/complex.hpp"
#include "simhom/int_matrix.hpp"
#include "simhom/simplex.hpp"

namespace simhom {

/// Boundary of an oriented p-simplex: the alternating sum of its facets,
/// each facet keeping the remaining vertex order, scaled by the simplex
/// sign. For p = 0 this is the zero chain of dimension -1 (the boundary map
/// out of dimension 0 is the zero map).
Chain boundary(const OrientedSimplex& s);

/// Linear extension to chains: boundary(sum n_j s_j) = sum n_j boundary(s_j).
Chain boundary(const Chain& c);

/// Matrix of the boundary map out of dimension p in the canonical bases.
/// Column j is the boundary of the j-th canonical p-simplex expressed over
/// the (p-1)-simplices; all entries lie in {-1, 0, +1}.
struct BoundaryMatrix {
    int p = 0;
    std::vector<Simplex> row_simplices; // canonical (p-1)-basis
    std::vector<Simplex> col_simplices; // canonical p-basis
    IntMatrix entries;
};

/// Assembles the matrix of the boundary map out of dimension p. The matrix
/// of the map out of dimension 0, or of any p outside [0, dim], is empty in
/// the corresponding direction.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p);

/// Coordinates of `c` in the canonical p-basis of `k`.
/// Throws ForeignSimplex if a term of `c` is not a member of `k`.
std::vector<Int> chain_to_vector(const SimplicialComplex& k, const Chain& c);

/// Inverse of chain_to_vector over the canonical p-basis.
Chain vector_to_chain(const SimplicialComplex& k, int p, const std::vector<Int>& v);

} // namespace simhom
