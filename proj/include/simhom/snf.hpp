#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simhom/int_matrix.hpp"

namespace simhom {

/// Smith Normal Form D = U * A * V with unimodular U, V. The diagonal of D
/// holds the invariant factors d_1 | d_2 | ... | d_r > 0 followed by zeros;
/// r is the rank of A. Kernel bases, integer system solving, and torsion
/// extraction all read off this decomposition.
struct SmithDecomposition {
    IntMatrix left;     // U, unimodular, rows x rows
    IntMatrix diagonal; // D = U * A * V
    IntMatrix right;    // V, unimodular, cols x cols
    std::size_t rank = 0;

    /// d_1, ..., d_r (all positive).
    std::vector<Int> invariant_factors() const;
};

/// Exact Smith Normal Form over the integers. Pivots on the entry of
/// smallest nonzero magnitude in the remaining submatrix to limit
/// intermediate growth; transforms are always produced.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Rank of A over the rationals (= number of nonzero invariant factors).
std::size_t rank(const IntMatrix& a);

/// cols(A) - rank(A).
std::size_t nullity(const IntMatrix& a);

/// Basis of the integer kernel lattice {x : A x = 0}: the last
/// cols - rank columns of V.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

/// Some integer solution x of A x = b, if one exists. With y = U b, the
/// system is solvable iff d_i | y_i for i <= r and y_i = 0 beyond r; then
/// x = V z with z_i = y_i / d_i.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);

/// Same, reusing an existing decomposition of A.
std::optional<std::vector<Int>> solve_integer(const SmithDecomposition& s,
                                              const std::vector<Int>& b);

/// Exact inverse of a unimodular matrix: with U M V = I, the inverse is
/// V * U. Throws Error if M is not square with |det| = 1.
IntMatrix inverse_unimodular(const IntMatrix& m);

} // namespace simhom
