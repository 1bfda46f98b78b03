#pragma once

#include <cstddef>
#include <vector>

#include "simhom/simplex.hpp"

namespace simhom {

/// A finite, face-closed family of simplices. For each dimension p the
/// member p-simplices are kept sorted lexicographically by vertex tuple;
/// that ordering is the canonical basis order used by chains and boundary
/// matrices.
class SimplicialComplex {
public:
    /// The empty complex (dim() == -1).
    SimplicialComplex() = default;

    /// Smallest face-closed complex containing every listed simplex.
    /// Input order is irrelevant; duplicate vertices within a tuple are
    /// rejected (DuplicateVertex).
    static SimplicialComplex from_maximal(
        const std::vector<std::vector<VertexId>>& maximal);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// Canonical (lex-sorted) basis of p-simplices; empty for p < 0 or
    /// p > dim(), housing the trivial-group convention.
    const std::vector<Simplex>& p_simplices(int p) const;

    std::size_t simplex_count(int p) const { return p_simplices(p).size(); }

    /// Total number of simplices across all dimensions.
    std::size_t size() const;

    bool contains(const Simplex& s) const;

    /// Position of `s` within p_simplices(s.dimension()), or -1 if absent.
    std::ptrdiff_t index_of(const Simplex& s) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::vector<Simplex>> by_dim_;
};

} // namespace simhom
