#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace simhom {

/// Vertex labels are non-negative integers; the total order on vertices is
/// the numeric order on labels.
using VertexId = int;

/// A p-simplex stored as its strictly increasing vertex tuple.
class Simplex {
public:
    /// Requires `vertices` strictly increasing and non-negative.
    explicit Simplex(std::vector<VertexId> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    /// The facet obtained by omitting the vertex at position `i`.
    Simplex facet(std::size_t i) const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// Sign of a permutation of {0,...,p} given in list form, computed by
/// counting inversions: +1 for an even count, -1 for odd.
/// Throws MalformedPermutation if entries are out of range or repeated.
int parity(std::span<const int> ordering);

/// Number of inversions in a permutation of {0,...,p} (validated as above).
std::size_t inversion_count(std::span<const int> ordering);

/// Sorts an arbitrary vertex ordering into its canonical simplex and returns
/// the sign of the sorting permutation. Even reorderings of the input yield
/// the same sign, odd ones the opposite.
/// Throws DuplicateVertex if a label repeats.
std::pair<Simplex, int> canonicalize(std::span<const VertexId> ordering);
std::pair<Simplex, int> canonicalize(std::initializer_list<VertexId> ordering);

/// A simplex together with one of its two orientations. The canonical
/// representative of an orientation class is the sorted tuple with a sign.
struct OrientedSimplex {
    Simplex base;
    int sign; // +1 or -1

    OrientedSimplex(Simplex base_, int sign_) : base(std::move(base_)), sign(sign_) {}

    /// Builds the oriented simplex named by an arbitrary vertex ordering,
    /// e.g. (a2, a0) -> ([a0, a2], -1).
    static OrientedSimplex from_ordering(std::span<const VertexId> ordering);
    static OrientedSimplex from_ordering(std::initializer_list<VertexId> ordering);

    OrientedSimplex operator-() const { return {base, -sign}; }
    bool operator==(const OrientedSimplex&) const = default;
};

} // namespace simhom
