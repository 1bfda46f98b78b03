#include "simhom/simplex.hpp"

#include <algorithm>
#include <string>

#include "simhom/errors.hpp"

namespace simhom {

namespace {

std::string ordering_to_string(std::span<const int> ordering) {
    std::string out = "[";
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(ordering[i]);
    }
    return out + "]";
}

} // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw Error("Simplex: vertex tuple must be nonempty");
    if (vertices_.front() < 0)
        throw Error("Simplex: vertex labels must be non-negative");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i - 1] >= vertices_[i])
            throw Error("Simplex: vertex tuple must be strictly increasing");
    }
}

Simplex Simplex::facet(std::size_t i) const {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (k != i) vs.push_back(vertices_[k]);
    return Simplex(std::move(vs));
}

std::size_t inversion_count(std::span<const int> ordering) {
    const std::size_t n = ordering.size();
    std::vector<bool> seen(n, false);
    for (int v : ordering) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw MalformedPermutation("parity: entry out of range in " +
                                       ordering_to_string(ordering));
        if (seen[static_cast<std::size_t>(v)])
            throw MalformedPermutation("parity: repeated entry in " +
                                       ordering_to_string(ordering));
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ordering[i] > ordering[j]) ++inversions;
    return inversions;
}

int parity(std::span<const int> ordering) {
    return inversion_count(ordering) % 2 == 0 ? +1 : -1;
}

std::pair<Simplex, int> canonicalize(std::span<const VertexId> ordering) {
    if (ordering.empty())
        throw Error("canonicalize: vertex ordering must be nonempty");
    std::vector<VertexId> sorted(ordering.begin(), ordering.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i - 1] == sorted[i])
            throw DuplicateVertex("canonicalize: repeated vertex " +
                                  std::to_string(sorted[i]));
    }
    // The sign is the parity of the permutation that sorts the input, read
    // off as the inversion count of the input sequence itself.
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < ordering.size(); ++i)
        for (std::size_t j = i + 1; j < ordering.size(); ++j)
            if (ordering[i] > ordering[j]) ++inversions;
    return {Simplex(std::move(sorted)), inversions % 2 == 0 ? +1 : -1};
}

std::pair<Simplex, int> canonicalize(std::initializer_list<VertexId> ordering) {
    return canonicalize(std::span<const VertexId>(ordering.begin(), ordering.size()));
}

OrientedSimplex OrientedSimplex::from_ordering(std::span<const VertexId> ordering) {
    auto [base, sign] = canonicalize(ordering);
    return OrientedSimplex(std::move(base), sign);
}

OrientedSimplex OrientedSimplex::from_ordering(std::initializer_list<VertexId> ordering) {
    return from_ordering(std::span<const VertexId>(ordering.begin(), ordering.size()));
}

} // namespace simhom
