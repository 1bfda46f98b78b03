#include "simhom/boundary.hpp"

#include <string>

#include "simhom/errors.hpp"

namespace simhom {

Chain boundary(const OrientedSimplex& s) {
    const int p = s.base.dimension();
    Chain out(p - 1);
    if (p == 0) return out;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p); ++i) {
        const int face_sign = (i % 2 == 0) ? +1 : -1;
        out.add_term(s.base.facet(i), Int(s.sign * face_sign));
    }
    return out;
}

Chain boundary(const Chain& c) {
    Chain out(c.dimension() - 1);
    for (const auto& [s, n] : c.terms())
        out += n * boundary(OrientedSimplex(s, +1));
    return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p) {
    BoundaryMatrix m;
    m.p = p;
    m.row_simplices = k.p_simplices(p - 1);
    m.col_simplices = k.p_simplices(p);
    m.entries = IntMatrix(m.row_simplices.size(), m.col_simplices.size());
    for (std::size_t j = 0; j < m.col_simplices.size(); ++j) {
        const Chain b = boundary(OrientedSimplex(m.col_simplices[j], +1));
        for (const auto& [face, n] : b.terms()) {
            const std::ptrdiff_t i = k.index_of(face);
            // Face closure guarantees membership.
            m.entries(static_cast<std::size_t>(i), j) = n;
        }
    }
    return m;
}

std::vector<Int> chain_to_vector(const SimplicialComplex& k, const Chain& c) {
    const auto& basis = k.p_simplices(c.dimension());
    std::vector<Int> v(basis.size());
    for (const auto& [s, n] : c.terms()) {
        const std::ptrdiff_t i = k.index_of(s);
        if (i < 0)
            throw ForeignSimplex("chain_to_vector: chain uses a simplex not in the complex");
        v[static_cast<std::size_t>(i)] = n;
    }
    return v;
}

Chain vector_to_chain(const SimplicialComplex& k, int p, const std::vector<Int>& v) {
    const auto& basis = k.p_simplices(p);
    if (v.size() != basis.size())
        throw DimensionMismatch("vector_to_chain: expected length " +
                                std::to_string(basis.size()) + ", got " +
                                std::to_string(v.size()));
    Chain c(p);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) c.add_term(basis[i], v[i]);
    return c;
}

} // namespace simhom
