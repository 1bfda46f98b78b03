#include "simhom/homology.hpp"

#include "simhom/boundary.hpp"
#include "simhom/errors.hpp"
#include "simhom/snf.hpp"

namespace simhom {

namespace {

void require_member_simplices(const SimplicialComplex& k, const Chain& c,
                              const char* who) {
    for (const auto& [s, n] : c.terms()) {
        (void)n;
        if (!k.contains(s))
            throw ForeignSimplex(std::string(who) +
                                 ": chain uses a simplex not in the complex");
    }
}

/// Kernel columns of the boundary map out of dimension p, as a matrix.
IntMatrix kernel_matrix(const SmithDecomposition& s, std::size_t n_cols) {
    const std::size_t z = n_cols - s.rank;
    IntMatrix out(n_cols, z);
    for (std::size_t j = 0; j < z; ++j)
        for (std::size_t i = 0; i < n_cols; ++i)
            out(i, j) = s.right(i, s.rank + j);
    return out;
}

/// Representative cycles for the generators of Z_p / B_p. The image of
/// boundary_{p+1} is re-expressed in the cycle basis (presentation matrix
/// X), whose Smith form U X V = D identifies a change of cycle basis
/// C' = Z * U^{-1} in which the quotient splits: column i of C' generates a
/// Z_{d_i} factor for d_i >= 2, and the columns past rank(X) generate the
/// free part.
std::vector<Chain> quotient_generators(const SimplicialComplex& k, int p,
                                       const IntMatrix& cycles,
                                       const IntMatrix& boundaries) {
    const std::size_t z = cycles.cols();
    std::vector<Chain> gens;
    if (z == 0) return gens;

    const SmithDecomposition cycle_snf = smith_normal_form(cycles);
    IntMatrix presentation(z, boundaries.cols());
    for (std::size_t j = 0; j < boundaries.cols(); ++j) {
        auto x = solve_integer(cycle_snf, boundaries.col(j));
        if (!x)
            throw Error("homology_group: boundary column escapes the cycle lattice");
        for (std::size_t i = 0; i < z; ++i) presentation(i, j) = (*x)[i];
    }

    const SmithDecomposition pres_snf = smith_normal_form(presentation);
    const IntMatrix new_basis = cycles * inverse_unimodular(pres_snf.left);

    // Free part first, then torsion representatives in factor order.
    for (std::size_t j = pres_snf.rank; j < z; ++j)
        gens.push_back(vector_to_chain(k, p, new_basis.col(j)));
    for (std::size_t j = 0; j < pres_snf.rank; ++j)
        if (pres_snf.diagonal(j, j) > 1)
            gens.push_back(vector_to_chain(k, p, new_basis.col(j)));
    return gens;
}

} // namespace

bool is_cycle(const SimplicialComplex& k, const Chain& c) {
    require_member_simplices(k, c, "is_cycle");
    return boundary(c).is_zero();
}

std::optional<Chain> boundary_witness(const SimplicialComplex& k, const Chain& c) {
    require_member_simplices(k, c, "is_boundary");
    const int p = c.dimension();
    const BoundaryMatrix up = boundary_matrix(k, p + 1);
    const std::vector<Int> b = chain_to_vector(k, c);
    auto x = solve_integer(up.entries, b);
    if (!x) return std::nullopt;
    return vector_to_chain(k, p + 1, *x);
}

bool is_boundary(const SimplicialComplex& k, const Chain& c) {
    return boundary_witness(k, c).has_value();
}

bool homologous(const SimplicialComplex& k, const Chain& c1, const Chain& c2) {
    if (c1.dimension() != c2.dimension())
        throw DimensionMismatch("homologous: chains have dimensions " +
                                std::to_string(c1.dimension()) + " and " +
                                std::to_string(c2.dimension()));
    require_member_simplices(k, c1, "homologous");
    require_member_simplices(k, c2, "homologous");
    return is_boundary(k, c1 - c2);
}

bool carried_by(const Chain& c, const SimplicialComplex& l) {
    for (const auto& [s, n] : c.terms()) {
        (void)n;
        if (!l.contains(s)) return false;
    }
    return true;
}

HomologySummary homology_group(const SimplicialComplex& k, int p) {
    HomologySummary h;
    h.p = p;
    if (p < 0 || p > k.dim()) return h;

    const std::size_t n_p = k.simplex_count(p);
    const SmithDecomposition down = smith_normal_form(boundary_matrix(k, p).entries);
    const IntMatrix up = boundary_matrix(k, p + 1).entries;
    const SmithDecomposition up_snf = smith_normal_form(up);

    const std::size_t cycle_rank = n_p - down.rank;
    h.betti = static_cast<long long>(cycle_rank) -
              static_cast<long long>(up_snf.rank);
    for (const Int& d : up_snf.invariant_factors())
        if (d > 1) h.torsion.push_back(d);

    h.generators = quotient_generators(k, p, kernel_matrix(down, n_p), up);
    return h;
}

std::vector<HomologySummary> all_homology(const SimplicialComplex& k) {
    std::vector<HomologySummary> out;
    for (int p = 0; p <= k.dim(); ++p) out.push_back(homology_group(k, p));
    return out;
}

long long euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    for (int p = 0; p <= k.dim(); ++p) {
        const auto count = static_cast<long long>(k.simplex_count(p));
        chi += (p % 2 == 0) ? count : -count;
    }
    return chi;
}

long long euler_from_betti(const std::vector<HomologySummary>& summaries) {
    long long chi = 0;
    for (const HomologySummary& h : summaries)
        chi += (h.p % 2 == 0) ? h.betti : -h.betti;
    return chi;
}

} // namespace simhom
