#pragma once

#include <optional>
#include <vector>

#include "simhom/chain.hpp"
#include "simhom/complex.hpp"
#include "simhom/integer.hpp"

namespace simhom {

/// Presentation of H_p(K) = Z_p / B_p as Z^betti plus cyclic torsion
/// factors Z_d1 (+) ... (+) Z_dk with 2 <= d1 | d2 | ... | dk.
struct HomologySummary {
    int p = 0;
    long long betti = 0;
    std::vector<Int> torsion;

    /// Representative cycles projecting to a generating set of H_p: first
    /// `betti` chains generate the free part, then one chain per torsion
    /// factor in torsion order. Engaged for every p in [0, dim]; no
    /// minimality of the representatives is promised.
    std::optional<std::vector<Chain>> generators;

    /// Equality is on the group data (p, betti, torsion); generator
    /// representatives depend on the complex presentation and are ignored.
    friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
        return a.p == b.p && a.betti == b.betti && a.torsion == b.torsion;
    }
};

/// True iff the boundary of c vanishes (c in Z_p = ker boundary).
/// Throws ForeignSimplex if c uses a simplex outside k.
bool is_cycle(const SimplicialComplex& k, const Chain& c);

/// A (p+1)-chain d with boundary(d) = c, when c is a boundary.
/// The zero chain gets the zero witness. Throws ForeignSimplex as above.
std::optional<Chain> boundary_witness(const SimplicialComplex& k, const Chain& c);

/// True iff c lies in B_p = im boundary_{p+1}.
bool is_boundary(const SimplicialComplex& k, const Chain& c);

/// True iff c1 - c2 is a boundary (the chains represent the same homology
/// class). Throws DimensionMismatch and ForeignSimplex.
bool homologous(const SimplicialComplex& k, const Chain& c1, const Chain& c2);

/// True iff every simplex with nonzero coefficient in c is a member of l.
bool carried_by(const Chain& c, const SimplicialComplex& l);

/// Computes H_p(K) via Smith Normal Form of the two adjacent boundary
/// matrices: betti = nullity(boundary_p) - rank(boundary_{p+1}); torsion =
/// invariant factors > 1 of boundary_{p+1}. Out-of-range p yields the
/// trivial summary. H_0 is unreduced: a single point has betti 1.
HomologySummary homology_group(const SimplicialComplex& k, int p);

/// Summaries for p = 0..dim (empty for the empty complex).
std::vector<HomologySummary> all_homology(const SimplicialComplex& k);

/// Alternating sum of simplex counts.
long long euler_characteristic(const SimplicialComplex& k);

/// Alternating sum of Betti numbers; equals euler_characteristic(k) since
/// torsion contributes no rank.
long long euler_from_betti(const std::vector<HomologySummary>& summaries);

} // namespace simhom
