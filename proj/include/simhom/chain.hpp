#pragma once

#include <map>

#include "simhom/integer.hpp"
#include "simhom/simplex.hpp"

namespace simhom {

/// An element of the free abelian group C_p(K): a finitely supported map
/// from canonical p-simplices to nonzero integer coefficients. A term with
/// coefficient n on simplex s stands for n * [s, +1]; the opposite
/// orientation is represented by negating the coefficient, so the relation
/// c(-sigma) = -c(sigma) holds by construction.
class Chain {
public:
    /// The zero chain of the given dimension. The explicit tag keeps
    /// dimension checks total even for empty chains.
    explicit Chain(int dimension) : dimension_(dimension) {}

    /// The elementary chain of an oriented simplex: coefficient sign on base.
    static Chain elementary(const OrientedSimplex& s);

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Simplex, Int>& terms() const { return terms_; }

    /// Coefficient of the +1 orientation of `s` (zero if absent).
    Int coefficient(const Simplex& s) const;

    /// Adds n * [s, +1], dropping the term if the sum cancels.
    /// Throws DimensionMismatch if s has the wrong dimension.
    void add_term(const Simplex& s, const Int& n);

    Chain operator-() const;
    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;
    Chain& operator+=(const Chain& other);

    bool operator==(const Chain&) const = default;

private:
    int dimension_;
    std::map<Simplex, Int> terms_;
};

/// Scalar multiple; n = 0 yields the zero chain.
Chain operator*(const Int& n, const Chain& c);

/// A function on the oriented p-simplex generators, stored as the value
/// assigned to the +1 orientation of each simplex; f(-sigma) = -f(sigma)
/// is applied during evaluation. Extends uniquely to a homomorphism
/// C_p(K) -> Z, which evaluate() computes.
class GeneratorAssignment {
public:
    explicit GeneratorAssignment(int dimension) : dimension_(dimension) {}

    int dimension() const { return dimension_; }

    /// Records f(s) = value; for sign -1 the stored value is negated so the
    /// map stays odd under orientation reversal.
    void assign(const OrientedSimplex& s, const Int& value);

    /// Sum over terms of coefficient * f(simplex). Throws MissingGenerator
    /// if a term has no assigned value, DimensionMismatch on dimension
    /// disagreement.
    Int evaluate(const Chain& c) const;

private:
    int dimension_;
    std::map<Simplex, Int> values_;
};

} // namespace simhom
