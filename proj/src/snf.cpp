#include "simhom/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "simhom/errors.hpp"

namespace simhom {

namespace {

using boost::multiprecision::abs;

/// Moves the submatrix entry of smallest nonzero magnitude to (t, t).
/// Returns false when the submatrix D[t.., t..] is entirely zero.
bool move_min_pivot(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            if (!found || abs(d(i, j)) < abs(d(pi, pj))) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    if (!found) return false;
    if (pi != t) {
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
    }
    if (pj != t) {
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
    }
    return true;
}

/// Euclidean elimination of column t below the pivot and row t right of it.
/// A nonzero remainder is swapped into the pivot slot, strictly shrinking
/// |pivot|, and the pass repeats until the cross is clear.
void clear_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
    for (;;) {
        bool pivot_changed = false;
        for (std::size_t r = t + 1; r < d.rows(); ++r) {
            if (d(r, t) == 0) continue;
            const Int q = d(r, t) / d(t, t); // truncating, |remainder| < |pivot|
            d.add_row_multiple(r, t, -q);
            u.add_row_multiple(r, t, -q);
            if (d(r, t) != 0) {
                d.swap_rows(t, r);
                u.swap_rows(t, r);
                pivot_changed = true;
            }
        }
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
            if (d(t, c) == 0) continue;
            const Int q = d(t, c) / d(t, t);
            d.add_col_multiple(c, t, -q);
            v.add_col_multiple(c, t, -q);
            if (d(t, c) != 0) {
                d.swap_cols(t, c);
                v.swap_cols(t, c);
                pivot_changed = true;
            }
        }
        if (!pivot_changed) return;
    }
}

} // namespace

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s;
    s.left = IntMatrix::identity(a.rows());
    s.right = IntMatrix::identity(a.cols());
    s.diagonal = a;
    IntMatrix& d = s.diagonal;

    const std::size_t bound = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    while (t < bound && move_min_pivot(d, s.left, s.right, t)) {
        clear_cross(d, s.left, s.right, t);
        // The pivot must divide every remaining entry before it is frozen,
        // otherwise the divisibility chain can break downstream. Mixing an
        // offending row into row t and re-clearing shrinks the pivot toward
        // the gcd.
        bool divides_all = true;
        for (std::size_t r = t + 1; r < d.rows() && divides_all; ++r)
            for (std::size_t c = t + 1; c < d.cols() && divides_all; ++c)
                if (d(r, c) % d(t, t) != 0) {
                    d.add_row_multiple(t, r, 1);
                    s.left.add_row_multiple(t, r, 1);
                    divides_all = false;
                }
        if (!divides_all) {
            clear_cross(d, s.left, s.right, t);
            continue; // re-check divisibility with the smaller pivot
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.left.negate_row(t);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::size_t nullity(const IntMatrix& a) { return a.cols() - rank(a); }

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    const SmithDecomposition s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    basis.reserve(a.cols() - s.rank);
    for (std::size_t j = s.rank; j < a.cols(); ++j)
        basis.push_back(s.right.col(j));
    return basis;
}

std::optional<std::vector<Int>> solve_integer(const SmithDecomposition& s,
                                              const std::vector<Int>& b) {
    if (b.size() != s.left.cols())
        throw DimensionMismatch("solve_integer: right-hand side has length " +
                                std::to_string(b.size()) + ", expected " +
                                std::to_string(s.left.cols()));
    const std::vector<Int> y = s.left * b;
    std::vector<Int> z(s.right.rows());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank) {
            if (y[i] % s.diagonal(i, i) != 0) return std::nullopt;
            z[i] = y[i] / s.diagonal(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right * z;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("solve_integer: right-hand side has length " +
                                std::to_string(b.size()) + ", expected " +
                                std::to_string(a.rows()));
    return solve_integer(smith_normal_form(a), b);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("inverse_unimodular: matrix is not square");
    const SmithDecomposition s = smith_normal_form(m);
    if (s.rank != m.rows())
        throw Error("inverse_unimodular: matrix is singular");
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diagonal(i, i) != 1)
            throw Error("inverse_unimodular: matrix is not unimodular");
    // U M V = I  =>  M^{-1} = V U.
    return s.right * s.left;
}

} // namespace simhom
