#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace simhom::testing {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Next k-combination of indices in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

int transposition_parity(std::vector<int> ordering) {
    int swaps = 0;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        while (ordering[i] != static_cast<int>(i)) {
            std::swap(ordering[i], ordering[static_cast<std::size_t>(ordering[i])]);
            ++swaps;
        }
    }
    return swaps % 2 == 0 ? +1 : -1;
}

std::size_t rational_rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a(i, j));

    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && w[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(w[row], w[pivot]);
        for (std::size_t r = row + 1; r < m; ++r) {
            if (w[r][col] == 0) continue;
            const Rational f = w[r][col] / w[row][col];
            for (std::size_t c = col; c < n; ++c) w[r][c] -= f * w[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Int exact_determinant(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::logic_error("exact_determinant: not square");
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && w(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            w.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
    if (k == 0) return 1;
    if (k > a.rows() || k > a.cols()) return 0;

    std::vector<std::size_t> rows(k), cols(k);
    Int g = 0;
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            IntMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    minor(i, j) = a(rows[i], cols[j]);
            g = gcd(g, abs(exact_determinant(minor)));
            if (g == 1) return g;
        } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    return g;
}

std::vector<Int> divisor_invariant_factors(const IntMatrix& a,
                                           std::size_t max_index) {
    const std::size_t r = rational_rank(a);
    const std::size_t count = std::min(max_index, r);
    std::vector<Int> factors;
    Int prev = 1;
    for (std::size_t k = 1; k <= count; ++k) {
        const Int dk = determinantal_divisor(a, k);
        factors.push_back(dk / prev);
        prev = dk;
    }
    return factors;
}

namespace {

IntMatrix oracle_boundary_matrix(const SimplicialComplex& k, int p) {
    const auto& rows = k.p_simplices(p - 1);
    const auto& cols = k.p_simplices(p);
    IntMatrix m(rows.size(), cols.size());
    if (p < 1) return m; // zero map out of dimension 0
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& vs = cols[j].vertices();
        for (std::size_t omit = 0; omit < vs.size(); ++omit) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != omit) face.push_back(vs[i]);
            const Simplex f{face};
            const auto it = std::lower_bound(rows.begin(), rows.end(), f);
            m(static_cast<std::size_t>(it - rows.begin()), j) =
                (omit % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

} // namespace

long long oracle_betti(const SimplicialComplex& k, int p) {
    if (p < 0 || p > k.dim()) return 0;
    const auto n_p = static_cast<long long>(k.simplex_count(p));
    const auto rank_down =
        static_cast<long long>(rational_rank(oracle_boundary_matrix(k, p)));
    const auto rank_up =
        static_cast<long long>(rational_rank(oracle_boundary_matrix(k, p + 1)));
    return n_p - rank_down - rank_up;
}

std::vector<Int> oracle_torsion(const SimplicialComplex& k, int p) {
    const IntMatrix up = oracle_boundary_matrix(k, p + 1);
    std::vector<Int> torsion;
    for (const Int& d : divisor_invariant_factors(up, rational_rank(up)))
        if (d > 1) torsion.push_back(d);
    return torsion;
}

bool face_closed(const SimplicialComplex& k) {
    for (int p = 1; p <= k.dim(); ++p)
        for (const Simplex& s : k.p_simplices(p))
            for (std::size_t i = 0; i < s.vertices().size(); ++i)
                if (!k.contains(s.facet(i))) return false;
    return true;
}

SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, int max_dim) {
    std::uniform_int_distribution<int> vertex_count(1, max_vertices);
    const int n = vertex_count(rng);
    std::uniform_int_distribution<int> simplex_count(1, 6);
    const int m = simplex_count(rng);

    std::vector<VertexId> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);

    std::vector<std::vector<VertexId>> maximal;
    std::uniform_int_distribution<int> tuple_size(1, std::min(n, max_dim + 1));
    for (int i = 0; i < m; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        const int size = tuple_size(rng);
        maximal.emplace_back(pool.begin(), pool.begin() + size);
    }
    return SimplicialComplex::from_maximal(maximal);
}

Chain random_chain(std::mt19937& rng, const SimplicialComplex& k, int p) {
    Chain c(p);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution include(0.5);
    for (const Simplex& s : k.p_simplices(p))
        if (include(rng)) c.add_term(s, coeff(rng));
    return c;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_rows,
                        std::size_t max_cols, int entry_bound) {
    std::uniform_int_distribution<std::size_t> rows(0, max_rows), cols(0, max_cols);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    IntMatrix m(rows(rng), cols(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    return m;
}

} // namespace simhom::testing
