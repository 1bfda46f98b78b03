#include "simhom/complex.hpp"

#include <algorithm>
#include <set>

#include "simhom/errors.hpp"

namespace simhom {

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<std::vector<VertexId>>& maximal) {
    std::set<Simplex> members;
    for (const auto& tuple : maximal) {
        auto [simplex, sign] = canonicalize(tuple);
        (void)sign;
        const auto& vs = simplex.vertices();
        const std::size_t n = vs.size();
        // Downward closure: every nonempty vertex subset is a face.
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(vs[i]);
            members.insert(Simplex(std::move(face)));
        }
    }

    SimplicialComplex k;
    for (const Simplex& s : members) {
        const auto p = static_cast<std::size_t>(s.dimension());
        if (k.by_dim_.size() <= p) k.by_dim_.resize(p + 1);
        k.by_dim_[p].push_back(s);
    }
    // std::set iterates in lex order already, but per-dimension vectors are
    // re-checked here to keep the basis invariant local.
    for (auto& level : k.by_dim_) std::sort(level.begin(), level.end());
    return k;
}

const std::vector<Simplex>& SimplicialComplex::p_simplices(int p) const {
    static const std::vector<Simplex> empty;
    if (p < 0 || p > dim()) return empty;
    return by_dim_[static_cast<std::size_t>(p)];
}

std::size_t SimplicialComplex::size() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s) >= 0;
}

std::ptrdiff_t SimplicialComplex::index_of(const Simplex& s) const {
    const auto& level = p_simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return it - level.begin();
}

} // namespace simhom
