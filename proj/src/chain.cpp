#include "simhom/chain.hpp"

#include <string>

#include "simhom/errors.hpp"

namespace simhom {

namespace {

std::string simplex_to_string(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(s.vertices()[i]);
    }
    return out + "]";
}

} // namespace

Chain Chain::elementary(const OrientedSimplex& s) {
    Chain c(s.base.dimension());
    c.add_term(s.base, s.sign);
    return c;
}

Int Chain::coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Int(0) : it->second;
}

void Chain::add_term(const Simplex& s, const Int& n) {
    if (s.dimension() != dimension_)
        throw DimensionMismatch("Chain: term of dimension " +
                                std::to_string(s.dimension()) +
                                " added to chain of dimension " +
                                std::to_string(dimension_));
    if (n == 0) return;
    auto [it, inserted] = terms_.emplace(s, n);
    if (!inserted) {
        it->second += n;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain Chain::operator-() const {
    Chain out(dimension_);
    for (const auto& [s, n] : terms_) out.terms_.emplace(s, -n);
    return out;
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.dimension_ != dimension_)
        throw DimensionMismatch("Chain: cannot add chains of dimensions " +
                                std::to_string(dimension_) + " and " +
                                std::to_string(other.dimension_));
    for (const auto& [s, n] : other.terms_) add_term(s, n);
    return *this;
}

Chain Chain::operator+(const Chain& other) const {
    Chain out = *this;
    out += other;
    return out;
}

Chain Chain::operator-(const Chain& other) const {
    Chain out = *this;
    out += -other;
    return out;
}

Chain operator*(const Int& n, const Chain& c) {
    Chain out(c.dimension());
    if (n == 0) return out;
    for (const auto& [s, m] : c.terms()) out.add_term(s, n * m);
    return out;
}

void GeneratorAssignment::assign(const OrientedSimplex& s, const Int& value) {
    if (s.base.dimension() != dimension_)
        throw DimensionMismatch("GeneratorAssignment: simplex of dimension " +
                                std::to_string(s.base.dimension()) +
                                " assigned in dimension " +
                                std::to_string(dimension_));
    values_[s.base] = s.sign * value;
}

Int GeneratorAssignment::evaluate(const Chain& c) const {
    if (c.dimension() != dimension_)
        throw DimensionMismatch("GeneratorAssignment: chain of dimension " +
                                std::to_string(c.dimension()) +
                                " evaluated in dimension " +
                                std::to_string(dimension_));
    Int total = 0;
    for (const auto& [s, n] : c.terms()) {
        auto it = values_.find(s);
        if (it == values_.end())
            throw MissingGenerator("GeneratorAssignment: no value for " +
                                   simplex_to_string(s));
        total += n * it->second;
    }
    return total;
}

} // namespace simhom
