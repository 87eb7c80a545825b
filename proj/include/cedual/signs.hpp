#pragma once

#include <cstddef>
#include <vector>

#include "cedual/matrix.hpp"

namespace cedual {

/// A strictly increasing map [k] -> [d], stored by its 1-based values.
/// Indexes the wedge basis element e_φ = e_{φ(1)} ∧ … ∧ e_{φ(k)}.
class OrderedInjection {
public:
    /// Throws std::invalid_argument unless values are strictly increasing in [1, d].
    OrderedInjection(unsigned d, std::vector<unsigned> values);

    unsigned domain_size() const { return static_cast<unsigned>(values_.size()); }
    unsigned codomain_size() const { return d_; }
    const std::vector<unsigned>& values() const { return values_; }
    unsigned operator[](std::size_t i) const { return values_[i]; }
    bool contains(unsigned v) const;

    friend bool operator==(const OrderedInjection&, const OrderedInjection&) = default;

private:
    unsigned d_;
    std::vector<unsigned> values_;
};

/// The unique ordered injection [d-k] -> [d] whose image is the complement of phi's.
OrderedInjection complement(const OrderedInjection& phi);

/// (-1)^{sum of the complement's values}.
int sign(const OrderedInjection& phi);

/// All ordered injections [k] -> [d] in lexicographic order of their values.
/// This order is the coordinate order for Λ^k everywhere in the library.
class LexBasis {
public:
    LexBasis(unsigned d, unsigned k);

    unsigned d() const { return d_; }
    unsigned k() const { return k_; }
    std::size_t size() const { return injections_.size(); }
    const OrderedInjection& operator[](std::size_t i) const { return injections_[i]; }
    auto begin() const { return injections_.begin(); }
    auto end() const { return injections_.end(); }

    /// Position of phi; throws std::invalid_argument if phi has the wrong shape.
    std::size_t index_of(const OrderedInjection& phi) const;
    std::size_t index_of(const std::vector<unsigned>& values) const;

private:
    unsigned d_;
    unsigned k_;
    std::vector<OrderedInjection> injections_;
};

/// Matrix of ⋆ : Λ^k -> Λ^{d-k}, ⋆e_φ = sgn(φ*) e_{φ*}, in LexBasis coordinates.
Matrix star_matrix(unsigned d, unsigned k);

/// Λ^k a: the (φ, ψ) entry is the minor of a on rows φ and columns ψ.
/// Throws std::invalid_argument for non-square input or k > d.
Matrix exterior_power(const Matrix& a, unsigned k);

/// Checks det(a) · Λ^{d-k}((a^{-1})^t) · ⋆ = ⋆ · Λ^k(a) exactly.
/// Throws std::domain_error when a is singular.
bool check_star_naturality(const Matrix& a, unsigned k);

} // namespace cedual
