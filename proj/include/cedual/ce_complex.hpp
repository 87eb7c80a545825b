#pragma once

#include <cstddef>
#include <vector>

#include "cedual/lie.hpp"
#include "cedual/matrix.hpp"

namespace cedual {

/// A bounded cochain complex 0 -> C^0 -> C^1 -> … -> C^{n} -> 0 of finite
/// dimensional spaces, with D_k : C^k -> C^{k+1} stored as dim C^{k+1} × dim C^k.
class CochainComplex {
public:
    CochainComplex() = default;
    /// Throws std::invalid_argument on shape mismatches and
    /// BrokenInvariantError if some D_{k+1} D_k is nonzero.
    CochainComplex(std::vector<std::size_t> spaces, std::vector<Matrix> differentials);

    std::size_t length() const { return spaces_.size(); }
    const std::vector<std::size_t>& spaces() const { return spaces_; }
    const std::vector<Matrix>& differentials() const { return differentials_; }

    /// D_k, or the zero map into/out of the zero space at the ends.
    Matrix differential(std::size_t k) const;
    /// D_{k-1}, with the zero map from the zero space for k = 0.
    Matrix incoming(std::size_t k) const;

private:
    std::vector<std::size_t> spaces_;
    std::vector<Matrix> differentials_;
};

struct CohomologyReport {
    std::vector<std::size_t> dims;
    /// Per degree: columns are cocycles whose classes form a basis of H^k.
    std::vector<Matrix> representatives;
};

/// Hom(Λ^n g, V) coordinatized as (φ in LexBasis order) × (V coordinate),
/// with φ-blocks outermost: index = lex_index(φ) · dim V + v.
std::size_t ce_index(std::size_t wedge_index, std::size_t module_dim, std::size_t v);

/// The Chevalley–Eilenberg complex of r, degrees 0 … dim g.
/// Throws ValidationError if r (or its algebra) fails validation.
CochainComplex build_ce(const Representation& r);

CohomologyReport cohomology(const CochainComplex& c);

long euler_characteristic(const CochainComplex& c);
long euler_characteristic(const CohomologyReport& h);

} // namespace cedual
