#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cedual/ce_complex.hpp"
#include "cedual/lie.hpp"
#include "cedual/matrix.hpp"

namespace cedual {

/// Which dual module is paired against C•(g, V).
///   untwisted: C^k(g, V*), requires Tr ad ≡ 0
///   twisted:   C^k(g, (V^tw)*), no hypothesis
enum class DualityMode { untwisted, twisted };

/// The dual-side module for the given mode.
Representation dual_module(const Representation& r, DualityMode mode);

/// Gram matrix of ⟨a, b⟩ = Σ_φ a(e_φ)(b(⋆e_φ)) with a ∈ C^k(g, V*) indexing rows
/// and b ∈ C^{d-k}(g, V) indexing columns, in build_ce coordinates.
struct PairingMatrix {
    unsigned degree = 0;
    Matrix gram;
};

/// Throws std::invalid_argument when k > dim g.
PairingMatrix pairing_matrix(const Representation& r, unsigned k);

/// ε_k with ⟨d a, b⟩ = ε_k ⟨a, d b⟩ for a ∈ C^k(dual), b ∈ C^{d-k-1}(V), k = 0 … d-1.
struct SignTable {
    std::vector<int> signs;
};

/// Derives ε_k from the full Gram identity D'_k^t G_{k+1} = ε_k G_k D_{d-k-1}.
/// Degrees where both sides vanish get ε_k = +1. Throws BrokenInvariantError
/// when no uniform sign exists.
SignTable derive_sign_table(const Representation& r, DualityMode mode = DualityMode::untwisted);

struct DegreeDuality {
    unsigned k = 0;
    std::size_t dim_dual = 0;   // dim H^k(g, dual module)
    std::size_t dim_primal = 0; // dim H^{d-k}(g, V)
    std::size_t gram_rank = 0;  // rank of the pairing on cohomology representatives
    std::optional<int> chain_sign; // ε_k; empty in the top degree
    bool ok = false;
};

struct DualityReport {
    DualityMode mode = DualityMode::untwisted;
    SignTable sign_table;
    std::vector<DegreeDuality> degrees;

    bool ok() const;
};

/// Throws HypothesisError in untwisted mode when g is not unimodular and
/// ValidationError when r fails validation.
DualityReport verify_complex_duality(const Representation& r, bool use_twist);

/// Gram matrix of the induced pairing H^k(dual) × H^{d-k}(V) on the chosen
/// representatives (rows: dual classes, columns: primal classes).
Matrix cohomology_gram(const Representation& r, DualityMode mode, unsigned k);

/// (g·x)(e_φ) = mod_map · x(alg_map^{-1} e_φ) on C^k(g, V) coordinates.
/// Throws ValidationError if the pair is not compatible with r.
Matrix cochain_group_action(const Representation& r, const AutomorphismPair& p, unsigned k);

struct EquivarianceReport {
    bool holds = false;
    Scalar det;
    /// c with ⟨g a, b⟩ = c · ⟨a, g^{-1} b⟩ on every basis pair in every degree,
    /// when such a uniform scalar exists.
    std::optional<Scalar> factor;
};

/// Compares ⟨g a, b⟩ and ⟨a, g^{-1} b⟩ for the untwisted pairing in all degrees.
/// A failure with det ≠ 1 is reported as data. Throws ValidationError for an invalid pair.
EquivarianceReport verify_equivariance(const Representation& r, const AutomorphismPair& p);

/// Basis (columns) of V^G.
Matrix invariants(const FiniteGroupRep& g);

struct Coinvariants {
    std::size_t dim = 0;
    /// Columns: vectors of V whose classes form a basis of V_G.
    Matrix representatives;
    /// dim × dim V: coordinates of the class of v in that basis.
    Matrix projection;
};

Coinvariants coinvariants(const FiniteGroupRep& g);

/// True iff V^G -> V -> V_G is an isomorphism. Throws ValidationError for an invalid group.
bool check_invariants_to_coinvariants(const FiniteGroupRep& g);

/// Λ^k × Λ^{d-k} -> K, e_φ ∧ e_ψ = w(φ, ψ) e_1 ∧ … ∧ e_d, computed by counting
/// inversions of the concatenated index sequence.
Matrix wedge_pairing_matrix(unsigned d, unsigned k);

struct WedgePairingCheck {
    bool agrees = false;
    /// s with pairing_matrix = s · (wedge pairing ⊗ id_V), when it exists.
    int sign = 0;
};

/// Throws std::invalid_argument when r's action is not trivial or k > dim g.
WedgePairingCheck wedge_pairing_check(const Representation& r, unsigned k);

} // namespace cedual
