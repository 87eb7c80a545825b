#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cedual/matrix.hpp"

namespace cedual {

/// One nonzero structure constant: [e_i, e_j] has coefficient `coeff` on e_k.
/// Indices are 0-based with i < j.
struct BracketTerm {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar coeff;

    friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void merge(const ValidationReport& other);
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed basis
/// e_0, …, e_{d-1}. Only [e_i, e_j] for i < j is stored; antisymmetry is implied.
/// Construction does not check Jacobi; call validate_algebra.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Duplicate (i, j, k) entries are summed; zero coefficients dropped.
    /// Throws std::invalid_argument on i >= j or indices out of range.
    LieAlgebra(std::size_t dim, std::vector<BracketTerm> terms);

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<BracketTerm>& terms() const { return terms_; }

    /// [e_i, e_j] as a coordinate vector, for any i, j.
    Vector bracket(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<BracketTerm> terms_;
    /// Dense [e_i, e_j] for all i, j, expanded once from terms_.
    std::vector<Vector> table_;
};

struct JacobiReport {
    /// 1-based (i, j, k) with i < j < k where the Jacobi sum is nonzero.
    std::vector<std::array<std::size_t, 3>> failures;

    bool ok() const { return failures.empty(); }
};

JacobiReport validate_algebra(const LieAlgebra& l);

/// Matrix of ad(e_i) = [e_i, -]. Throws std::out_of_range for a bad index.
Matrix ad(const LieAlgebra& l, std::size_t i);

/// Component i is Tr ad(e_i).
Vector trace_ad(const LieAlgebra& l);

bool is_unimodular(const LieAlgebra& l);

/// Algebra in the new basis e'_i = Σ_a p(a, i) e_a. p must be invertible.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

/// A module V over a Lie algebra, given by the action matrices ρ(e_i).
class Representation {
public:
    Representation() = default;
    /// Throws std::invalid_argument on shape mismatches.
    Representation(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> action);

    static Representation trivial(const LieAlgebra& algebra, std::size_t dim);
    static Representation adjoint(const LieAlgebra& algebra);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }

    /// ρ(x) for x given in coordinates.
    Matrix act(const Vector& x) const;

    bool is_trivial() const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    LieAlgebra algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// Checks ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)] for all i < j.
ValidationReport validate_rep(const Representation& r);

/// x ·tw v = x v − Tr(ad x) v.
Representation twist(const Representation& r);

/// V* with (x · f)(v) = −f(x v), i.e. action matrices −ρ(e_i)^t.
Representation contragredient(const Representation& r);

/// Transports r along algebra basis change p and module basis change q:
/// ρ'(e'_i) = q^{-1} ρ(p e_i) q.
Representation change_basis(const Representation& r, const Matrix& p, const Matrix& q);

/// A group element g seen through A = Ad(g) on the algebra and its action on V.
struct AutomorphismPair {
    Matrix alg_map;
    Matrix mod_map;
};

/// alg_map must be an invertible Lie automorphism and
/// mod_map ρ(x) mod_map^{-1} = ρ(alg_map x) for all basis x.
ValidationReport validate_automorphism_pair(const Representation& r, const AutomorphismPair& p);

/// A finite group acting linearly, listed element by element.
struct FiniteGroupRep {
    std::size_t dim = 0;
    std::vector<Matrix> elements;
};

/// Identity present, closure under products and inverses, shapes consistent.
ValidationReport validate_group(const FiniteGroupRep& g);

} // namespace cedual
