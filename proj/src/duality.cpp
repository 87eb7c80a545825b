#include "cedual/duality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cedual/errors.hpp"
#include "cedual/linalg.hpp"
#include "cedual/signs.hpp"

namespace cedual {

namespace {

void require_valid(const Representation& r)
{
    if (!validate_algebra(r.algebra()).ok()) throw ValidationError("algebra violates the Jacobi identity");
    const auto report = validate_rep(r);
    if (!report.ok()) throw ValidationError(report.violations.front());
}

// Scalar c with lhs = c · rhs, if one exists; zero matrices match any c and
// leave it unconstrained.
std::optional<Scalar> proportionality(const Matrix& lhs, const Matrix& rhs, std::optional<Scalar> c, bool& consistent)
{
    for (std::size_t i = 0; i < lhs.rows() && consistent; ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            const Scalar& a = lhs(i, j);
            const Scalar& b = rhs(i, j);
            if (is_zero(b)) {
                if (!is_zero(a)) consistent = false;
                continue;
            }
            const Scalar ratio = a / b;
            if (!c) c = ratio;
            else if (*c != ratio) consistent = false;
            if (!consistent) break;
        }
    return c;
}

Matrix action_unchecked(const Matrix& alg_map, const Matrix& mod_map, unsigned k)
{
    return kronecker(exterior_power(inverse(alg_map), k).transpose(), mod_map);
}

} // namespace

Representation dual_module(const Representation& r, DualityMode mode)
{
    return mode == DualityMode::twisted ? contragredient(twist(r)) : contragredient(r);
}

PairingMatrix pairing_matrix(const Representation& r, unsigned k)
{
    const auto d = static_cast<unsigned>(r.algebra().dim());
    if (k > d) throw std::invalid_argument("pairing_matrix: degree exceeds dim g");
    const std::size_t m = r.dim();
    const LexBasis left(d, k);
    const LexBasis right(d, d - k);

    PairingMatrix p;
    p.degree = k;
    p.gram = Matrix(left.size() * m, right.size() * m);
    // a(e_φ)(b(⋆e_φ)) with ⋆e_φ = sgn(φ*) e_{φ*}; V* × V evaluation is the identity in dual bases.
    for (std::size_t phi = 0; phi < left.size(); ++phi) {
        const OrderedInjection comp = complement(left[phi]);
        const std::size_t psi = right.index_of(comp);
        const int s = sign(comp);
        for (std::size_t v = 0; v < m; ++v) p.gram(ce_index(phi, m, v), ce_index(psi, m, v)) = s;
    }
    return p;
}

SignTable derive_sign_table(const Representation& r, DualityMode mode)
{
    require_valid(r);
    const auto d = static_cast<unsigned>(r.algebra().dim());
    const CochainComplex primal = build_ce(r);
    const CochainComplex dual = build_ce(dual_module(r, mode));

    SignTable table;
    for (unsigned k = 0; k < d; ++k) {
        const Matrix lhs = dual.differential(k).transpose() * pairing_matrix(r, k + 1).gram;
        const Matrix rhs = pairing_matrix(r, k).gram * primal.differential(d - k - 1);
        if (lhs == rhs) table.signs.push_back(1);
        else if (lhs == -rhs) table.signs.push_back(-1);
        else {
            throw BrokenInvariantError("derive_sign_table: no uniform chain sign in degree " + std::to_string(k));
        }
    }
    return table;
}

bool DualityReport::ok() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeDuality& x) { return x.ok; });
}

Matrix cohomology_gram(const Representation& r, DualityMode mode, unsigned k)
{
    const auto d = static_cast<unsigned>(r.algebra().dim());
    const CohomologyReport h_primal = cohomology(build_ce(r));
    const CohomologyReport h_dual = cohomology(build_ce(dual_module(r, mode)));
    return h_dual.representatives.at(k).transpose() * pairing_matrix(r, k).gram * h_primal.representatives.at(d - k);
}

DualityReport verify_complex_duality(const Representation& r, bool use_twist)
{
    require_valid(r);
    if (!use_twist && !is_unimodular(r.algebra())) throw HypothesisError("algebra not unimodular");

    DualityReport report;
    report.mode = use_twist ? DualityMode::twisted : DualityMode::untwisted;
    report.sign_table = derive_sign_table(r, report.mode);

    const auto d = static_cast<unsigned>(r.algebra().dim());
    const CohomologyReport h_primal = cohomology(build_ce(r));
    const CohomologyReport h_dual = cohomology(build_ce(dual_module(r, report.mode)));

    for (unsigned k = 0; k <= d; ++k) {
        DegreeDuality deg;
        deg.k = k;
        deg.dim_dual = h_dual.dims[k];
        deg.dim_primal = h_primal.dims[d - k];
        const Matrix gram =
            h_dual.representatives[k].transpose() * pairing_matrix(r, k).gram * h_primal.representatives[d - k];
        deg.gram_rank = rank(gram);
        if (k < d) deg.chain_sign = report.sign_table.signs[k];
        deg.ok = deg.dim_dual == deg.dim_primal && deg.gram_rank == deg.dim_dual;
        report.degrees.push_back(deg);
    }
    return report;
}

Matrix cochain_group_action(const Representation& r, const AutomorphismPair& p, unsigned k)
{
    const auto report = validate_automorphism_pair(r, p);
    if (!report.ok()) throw ValidationError(report.violations.front());
    if (k > r.algebra().dim()) throw std::invalid_argument("cochain_group_action: degree exceeds dim g");
    return action_unchecked(p.alg_map, p.mod_map, k);
}

EquivarianceReport verify_equivariance(const Representation& r, const AutomorphismPair& p)
{
    const auto validation = validate_automorphism_pair(r, p);
    if (!validation.ok()) throw ValidationError(validation.violations.front());

    const auto d = static_cast<unsigned>(r.algebra().dim());
    const Matrix a_inv = inverse(p.alg_map);
    const Matrix m_inv = inverse(p.mod_map);
    // g acts on V* through the contragredient: f ↦ f ∘ g^{-1}.
    const Matrix dual_mod_map = m_inv.transpose();

    EquivarianceReport report;
    report.det = determinant(p.alg_map);
    report.holds = true;
    bool proportional = true;
    std::optional<Scalar> factor;
    for (unsigned k = 0; k <= d; ++k) {
        const Matrix gram = pairing_matrix(r, k).gram;
        const Matrix g_on_dual = action_unchecked(p.alg_map, dual_mod_map, k);
        const Matrix g_inv_on_primal = action_unchecked(a_inv, m_inv, d - k);
        const Matrix lhs = g_on_dual.transpose() * gram; // ⟨g a, b⟩
        const Matrix rhs = gram * g_inv_on_primal;       // ⟨a, g^{-1} b⟩
        if (lhs != rhs) report.holds = false;
        factor = proportionality(lhs, rhs, factor, proportional);
    }
    if (proportional) report.factor = factor.value_or(Scalar(1));
    return report;
}

Matrix invariants(const FiniteGroupRep& g)
{
    Matrix stacked(0, g.dim);
    for (const auto& t : g.elements) stacked = vstack(stacked, t - Matrix::identity(g.dim));
    return kernel_basis(stacked);
}

Coinvariants coinvariants(const FiniteGroupRep& g)
{
    // V_G = V / span{(T - 1) v}.
    SpanBuilder span(g.dim);
    for (const auto& t : g.elements) {
        const Matrix diff = t - Matrix::identity(g.dim);
        for (std::size_t j = 0; j < g.dim; ++j) span.insert(diff.column(j));
    }
    const std::size_t image_dim = span.dim();

    std::vector<Vector> image_cols;
    for (const auto& t : g.elements) {
        const Matrix basis = image_basis(t - Matrix::identity(g.dim));
        for (std::size_t j = 0; j < basis.cols(); ++j) image_cols.push_back(basis.column(j));
    }
    const Matrix image = image_basis(Matrix::from_columns(image_cols, g.dim));

    std::vector<Vector> reps;
    for (std::size_t i = 0; i < g.dim; ++i) {
        Vector e(g.dim);
        e[i] = 1;
        if (span.insert(e)) reps.push_back(std::move(e));
    }

    Coinvariants c;
    c.dim = reps.size();
    c.representatives = Matrix::from_columns(reps, g.dim);
    // [image | reps] is a basis of V; the trailing coordinates give the class.
    const Matrix change = inverse(hstack(image, c.representatives));
    c.projection = change.block(image_dim, 0, c.dim, g.dim);
    return c;
}

bool check_invariants_to_coinvariants(const FiniteGroupRep& g)
{
    const auto report = validate_group(g);
    if (!report.ok()) throw ValidationError(report.violations.front());
    const Matrix inv = invariants(g);
    const Coinvariants co = coinvariants(g);
    if (inv.cols() != co.dim) return false;
    return rank(co.projection * inv) == co.dim;
}

Matrix wedge_pairing_matrix(unsigned d, unsigned k)
{
    const LexBasis left(d, k);
    const LexBasis right(d, d - k);
    Matrix w(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            std::vector<unsigned> seq = left[i].values();
            seq.insert(seq.end(), right[j].values().begin(), right[j].values().end());
            std::vector<unsigned> sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            std::size_t inversions = 0;
            for (std::size_t a = 0; a < seq.size(); ++a)
                for (std::size_t b = a + 1; b < seq.size(); ++b) inversions += seq[a] > seq[b] ? 1 : 0;
            w(i, j) = inversions % 2 == 0 ? 1 : -1;
        }
    return w;
}

WedgePairingCheck wedge_pairing_check(const Representation& r, unsigned k)
{
    if (!r.is_trivial()) throw std::invalid_argument("wedge_pairing_check: action must be trivial");
    const auto d = static_cast<unsigned>(r.algebra().dim());
    if (k > d) throw std::invalid_argument("wedge_pairing_check: degree exceeds dim g");

    const Matrix hazewinkel = pairing_matrix(r, k).gram;
    const Matrix wedge = kronecker(wedge_pairing_matrix(d, k), Matrix::identity(r.dim()));
    WedgePairingCheck check;
    if (hazewinkel == wedge) check = {true, 1};
    else if (hazewinkel == -wedge) check = {true, -1};
    return check;
}

} // namespace cedual
