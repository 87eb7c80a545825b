#pragma once

#include <optional>
#include <vector>

#include "cedual/ce_complex.hpp"
#include "cedual/matrix.hpp"
#include "cedual/rational.hpp"
#include "cedual/series.hpp"

namespace cedual {

/// Lubin–Tate data: [π](T) = T^q + πT over Q, series truncated mod T^N.
struct LTContext {
    unsigned long p = 2;
    unsigned long q = 2;
    Scalar pi = 2;
    unsigned N = 2;

    friend bool operator==(const LTContext&, const LTContext&) = default;
};

/// Validates p prime, q a positive power of p, v_p(pi) = 1, N >= 2.
/// Throws ValidationError otherwise. pi defaults to p.
LTContext make_context(unsigned long p, unsigned long q, unsigned N, std::optional<Scalar> pi = std::nullopt);

using BivariateTruncatedSeries = MultivariateSeries;

TruncatedSeries bracket_pi(const LTContext& ctx);

/// F(X, Y) mod total degree N.
BivariateTruncatedSeries formal_group_law(const LTContext& ctx);

/// [a](T) mod T^N. Throws ValidationError when v_p(a) < 0.
TruncatedSeries bracket_a(const LTContext& ctx, const Scalar& a);

/// f([π](T)).
TruncatedSeries phi_action(const LTContext& ctx, const TruncatedSeries& f);

/// f([u](T)). Throws ValidationError unless v_p(u) = 0.
TruncatedSeries gamma_action(const LTContext& ctx, const TruncatedSeries& f, const Scalar& u);

/// Components (f_0, …, f_{q-1}) of the polynomial f = Σ_i φ(f_i) T^i, deg φ(f_i) T^i < N.
std::vector<TruncatedSeries> psi_components(const LTContext& ctx, const TruncatedSeries& f);

/// f_0 of psi_components. psi_dec(φ(g)) = g whenever deg g < psi_precision(ctx).
TruncatedSeries psi_dec(const LTContext& ctx, const TruncatedSeries& f);

/// ⌈N/q⌉: number of low coefficients on which psi_dec ∘ φ is the identity.
unsigned psi_precision(const LTContext& ctx);

/// (q/π) · psi_dec.
TruncatedSeries psi(const LTContext& ctx, const TruncatedSeries& f);

/// Matrix of φ (resp. γ_u) on A_N = Q[T]/(T^N) in the monomial basis.
Matrix phi_matrix(const LTContext& ctx);
Matrix gamma_matrix(const LTContext& ctx, const Scalar& u);

/// A_N → A_N² → A_N with d⁰x = ((φ-1)x, (γ-1)x), d¹(a, b) = (γ-1)a - (φ-1)b.
/// Throws ValidationError for non-unit u; BrokenInvariantError if d¹d⁰ ≠ 0.
CochainComplex herr_complex(const LTContext& ctx, const Scalar& u);

/// max_i |a_i|_p t^i. Throws ValidationError unless 0 < t < 1. Zero polynomial gives 0.
Scalar gauss_norm(const LaurentPoly& f, const Scalar& t);

/// max(‖f‖_r, ‖f‖_s). Throws ValidationError unless 0 < r <= s < 1.
Scalar interval_norm(const LaurentPoly& f, const Scalar& r, const Scalar& s);

} // namespace cedual
