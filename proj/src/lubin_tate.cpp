#include "cedual/lubin_tate.hpp"

#include <algorithm>
#include <string>

#include "cedual/errors.hpp"
#include "cedual/linalg.hpp"

namespace cedual {

namespace {

void require_precision(const LTContext& ctx, const TruncatedSeries& f)
{
    if (f.precision() != ctx.N) throw std::invalid_argument("series precision does not match the context");
}

void require_unit(const LTContext& ctx, const Scalar& u)
{
    if (is_zero(u) || valuation(u, ctx.p) != 0) throw ValidationError("u is not a p-adic unit");
}

// Matrix of f ↦ f(g) on Q[T]/(T^N): column m holds g^m.
Matrix substitution_matrix(const TruncatedSeries& g)
{
    const unsigned n = g.precision();
    Matrix m(n, n);
    TruncatedSeries power = TruncatedSeries::constant(n, 1);
    for (unsigned col = 0; col < n; ++col) {
        for (unsigned row = 0; row < n; ++row) m(row, col) = power[row];
        power = power * g;
    }
    return m;
}

} // namespace

LTContext make_context(unsigned long p, unsigned long q, unsigned N, std::optional<Scalar> pi)
{
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (!is_power_of(q, p)) throw ValidationError("q = " + std::to_string(q) + " is not a positive power of p");
    if (N < 2) throw ValidationError("truncation N must be at least 2");
    LTContext ctx{p, q, pi.value_or(Scalar(static_cast<long>(p))), N};
    if (is_zero(ctx.pi) || valuation(ctx.pi, p) != 1) throw ValidationError("pi must have p-adic valuation 1");
    return ctx;
}

TruncatedSeries bracket_pi(const LTContext& ctx)
{
    TruncatedSeries s = TruncatedSeries::monomial(ctx.N, ctx.pi, 1);
    if (ctx.q < ctx.N) s[ctx.q] += 1;
    return s;
}

BivariateTruncatedSeries formal_group_law(const LTContext& ctx)
{
    const TruncatedSeries p = bracket_pi(ctx);
    const std::vector<MultivariateSeries> p_args{MultivariateSeries::embed(p, 2, 0), MultivariateSeries::embed(p, 2, 1)};

    MultivariateSeries f = MultivariateSeries::variable(2, ctx.N, 0) + MultivariateSeries::variable(2, ctx.N, 1);
    // With F known below degree n, the degree-n part of [π](F) - F([π]X, [π]Y)
    // equals (π^n - π) F_n.
    for (unsigned n = 2; n < ctx.N; ++n) {
        const MultivariateSeries defect = (compose(p, f) - substitute(f, p_args)).homogeneous_part(n);
        const Scalar diag = power(ctx.pi, n) - ctx.pi;
        if (is_zero(diag)) throw BrokenInvariantError("formal_group_law: singular layer");
        f += (1 / diag) * defect;
    }
    return f;
}

TruncatedSeries bracket_a(const LTContext& ctx, const Scalar& a)
{
    if (!is_zero(a) && valuation(a, ctx.p) < 0) throw ValidationError("bracket_a: denominator not prime to p");
    const TruncatedSeries p = bracket_pi(ctx);
    TruncatedSeries s = TruncatedSeries::monomial(ctx.N, a, 1);
    // Same layer structure as the formal group law: coefficient n of
    // [π]∘[a] - [a]∘[π] is (π^n - π) c_n once lower layers are fixed.
    for (unsigned n = 2; n < ctx.N; ++n) {
        const Scalar defect = (compose(p, s) - compose(s, p))[n];
        s[n] = defect / (power(ctx.pi, n) - ctx.pi);
    }
    return s;
}

TruncatedSeries phi_action(const LTContext& ctx, const TruncatedSeries& f)
{
    require_precision(ctx, f);
    return compose(f, bracket_pi(ctx));
}

TruncatedSeries gamma_action(const LTContext& ctx, const TruncatedSeries& f, const Scalar& u)
{
    require_precision(ctx, f);
    require_unit(ctx, u);
    return compose(f, bracket_a(ctx, u));
}

std::vector<TruncatedSeries> psi_components(const LTContext& ctx, const TruncatedSeries& f)
{
    require_precision(ctx, f);
    const unsigned n = ctx.N;
    const TruncatedSeries p = bracket_pi(ctx);

    // Unknown (i, m) multiplies [π]^m T^i, a polynomial with top term T^{qm+i}
    // (coefficient 1). Every degree below N is the top degree of exactly one
    // unknown, so back-substitution from the top solves the system exactly.
    std::vector<TruncatedSeries> pi_powers{TruncatedSeries::constant(n, 1)};
    while (ctx.q * pi_powers.size() < n) pi_powers.push_back(pi_powers.back() * p);

    std::vector<TruncatedSeries> parts(ctx.q, TruncatedSeries(n));
    TruncatedSeries residual = f;
    for (unsigned deg = n; deg > 0; --deg) {
        const unsigned top = deg - 1;
        const Scalar c = residual[top];
        if (is_zero(c)) continue;
        const unsigned m = top / static_cast<unsigned>(ctx.q);
        const unsigned i = top % static_cast<unsigned>(ctx.q);
        parts[i][m] = c;
        const TruncatedSeries& column = pi_powers[m];
        for (unsigned j = 0; j + i < n; ++j) residual[j + i] -= c * column[j];
    }
    return parts;
}

TruncatedSeries psi_dec(const LTContext& ctx, const TruncatedSeries& f) { return psi_components(ctx, f).front(); }

unsigned psi_precision(const LTContext& ctx) { return static_cast<unsigned>((ctx.N + ctx.q - 1) / ctx.q); }

TruncatedSeries psi(const LTContext& ctx, const TruncatedSeries& f)
{
    return (Scalar(static_cast<long>(ctx.q)) / ctx.pi) * psi_dec(ctx, f);
}

Matrix phi_matrix(const LTContext& ctx) { return substitution_matrix(bracket_pi(ctx)); }

Matrix gamma_matrix(const LTContext& ctx, const Scalar& u)
{
    require_unit(ctx, u);
    return substitution_matrix(bracket_a(ctx, u));
}

CochainComplex herr_complex(const LTContext& ctx, const Scalar& u)
{
    const Matrix id = Matrix::identity(ctx.N);
    const Matrix phi = phi_matrix(ctx) - id;
    const Matrix gamma = gamma_matrix(ctx, u) - id;
    if (phi * gamma != gamma * phi) throw BrokenInvariantError("herr_complex: phi and gamma do not commute");
    return CochainComplex({ctx.N, 2 * ctx.N, ctx.N}, {vstack(phi, gamma), hstack(gamma, -phi)});
}

Scalar gauss_norm(const LaurentPoly& f, const Scalar& t)
{
    if (sgn(t) <= 0 || t >= 1) throw ValidationError("gauss_norm: t must lie in (0, 1)");
    Scalar best = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (is_zero(f.coeffs[i])) continue;
        const Scalar term = padic_abs(f.coeffs[i], f.p) * power(t, f.lo + static_cast<long>(i));
        if (term > best) best = term;
    }
    return best;
}

Scalar interval_norm(const LaurentPoly& f, const Scalar& r, const Scalar& s)
{
    if (sgn(r) <= 0 || s >= 1) throw ValidationError("interval_norm: radii must lie in (0, 1)");
    if (r > s) throw ValidationError("interval_norm: r > s");
    return std::max(gauss_norm(f, r), gauss_norm(f, s));
}

} // namespace cedual
