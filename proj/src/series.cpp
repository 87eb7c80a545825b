#include "cedual/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cedual {

namespace {

void require_same_precision(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.precision() != b.precision()) throw std::invalid_argument("TruncatedSeries: precision mismatch");
}

void require_same_ring(const MultivariateSeries& a, const MultivariateSeries& b)
{
    if (a.variables() != b.variables() || a.precision() != b.precision()) {
        throw std::invalid_argument("MultivariateSeries: ring mismatch");
    }
}

unsigned total_degree(const MultivariateSeries::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

} // namespace

TruncatedSeries::TruncatedSeries(unsigned precision) : coeffs_(precision)
{
    if (precision == 0) throw std::invalid_argument("TruncatedSeries: precision must be positive");
}

TruncatedSeries::TruncatedSeries(unsigned precision, Vector coeffs) : TruncatedSeries(precision)
{
    if (coeffs.size() > precision) throw std::invalid_argument("TruncatedSeries: too many coefficients");
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(unsigned precision, const Scalar& c) { return monomial(precision, c, 0); }

TruncatedSeries TruncatedSeries::monomial(unsigned precision, const Scalar& c, unsigned n)
{
    TruncatedSeries s(precision);
    if (n < precision) s.coeffs_[n] = c;
    return s;
}

bool TruncatedSeries::is_zero() const { return cedual::is_zero(coeffs_); }

int TruncatedSeries::degree() const
{
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        if (!cedual::is_zero(coeffs_[i - 1])) return static_cast<int>(i - 1);
    }
    return -1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_precision(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    require_same_precision(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& s)
{
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(const Scalar& s, TruncatedSeries a) { return a *= s; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_precision(a, b);
    const unsigned n = a.precision();
    TruncatedSeries c(n);
    for (unsigned i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (unsigned j = 0; i + j < n; ++j) {
            if (!is_zero(b[j])) c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g)
{
    require_same_precision(f, g);
    if (!is_zero(g[0])) throw std::invalid_argument("compose: inner series needs zero constant term");
    // Horner: f_0 + g (f_1 + g (f_2 + …)).
    const unsigned n = f.precision();
    TruncatedSeries acc(n);
    for (unsigned i = n; i > 0; --i) {
        acc = acc * g;
        acc[0] += f[i - 1];
    }
    return acc;
}

TruncatedSeries truncate(const TruncatedSeries& f, unsigned n)
{
    TruncatedSeries out = f;
    for (unsigned i = n; i < out.precision(); ++i) out[i] = 0;
    return out;
}

MultivariateSeries::MultivariateSeries(unsigned variables, unsigned precision)
    : variables_(variables), precision_(precision)
{
    if (precision == 0) throw std::invalid_argument("MultivariateSeries: precision must be positive");
}

MultivariateSeries MultivariateSeries::variable(unsigned variables, unsigned precision, unsigned index)
{
    if (index >= variables) throw std::out_of_range("MultivariateSeries::variable: index out of range");
    MultivariateSeries s(variables, precision);
    Exponent e(variables, 0);
    e[index] = 1;
    s.add_term(e, 1);
    return s;
}

MultivariateSeries MultivariateSeries::constant(unsigned variables, unsigned precision, const Scalar& c)
{
    MultivariateSeries s(variables, precision);
    s.add_term(Exponent(variables, 0), c);
    return s;
}

MultivariateSeries MultivariateSeries::embed(const TruncatedSeries& f, unsigned variables, unsigned index)
{
    if (index >= variables) throw std::out_of_range("MultivariateSeries::embed: index out of range");
    MultivariateSeries s(variables, f.precision());
    for (unsigned i = 0; i < f.precision(); ++i) {
        Exponent e(variables, 0);
        e[index] = i;
        s.add_term(e, f[i]);
    }
    return s;
}

Scalar MultivariateSeries::coeff(const Exponent& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultivariateSeries::add_term(const Exponent& e, const Scalar& c)
{
    if (e.size() != variables_) throw std::invalid_argument("MultivariateSeries: exponent has wrong arity");
    if (cedual::is_zero(c) || total_degree(e) >= precision_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (cedual::is_zero(it->second)) terms_.erase(it);
    }
}

MultivariateSeries MultivariateSeries::homogeneous_part(unsigned n) const
{
    MultivariateSeries out(variables_, precision_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == n) out.terms_.emplace(e, c);
    }
    return out;
}

Scalar MultivariateSeries::constant_term() const { return coeff(Exponent(variables_, 0)); }

MultivariateSeries& MultivariateSeries::operator+=(const MultivariateSeries& o)
{
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultivariateSeries& MultivariateSeries::operator-=(const MultivariateSeries& o)
{
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultivariateSeries& MultivariateSeries::operator*=(const Scalar& s)
{
    if (cedual::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultivariateSeries operator+(MultivariateSeries a, const MultivariateSeries& b) { return a += b; }
MultivariateSeries operator-(MultivariateSeries a, const MultivariateSeries& b) { return a -= b; }
MultivariateSeries operator*(const Scalar& s, MultivariateSeries a) { return a *= s; }

MultivariateSeries operator*(const MultivariateSeries& a, const MultivariateSeries& b)
{
    require_same_ring(a, b);
    MultivariateSeries c(a.variables(), a.precision());
    MultivariateSeries::Exponent e(a.variables());
    for (const auto& [ea, ca] : a.terms()) {
        const unsigned da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) >= a.precision()) continue;
            for (unsigned v = 0; v < a.variables(); ++v) e[v] = ea[v] + eb[v];
            c.add_term(e, ca * cb);
        }
    }
    return c;
}

MultivariateSeries substitute(const MultivariateSeries& f, const std::vector<MultivariateSeries>& args)
{
    if (args.size() != f.variables()) throw std::invalid_argument("substitute: need one argument per variable");
    if (args.empty()) return f;
    const unsigned vars = args.front().variables();
    const unsigned prec = args.front().precision();
    for (const auto& g : args) {
        if (g.variables() != vars || g.precision() != prec) throw std::invalid_argument("substitute: arguments differ in ring");
        if (!is_zero(g.constant_term())) throw std::invalid_argument("substitute: arguments need zero constant term");
    }

    // Powers args[v]^j for j < prec; higher powers vanish (zero constant term).
    std::vector<std::vector<MultivariateSeries>> powers(args.size());
    for (std::size_t v = 0; v < args.size(); ++v) {
        powers[v].push_back(MultivariateSeries::constant(vars, prec, 1));
        for (unsigned j = 1; j < prec; ++j) powers[v].push_back(powers[v].back() * args[v]);
    }

    MultivariateSeries out(vars, prec);
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) >= prec) continue;
        MultivariateSeries term = MultivariateSeries::constant(vars, prec, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] > 0) term = term * powers[v][e[v]];
        }
        out += term;
    }
    return out;
}

MultivariateSeries compose(const TruncatedSeries& f, const MultivariateSeries& g)
{
    return substitute(MultivariateSeries::embed(f, 1, 0), {g});
}

TruncatedSeries to_univariate(const MultivariateSeries& f)
{
    if (f.variables() != 1) throw std::invalid_argument("to_univariate: series has more than one variable");
    TruncatedSeries s(f.precision());
    for (const auto& [e, c] : f.terms()) s[e[0]] = c;
    return s;
}

bool LaurentPoly::is_zero() const { return cedual::is_zero(coeffs); }

LaurentPoly normalized(LaurentPoly f)
{
    auto first = std::find_if(f.coeffs.begin(), f.coeffs.end(), [](const Scalar& c) { return !is_zero(c); });
    if (first == f.coeffs.end()) return LaurentPoly{f.p, 0, {}};
    auto last = std::find_if(f.coeffs.rbegin(), f.coeffs.rend(), [](const Scalar& c) { return !is_zero(c); }).base();
    f.lo += first - f.coeffs.begin();
    f.coeffs = Vector(first, last);
    return f;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.p != b.p) throw std::invalid_argument("LaurentPoly: prime mismatch");
    if (a.coeffs.empty()) return normalized(b);
    if (b.coeffs.empty()) return normalized(a);
    const long lo = std::min(a.lo, b.lo);
    const long hi = std::max(a.lo + static_cast<long>(a.coeffs.size()), b.lo + static_cast<long>(b.coeffs.size()));
    LaurentPoly out{a.p, lo, Vector(static_cast<std::size_t>(hi - lo))};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[static_cast<std::size_t>(a.lo - lo) + i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[static_cast<std::size_t>(b.lo - lo) + i] += b.coeffs[i];
    return normalized(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.p != b.p) throw std::invalid_argument("LaurentPoly: prime mismatch");
    if (a.coeffs.empty() || b.coeffs.empty()) return LaurentPoly{a.p, 0, {}};
    LaurentPoly out{a.p, a.lo + b.lo, Vector(a.coeffs.size() + b.coeffs.size() - 1)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return normalized(std::move(out));
}

} // namespace cedual
