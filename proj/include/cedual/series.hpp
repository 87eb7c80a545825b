#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cedual/matrix.hpp"
#include "cedual/rational.hpp"

namespace cedual {

/// Element of Q[T]/(T^N): coefficients of T^0 … T^{N-1}.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// Zero series mod T^N. Throws std::invalid_argument for N = 0.
    explicit TruncatedSeries(unsigned precision);
    /// Shorter coefficient lists are zero-padded; longer ones throw.
    TruncatedSeries(unsigned precision, Vector coeffs);

    static TruncatedSeries constant(unsigned precision, const Scalar& c);
    /// c T^n (zero if n >= precision).
    static TruncatedSeries monomial(unsigned precision, const Scalar& c, unsigned n);

    unsigned precision() const { return static_cast<unsigned>(coeffs_.size()); }
    const Vector& coeffs() const { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    Scalar& operator[](std::size_t i) { return coeffs_[i]; }
    bool is_zero() const;
    /// Degree of the highest nonzero coefficient; -1 for zero.
    int degree() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Scalar& s);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    Vector coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const Scalar& s, TruncatedSeries a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// f(g(T)) mod T^N. Throws std::invalid_argument unless g(0) = 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// f mod T^n for n <= precision, re-embedded with the same precision.
TruncatedSeries truncate(const TruncatedSeries& f, unsigned n);

/// Multivariate series truncated at total degree N (monomials of degree < N kept).
class MultivariateSeries {
public:
    using Exponent = std::vector<unsigned>;

    MultivariateSeries() = default;
    MultivariateSeries(unsigned variables, unsigned precision);

    static MultivariateSeries variable(unsigned variables, unsigned precision, unsigned index);
    static MultivariateSeries constant(unsigned variables, unsigned precision, const Scalar& c);
    /// f(X_index) as a series in `variables` variables.
    static MultivariateSeries embed(const TruncatedSeries& f, unsigned variables, unsigned index);

    unsigned variables() const { return variables_; }
    unsigned precision() const { return precision_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }

    Scalar coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);
    /// The homogeneous part of total degree n.
    MultivariateSeries homogeneous_part(unsigned n) const;
    Scalar constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    MultivariateSeries& operator+=(const MultivariateSeries& o);
    MultivariateSeries& operator-=(const MultivariateSeries& o);
    MultivariateSeries& operator*=(const Scalar& s);

    friend bool operator==(const MultivariateSeries&, const MultivariateSeries&) = default;

private:
    unsigned variables_ = 0;
    unsigned precision_ = 0;
    std::map<Exponent, Scalar> terms_; // nonzero coefficients only
};

MultivariateSeries operator+(MultivariateSeries a, const MultivariateSeries& b);
MultivariateSeries operator-(MultivariateSeries a, const MultivariateSeries& b);
MultivariateSeries operator*(const Scalar& s, MultivariateSeries a);
MultivariateSeries operator*(const MultivariateSeries& a, const MultivariateSeries& b);

/// F(G_1, …, G_n): each G_i must have zero constant term and share a ring.
MultivariateSeries substitute(const MultivariateSeries& f, const std::vector<MultivariateSeries>& args);
/// f(G) for univariate f.
MultivariateSeries compose(const TruncatedSeries& f, const MultivariateSeries& g);
/// Reads a one-variable MultivariateSeries back as a TruncatedSeries.
TruncatedSeries to_univariate(const MultivariateSeries& f);

/// Σ_{i=lo}^{lo+n-1} a_i X^i over Q, read p-adically.
struct LaurentPoly {
    unsigned long p = 2;
    long lo = 0;
    Vector coeffs;

    bool is_zero() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

/// Drops zero coefficients at both ends (zero polynomial: lo = 0, no coeffs).
LaurentPoly normalized(LaurentPoly f);
LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

} // namespace cedual
