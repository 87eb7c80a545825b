#pragma once

// Independent reference computations. Nothing here calls into the library's
// linear algebra or sign code; only the value types are shared.

#include <cstddef>
#include <vector>

#include "cedual/lie.hpp"
#include "cedual/matrix.hpp"
#include "cedual/series.hpp"

namespace oracle {

using cedual::Matrix;
using cedual::Representation;
using cedual::Scalar;

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row by row.
std::size_t rank(const Matrix& m);

/// Determinant by the Leibniz permutation sum.
Scalar leibniz_det(const Matrix& m);

/// Sorted k-subsets of {1..d}, lexicographic.
std::vector<std::vector<unsigned>> subsets(unsigned d, unsigned k);

/// Λ^k a entry by entry, each minor by leibniz_det.
Matrix exterior_power(const Matrix& a, unsigned k);

/// D_n of the Chevalley–Eilenberg complex, evaluating cochains on arbitrary
/// ordered tuples through their antisymmetric extension.
Matrix ce_differential(const Representation& r, unsigned n);

/// dim H^k from the oracle differentials and oracle ranks.
std::vector<std::size_t> betti(const Representation& r);

/// (1 + T)^a - 1 mod T^N, a with nonnegative 2-adic valuation.
cedual::TruncatedSeries binomial_series(const Scalar& a, unsigned N);

/// Max over the support of |a_i|_p t^i, maximized by direct comparison of
/// p^{-v} t^i computed with integer powers.
Scalar gauss_norm(const cedual::LaurentPoly& f, const Scalar& t);

} // namespace oracle
