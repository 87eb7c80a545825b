#include "cedual/ce_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cedual/errors.hpp"
#include "cedual/linalg.hpp"
#include "cedual/signs.hpp"

namespace cedual {

CochainComplex::CochainComplex(std::vector<std::size_t> spaces, std::vector<Matrix> differentials)
    : spaces_(std::move(spaces)), differentials_(std::move(differentials))
{
    const std::size_t expected = spaces_.empty() ? 0 : spaces_.size() - 1;
    if (differentials_.size() != expected) throw std::invalid_argument("CochainComplex: wrong number of differentials");
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        if (differentials_[k].cols() != spaces_[k] || differentials_[k].rows() != spaces_[k + 1]) {
            throw std::invalid_argument("CochainComplex: differential " + std::to_string(k) + " has wrong shape");
        }
    }
    for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
        if (!(differentials_[k + 1] * differentials_[k]).is_zero()) {
            throw BrokenInvariantError("CochainComplex: D_" + std::to_string(k + 1) + " D_" + std::to_string(k) + " != 0");
        }
    }
}

Matrix CochainComplex::differential(std::size_t k) const
{
    if (k < differentials_.size()) return differentials_[k];
    return Matrix(0, spaces_.at(k));
}

Matrix CochainComplex::incoming(std::size_t k) const
{
    if (k == 0) return Matrix(spaces_.at(0), 0);
    return differentials_.at(k - 1);
}

std::size_t ce_index(std::size_t wedge_index, std::size_t module_dim, std::size_t v)
{
    return wedge_index * module_dim + v;
}

namespace {

void add_block(Matrix& target, std::size_t row_block, std::size_t col_block, std::size_t m, const Scalar& coeff,
               const Matrix& block)
{
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) {
            if (!is_zero(block(v, w))) target(ce_index(row_block, m, v), ce_index(col_block, m, w)) += coeff * block(v, w);
        }
}

void add_identity_block(Matrix& target, std::size_t row_block, std::size_t col_block, std::size_t m, const Scalar& coeff)
{
    for (std::size_t v = 0; v < m; ++v) target(ce_index(row_block, m, v), ce_index(col_block, m, v)) += coeff;
}

// D_n : Hom(Λ^n g, V) -> Hom(Λ^{n+1} g, V), evaluated on basis wedges
// x_1 ∧ … ∧ x_{n+1} = e_ψ:
//   df(x) = Σ_i (-1)^{i+1} x_i f(… x̂_i …) + Σ_{i<j} (-1)^{i+j} f([x_i, x_j] ∧ … x̂_i … x̂_j …)
Matrix ce_differential(const Representation& r, unsigned n)
{
    const LieAlgebra& l = r.algebra();
    const auto d = static_cast<unsigned>(l.dim());
    const std::size_t m = r.dim();
    const LexBasis source(d, n);
    const LexBasis target(d, n + 1);
    Matrix diff(target.size() * m, source.size() * m);

    for (std::size_t row = 0; row < target.size(); ++row) {
        const auto& psi = target[row].values();

        for (unsigned i = 0; i <= n; ++i) {
            std::vector<unsigned> rest;
            for (unsigned a = 0; a <= n; ++a) {
                if (a != i) rest.push_back(psi[a]);
            }
            // 1-based position i+1 gives sign (-1)^{(i+1)+1} = (-1)^i.
            const Scalar coeff = i % 2 == 0 ? 1 : -1;
            add_block(diff, row, source.index_of(rest), m, coeff, r.action(psi[i] - 1));
        }

        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = i + 1; j <= n; ++j) {
                const Vector br = l.bracket(psi[i] - 1, psi[j] - 1);
                if (is_zero(br)) continue;
                std::vector<unsigned> rest;
                for (unsigned a = 0; a <= n; ++a) {
                    if (a != i && a != j) rest.push_back(psi[a]);
                }
                // (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
                const int outer = (i + j) % 2 == 0 ? 1 : -1;
                for (unsigned e = 0; e < d; ++e) {
                    if (is_zero(br[e])) continue;
                    const unsigned value = e + 1;
                    if (std::binary_search(rest.begin(), rest.end(), value)) continue;
                    // Moving e_value from the front to its sorted slot passes `pos` factors.
                    const auto pos = static_cast<std::size_t>(std::lower_bound(rest.begin(), rest.end(), value) - rest.begin());
                    std::vector<unsigned> wedge = rest;
                    wedge.insert(wedge.begin() + static_cast<std::ptrdiff_t>(pos), value);
                    const Scalar coeff = (pos % 2 == 0 ? outer : -outer) * br[e];
                    add_identity_block(diff, row, source.index_of(wedge), m, coeff);
                }
            }
    }
    return diff;
}

} // namespace

CochainComplex build_ce(const Representation& r)
{
    const JacobiReport jacobi = validate_algebra(r.algebra());
    if (!jacobi.ok()) throw ValidationError("build_ce: algebra violates the Jacobi identity");
    if (!validate_rep(r).ok()) throw ValidationError("build_ce: action is not a representation");

    const auto d = static_cast<unsigned>(r.algebra().dim());
    std::vector<std::size_t> spaces;
    std::vector<Matrix> differentials;
    for (unsigned n = 0; n <= d; ++n) spaces.push_back(binomial(d, n) * r.dim());
    for (unsigned n = 0; n < d; ++n) differentials.push_back(ce_differential(r, n));
    return CochainComplex(std::move(spaces), std::move(differentials));
}

CohomologyReport cohomology(const CochainComplex& c)
{
    CohomologyReport report;
    for (std::size_t k = 0; k < c.length(); ++k) {
        Subquotient q = subquotient(c.differential(k), c.incoming(k));
        report.dims.push_back(q.dim);
        report.representatives.push_back(std::move(q.representatives));
    }
    return report;
}

long euler_characteristic(const CochainComplex& c)
{
    long chi = 0;
    for (std::size_t k = 0; k < c.length(); ++k) {
        const auto dim = static_cast<long>(c.spaces()[k]);
        chi += k % 2 == 0 ? dim : -dim;
    }
    return chi;
}

long euler_characteristic(const CohomologyReport& h)
{
    long chi = 0;
    for (std::size_t k = 0; k < h.dims.size(); ++k) {
        const auto dim = static_cast<long>(h.dims[k]);
        chi += k % 2 == 0 ? dim : -dim;
    }
    return chi;
}

} // namespace cedual
