#include "cedual/signs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cedual/linalg.hpp"

namespace cedual {

OrderedInjection::OrderedInjection(unsigned d, std::vector<unsigned> values) : d_(d), values_(std::move(values))
{
    if (values_.size() > d_) throw std::invalid_argument("OrderedInjection: k > d");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1 || values_[i] > d_) throw std::invalid_argument("OrderedInjection: value outside [1, d]");
        if (i > 0 && values_[i] <= values_[i - 1]) {
            throw std::invalid_argument("OrderedInjection: values not strictly increasing");
        }
    }
}

bool OrderedInjection::contains(unsigned v) const { return std::binary_search(values_.begin(), values_.end(), v); }

OrderedInjection complement(const OrderedInjection& phi)
{
    std::vector<unsigned> rest;
    rest.reserve(phi.codomain_size() - phi.domain_size());
    for (unsigned v = 1; v <= phi.codomain_size(); ++v) {
        if (!phi.contains(v)) rest.push_back(v);
    }
    return OrderedInjection(phi.codomain_size(), std::move(rest));
}

int sign(const OrderedInjection& phi)
{
    const auto c = complement(phi);
    const unsigned sum = std::accumulate(c.values().begin(), c.values().end(), 0u);
    return sum % 2 == 0 ? 1 : -1;
}

LexBasis::LexBasis(unsigned d, unsigned k) : d_(d), k_(k)
{
    if (k > d) throw std::invalid_argument("LexBasis: k > d");
    std::vector<unsigned> current(k);
    std::iota(current.begin(), current.end(), 1u);
    while (true) {
        injections_.emplace_back(d, current);
        // Advance to the lexicographic successor.
        std::size_t i = k;
        while (i > 0 && current[i - 1] == d - k + i) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
}

std::size_t LexBasis::index_of(const std::vector<unsigned>& values) const
{
    if (values.size() != k_) throw std::invalid_argument("LexBasis::index_of: wrong size");
    // Combinatorial number system: count the injections that precede `values`.
    std::size_t index = 0;
    unsigned prev = 0;
    for (unsigned i = 0; i < k_; ++i) {
        for (unsigned v = prev + 1; v < values[i]; ++v) {
            index += binomial(d_ - v, k_ - i - 1);
        }
        prev = values[i];
    }
    return index;
}

std::size_t LexBasis::index_of(const OrderedInjection& phi) const
{
    if (phi.codomain_size() != d_) throw std::invalid_argument("LexBasis::index_of: wrong codomain");
    return index_of(phi.values());
}

Matrix star_matrix(unsigned d, unsigned k)
{
    const LexBasis source(d, k);
    const LexBasis target(d, d - k);
    Matrix star(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
        const auto comp = complement(source[col]);
        star(target.index_of(comp), col) = sign(comp);
    }
    return star;
}

Matrix exterior_power(const Matrix& a, unsigned k)
{
    if (!a.square()) throw std::invalid_argument("exterior_power: matrix is not square");
    const auto d = static_cast<unsigned>(a.rows());
    const LexBasis basis(d, k);
    Matrix out(basis.size(), basis.size());
    Matrix sub(k, k);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) sub(i, j) = a(basis[r][i] - 1, basis[c][j] - 1);
            out(r, c) = determinant(sub);
        }
    }
    return out;
}

bool check_star_naturality(const Matrix& a, unsigned k)
{
    if (!a.square()) throw std::invalid_argument("check_star_naturality: matrix is not square");
    const auto d = static_cast<unsigned>(a.rows());
    if (k > d) throw std::invalid_argument("check_star_naturality: k > d");
    const Scalar det = determinant(a);
    if (is_zero(det)) throw std::domain_error("check_star_naturality: matrix is singular");

    const Matrix star = star_matrix(d, k);
    const Matrix lhs = det * (exterior_power(inverse(a).transpose(), d - k) * star);
    const Matrix rhs = star * exterior_power(a, k);
    return lhs == rhs;
}

} // namespace cedual
