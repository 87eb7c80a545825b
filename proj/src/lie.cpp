#include "cedual/lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cedual/linalg.hpp"

namespace cedual {

namespace {

std::string describe_pair(std::size_t i, std::size_t j)
{
    std::ostringstream os;
    os << "(" << i + 1 << "," << j + 1 << ")";
    return os.str();
}

bool contains_matrix(const std::vector<Matrix>& list, const Matrix& m)
{
    return std::find(list.begin(), list.end(), m) != list.end();
}

} // namespace

void ValidationReport::merge(const ValidationReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<BracketTerm> terms) : dim_(dim)
{
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> merged;
    for (const auto& t : terms) {
        if (t.i >= t.j) throw std::invalid_argument("LieAlgebra: bracket terms need i < j");
        if (t.j >= dim || t.k >= dim) throw std::invalid_argument("LieAlgebra: bracket index out of range");
        merged[{t.i, t.j, t.k}] += t.coeff;
    }
    for (const auto& [key, coeff] : merged) {
        if (is_zero(coeff)) continue;
        const auto& [i, j, k] = key;
        terms_.push_back({i, j, k, coeff});
    }

    table_.assign(dim_ * dim_, Vector(dim_));
    for (const auto& t : terms_) {
        table_[t.i * dim_ + t.j][t.k] += t.coeff;
        table_[t.j * dim_ + t.i][t.k] -= t.coeff;
    }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_) throw std::out_of_range("LieAlgebra::bracket: index out of range");
    return table_[i * dim_ + j];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("LieAlgebra::bracket: wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (is_zero(y[j])) continue;
            const Scalar s = x[i] * y[j];
            const Vector& b = table_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!is_zero(b[k])) out[k] += s * b[k];
            }
        }
    }
    return out;
}

JacobiReport validate_algebra(const LieAlgebra& l)
{
    JacobiReport report;
    const std::size_t d = l.dim();
    auto basis = [d](std::size_t i) {
        Vector v(d);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                const Vector x = basis(i), y = basis(j), z = basis(k);
                Vector sum = l.bracket(l.bracket(x, y), z);
                const Vector b = l.bracket(l.bracket(y, z), x);
                const Vector c = l.bracket(l.bracket(z, x), y);
                for (std::size_t m = 0; m < d; ++m) sum[m] += b[m] + c[m];
                if (!is_zero(sum)) report.failures.push_back({i + 1, j + 1, k + 1});
            }
    return report;
}

Matrix ad(const LieAlgebra& l, std::size_t i)
{
    if (i >= l.dim()) throw std::out_of_range("ad: basis index out of range");
    std::vector<Vector> columns;
    columns.reserve(l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) columns.push_back(l.bracket(i, j));
    return Matrix::from_columns(columns, l.dim());
}

Vector trace_ad(const LieAlgebra& l)
{
    Vector tr(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) tr[i] += l.bracket(i, j)[j];
    return tr;
}

bool is_unimodular(const LieAlgebra& l) { return is_zero(trace_ad(l)); }

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p)
{
    const std::size_t d = l.dim();
    if (p.rows() != d || !p.square()) throw std::invalid_argument("change_basis: p has wrong shape");
    const Matrix p_inv = inverse(p);
    std::vector<BracketTerm> terms;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const Vector image = p_inv * l.bracket(p.column(i), p.column(j));
            for (std::size_t k = 0; k < d; ++k) {
                if (!is_zero(image[k])) terms.push_back({i, j, k, image[k]});
            }
        }
    return LieAlgebra(d, std::move(terms));
}

Representation::Representation(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action))
{
    if (action_.size() != algebra_.dim()) {
        throw std::invalid_argument("Representation: need one action matrix per basis element");
    }
    for (const auto& m : action_) {
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Representation: action matrix has wrong shape");
    }
}

Representation Representation::trivial(const LieAlgebra& algebra, std::size_t dim)
{
    return Representation(algebra, dim, std::vector<Matrix>(algebra.dim(), Matrix(dim, dim)));
}

Representation Representation::adjoint(const LieAlgebra& algebra)
{
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < algebra.dim(); ++i) action.push_back(ad(algebra, i));
    return Representation(algebra, algebra.dim(), std::move(action));
}

Matrix Representation::act(const Vector& x) const
{
    if (x.size() != action_.size()) throw std::invalid_argument("Representation::act: wrong length");
    Matrix out(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!is_zero(x[i])) out += x[i] * action_[i];
    }
    return out;
}

bool Representation::is_trivial() const
{
    return std::all_of(action_.begin(), action_.end(), [](const Matrix& m) { return m.is_zero(); });
}

ValidationReport validate_rep(const Representation& r)
{
    ValidationReport report;
    const auto& l = r.algebra();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            const Matrix lhs = r.act(l.bracket(i, j));
            const Matrix rhs = r.action(i) * r.action(j) - r.action(j) * r.action(i);
            if (lhs != rhs) {
                report.violations.push_back("representation: rho([e_i,e_j]) != [rho(e_i),rho(e_j)] at " +
                                            describe_pair(i, j));
            }
        }
    return report;
}

Representation twist(const Representation& r)
{
    const Vector tr = trace_ad(r.algebra());
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < tr.size(); ++i) {
        action.push_back(r.action(i) - tr[i] * Matrix::identity(r.dim()));
    }
    return Representation(r.algebra(), r.dim(), std::move(action));
}

Representation contragredient(const Representation& r)
{
    std::vector<Matrix> action;
    for (const auto& m : r.action()) action.push_back(-m.transpose());
    return Representation(r.algebra(), r.dim(), std::move(action));
}

Representation change_basis(const Representation& r, const Matrix& p, const Matrix& q)
{
    const Matrix q_inv = inverse(q);
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < r.algebra().dim(); ++i) {
        action.push_back(q_inv * r.act(p.column(i)) * q);
    }
    return Representation(change_basis(r.algebra(), p), r.dim(), std::move(action));
}

ValidationReport validate_automorphism_pair(const Representation& r, const AutomorphismPair& p)
{
    ValidationReport report;
    const auto& l = r.algebra();
    const std::size_t d = l.dim();
    if (p.alg_map.rows() != d || p.alg_map.cols() != d) {
        report.violations.push_back("automorphism: alg_map has wrong shape");
        return report;
    }
    if (p.mod_map.rows() != r.dim() || p.mod_map.cols() != r.dim()) {
        report.violations.push_back("automorphism: mod_map has wrong shape");
        return report;
    }
    if (is_zero(determinant(p.alg_map))) report.violations.push_back("automorphism: alg_map is singular");
    if (is_zero(determinant(p.mod_map))) report.violations.push_back("automorphism: mod_map is singular");
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const Vector lhs = l.bracket(p.alg_map.column(i), p.alg_map.column(j));
            const Vector rhs = p.alg_map * l.bracket(i, j);
            if (lhs != rhs) {
                report.violations.push_back("automorphism: [A e_i, A e_j] != A [e_i, e_j] at " + describe_pair(i, j));
            }
        }

    const Matrix m_inv = inverse(p.mod_map);
    for (std::size_t i = 0; i < d; ++i) {
        if (p.mod_map * r.action(i) * m_inv != r.act(p.alg_map.column(i))) {
            report.violations.push_back("automorphism: mod_map rho(e_i) mod_map^-1 != rho(A e_i) at i=" +
                                        std::to_string(i + 1));
        }
    }
    return report;
}

ValidationReport validate_group(const FiniteGroupRep& g)
{
    ValidationReport report;
    for (const auto& m : g.elements) {
        if (m.rows() != g.dim || m.cols() != g.dim) {
            report.violations.push_back("group: element has wrong shape");
            return report;
        }
    }
    if (!contains_matrix(g.elements, Matrix::identity(g.dim))) report.violations.push_back("group: identity missing");

    for (std::size_t a = 0; a < g.elements.size(); ++a) {
        if (is_zero(determinant(g.elements[a]))) {
            report.violations.push_back("group: element " + std::to_string(a + 1) + " is singular");
            continue;
        }
        if (!contains_matrix(g.elements, inverse(g.elements[a]))) {
            report.violations.push_back("group: inverse of element " + std::to_string(a + 1) + " missing");
        }
        for (std::size_t b = 0; b < g.elements.size(); ++b) {
            if (!contains_matrix(g.elements, g.elements[a] * g.elements[b])) {
                report.violations.push_back("group: product of elements " + describe_pair(a, b) + " missing");
            }
        }
    }
    return report;
}

} // namespace cedual
