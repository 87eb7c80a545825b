#include "cedual/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "cedual/errors.hpp"

namespace cedual {

Echelon row_reduce(Matrix m)
{
    Echelon e;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (!is_zero(m(r, col))) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) continue;

        if (found != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(found, j), m(pivot_row, j));
        }
        const Scalar inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || is_zero(m(r, col))) continue;
            const Scalar factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!is_zero(m(pivot_row, j))) m(r, j) -= factor * m(pivot_row, j);
            }
        }
        e.pivot_columns.push_back(col);
        ++pivot_row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Matrix kernel_basis(const Matrix& m)
{
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
            v[e.pivot_columns[r]] = -e.reduced(r, free);
        }
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, m.cols());
}

Matrix image_basis(const Matrix& m)
{
    const Echelon e = row_reduce(m);
    std::vector<Vector> cols;
    cols.reserve(e.pivot_columns.size());
    for (auto c : e.pivot_columns) cols.push_back(m.column(c));
    return Matrix::from_columns(cols, m.rows());
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const Echelon e = row_reduce(hstack(m, Matrix::column_vector(b)));
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;

    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
        x[e.pivot_columns[r]] = e.reduced(r, m.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (!m.square()) throw std::domain_error("inverse: matrix is not square");
    const std::size_t n = m.rows();
    const Echelon e = row_reduce(hstack(m, Matrix::identity(n)));
    if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) {
        throw std::domain_error("inverse: matrix is singular");
    }
    return e.reduced.block(0, n, n, n);
}

Scalar determinant_cofactor(const Matrix& m)
{
    if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    Scalar det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        const Scalar term = m(0, j) * determinant_cofactor(minor);
        if (j % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

namespace {

Scalar eliminate_determinant(Matrix m)
{
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!is_zero(m(r, col))) {
                found = r;
                break;
            }
        }
        if (found == n) return Scalar(0);
        if (found != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(found, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = 1 / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m(r, col))) continue;
            const Scalar factor = m(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
        }
    }
    return det;
}

} // namespace

Scalar determinant_elimination(const Matrix& m)
{
    if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
    return eliminate_determinant(m);
}

Scalar determinant(const Matrix& m)
{
    return m.rows() <= 4 ? determinant_cofactor(m) : determinant_elimination(m);
}

Subquotient subquotient(const Matrix& kernel_of, const Matrix& image_of)
{
    if (kernel_of.cols() != image_of.rows()) {
        throw std::invalid_argument("subquotient: maps do not compose");
    }
    if (!(kernel_of * image_of).is_zero()) {
        throw BrokenInvariantError("subquotient: image is not contained in the kernel (d∘d != 0)");
    }

    const std::size_t n = kernel_of.cols();
    SpanBuilder span(n);
    for (std::size_t j = 0; j < image_of.cols(); ++j) span.insert(image_of.column(j));

    const Matrix kernel = kernel_basis(kernel_of);
    std::vector<Vector> reps;
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        Vector v = kernel.column(j);
        if (span.insert(v)) reps.push_back(std::move(v));
    }
    Subquotient q;
    q.dim = reps.size();
    q.representatives = Matrix::from_columns(reps, n);
    return q;
}

Vector SpanBuilder::reduce(Vector v) const
{
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Scalar coeff = v[pivots_[b]];
        if (is_zero(coeff)) continue;
        for (std::size_t j = 0; j < length_; ++j) {
            if (!is_zero(basis_[b][j])) v[j] -= coeff * basis_[b][j];
        }
    }
    return v;
}

bool SpanBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SpanBuilder::insert(const Vector& v)
{
    if (v.size() != length_) throw std::invalid_argument("SpanBuilder: vector has wrong length");
    Vector r = reduce(v);
    std::size_t pivot = length_;
    for (std::size_t j = 0; j < length_; ++j) {
        if (!is_zero(r[j])) {
            pivot = j;
            break;
        }
    }
    if (pivot == length_) return false;

    const Scalar inv = 1 / r[pivot];
    for (auto& x : r) x *= inv;
    // Keep the stored basis fully reduced against the new pivot.
    for (auto& b : basis_) {
        const Scalar coeff = b[pivot];
        if (is_zero(coeff)) continue;
        for (std::size_t j = 0; j < length_; ++j) b[j] -= coeff * r[j];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

} // namespace cedual
