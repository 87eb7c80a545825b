#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cedual/matrix.hpp"

namespace cedual {

/// Reduced row echelon form. Pivot rule: scan columns left to right and take
/// the first row at or below the current pivot row with a nonzero entry;
/// scale the pivot to 1 and clear the rest of its column (Gauss–Jordan).
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel, one per free column of the
/// echelon form, in increasing free-column order.
Matrix kernel_basis(const Matrix& m);

/// The pivot columns of m itself.
Matrix image_basis(const Matrix& m);

/// One exact solution of m x = b, or nullopt when inconsistent.
/// Throws std::invalid_argument if b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws std::domain_error when m is singular or non-square.
Matrix inverse(const Matrix& m);

Scalar determinant(const Matrix& m);
Scalar determinant_cofactor(const Matrix& m);
Scalar determinant_elimination(const Matrix& m);

struct Subquotient {
    std::size_t dim = 0;
    /// Columns are kernel vectors whose classes form a basis of ker/im.
    Matrix representatives;
};

/// ker(kernel_of) / im(image_of). Representatives are chosen greedily among
/// the kernel basis vectors of kernel_of, in order, extending the span of the
/// image. Throws BrokenInvariantError if kernel_of * image_of != 0.
Subquotient subquotient(const Matrix& kernel_of, const Matrix& image_of);

/// Incrementally maintained span of vectors of a fixed length, kept in
/// reduced echelon form so that membership tests are a single reduction.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t length) : length_(length) {}

    /// Adds v; returns true iff v was not already in the span.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t dim() const { return basis_.size(); }

private:
    Vector reduce(Vector v) const;

    std::size_t length_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace cedual
