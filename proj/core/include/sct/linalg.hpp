#pragma once

#include <optional>
#include <vector>

#include "sct/rational.hpp"

namespace sct {

/// Dense exact rational matrix, row major.
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

/// Reduces `m` to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

/// Solves A x = b; nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero.
std::optional<QVector> solve(QMatrix a, QVector b);

/// Basis of the kernel of A (one vector per free column).
std::vector<QVector> nullspace(QMatrix a);

/// True iff v lies in the row span of `basis`.
bool in_span(const QMatrix& basis, const QVector& v);

/// True iff the two row spans coincide.
bool same_span(const QMatrix& a, const QMatrix& b);

/// Basis (possibly empty) of the intersection of the two row spans.
QMatrix span_intersection(const QMatrix& a, const QMatrix& b);

/// Caches the elimination of a fixed coefficient matrix E so that
/// E x = b can be answered repeatedly for varying b.
class LinearSolver {
public:
    explicit LinearSolver(const QMatrix& e);

    /// Solution of E x = b, or nullopt if inconsistent. E must have full
    /// column rank (asserted at construction).
    std::optional<QVector> solve(const QVector& b) const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    QMatrix transform_;          // U with U*E in RREF
    std::vector<int> pivot_row_; // column j solved from row pivot_row_[j]
    std::vector<bool> is_pivot_row_;
};

}  // namespace sct
