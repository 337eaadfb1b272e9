#include "sct/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace sct {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<QVector> solve(QMatrix a, QVector b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const std::vector<int> pivots = rref(a);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    QVector x(cols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x[static_cast<std::size_t>(pivots[k])] = a[k][cols];
    }
    return x;
}

std::vector<QVector> nullspace(QMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[static_cast<std::size_t>(pivots[k])] = -a[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const QMatrix& basis, const QVector& v) {
    QMatrix m = basis;
    const int base_rank = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == base_rank;
}

bool same_span(const QMatrix& a, const QMatrix& b) {
    QMatrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    const int ra = rank(a);
    const int rb = rank(b);
    return ra == rb && rank(std::move(stacked)) == ra;
}

QMatrix span_intersection(const QMatrix& a, const QMatrix& b) {
    // x in both spans iff x = u A = v B; kernel of [A^T | -B^T] gives (u, v).
    if (a.empty() || b.empty()) return {};
    const std::size_t dim = a[0].size();
    QMatrix sys(dim, QVector(a.size() + b.size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t d = 0; d < dim; ++d) sys[d][i] = a[i][d];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t d = 0; d < dim; ++d) sys[d][a.size() + i] = -b[i][d];
    }
    QMatrix result;
    for (const QVector& k : nullspace(std::move(sys))) {
        QVector x(dim, Rational(0));
        bool nonzero = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k[i] == 0) continue;
            for (std::size_t d = 0; d < dim; ++d) x[d] += k[i] * a[i][d];
        }
        for (const Rational& c : x) {
            if (c != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) result.push_back(std::move(x));
    }
    // Reduce to an independent basis.
    if (!result.empty()) {
        QMatrix reduced = result;
        const std::vector<int> pivots = rref(reduced);
        reduced.resize(pivots.size());
        return reduced;
    }
    return result;
}

LinearSolver::LinearSolver(const QMatrix& e) {
    rows_ = static_cast<int>(e.size());
    cols_ = rows_ ? static_cast<int>(e[0].size()) : 0;
    // Row-reduce [E | I], keeping the transform side.
    QMatrix aug(static_cast<std::size_t>(rows_),
                QVector(static_cast<std::size_t>(cols_ + rows_), Rational(0)));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_ + i)] = 1;
    }
    std::size_t r = 0;
    pivot_row_.assign(static_cast<std::size_t>(cols_), -1);
    for (int c = 0; c < cols_ && r < static_cast<std::size_t>(rows_); ++c) {
        std::size_t piv = r;
        while (piv < static_cast<std::size_t>(rows_) && aug[piv][static_cast<std::size_t>(c)] == 0) ++piv;
        if (piv == static_cast<std::size_t>(rows_)) continue;
        std::swap(aug[r], aug[piv]);
        const Rational inv = 1 / aug[r][static_cast<std::size_t>(c)];
        for (auto& x : aug[r]) x *= inv;
        for (std::size_t i = 0; i < static_cast<std::size_t>(rows_); ++i) {
            if (i == r || aug[i][static_cast<std::size_t>(c)] == 0) continue;
            const Rational f = aug[i][static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < aug[i].size(); ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_row_[static_cast<std::size_t>(c)] = static_cast<int>(r);
        ++r;
    }
    for (int c = 0; c < cols_; ++c) {
        if (pivot_row_[static_cast<std::size_t>(c)] < 0) {
            throw std::logic_error("LinearSolver requires full column rank");
        }
    }
    is_pivot_row_.assign(static_cast<std::size_t>(rows_), false);
    for (int c = 0; c < cols_; ++c) is_pivot_row_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(c)])] = true;
    transform_.assign(static_cast<std::size_t>(rows_), QVector(static_cast<std::size_t>(rows_), Rational(0)));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < rows_; ++j) {
            transform_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_ + j)];
        }
    }
}

std::optional<QVector> LinearSolver::solve(const QVector& b) const {
    assert(static_cast<int>(b.size()) == rows_);
    QVector y(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (int j = 0; j < rows_; ++j) {
            if (transform_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                acc += transform_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
            }
        }
        y[static_cast<std::size_t>(i)] = std::move(acc);
    }
    for (int i = 0; i < rows_; ++i) {
        if (!is_pivot_row_[static_cast<std::size_t>(i)] && y[static_cast<std::size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    QVector x(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) {
        x[static_cast<std::size_t>(c)] = y[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(c)])];
    }
    return x;
}

}  // namespace sct
