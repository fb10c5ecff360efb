#include "bispec/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "bispec/errors.hpp"

namespace bispec {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void RatMatrix::append_row(const RatVector& row) {
    if (row.size() != cols_)
        throw std::invalid_argument("RatMatrix: row of length " + std::to_string(row.size()) + ", expected " +
                                    std::to_string(cols_));
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::multiply(const RatVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix::multiply: dimension mismatch");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

LinearSolution solve_linear(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_linear: right-hand side has " + std::to_string(b.size()) + " entries for " +
                                    std::to_string(a.rows()) + " equations");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    // Augmented working copy.
    RatMatrix m(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
        m(r, cols) = b[r];
    }

    LinearSolution sol;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t k = 0; k <= cols; ++k) std::swap(m(p, k), m(rank, k));
        const Rat inv = m(rank, c).inverse();
        for (std::size_t k = c; k <= cols; ++k) m(rank, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m(r, c).is_zero()) continue;
            const Rat f = m(r, c);
            for (std::size_t k = c; k <= cols; ++k)
                if (!m(rank, k).is_zero()) m(r, k) -= f * m(rank, k);
        }
        sol.pivot_columns.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!m(r, cols).is_zero())
            throw InconsistentSystem("solve_linear: inconsistent system (equation " + std::to_string(r) +
                                     " reduces to 0 = " + m(r, cols).str() + ")");

    RatVector x(cols);
    for (std::size_t i = 0; i < rank; ++i) x[sol.pivot_columns[i]] = m(i, cols);
    sol.particular = std::move(x);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : sol.pivot_columns) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols);
        v[f] = Rat(1);
        for (std::size_t i = 0; i < rank; ++i) v[sol.pivot_columns[i]] = -m(i, f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& a) { return solve_linear(a, RatVector(a.rows())).nullspace; }

Rat determinant(RatMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        const Rat inv = a(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const Rat f = a(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: polynomial matrix is not square");
    if (n == 0) return Poly::constant(Rat(1));

    // Bareiss: after step k every entry below/right is a k+1 minor, so the
    // division by the previous pivot is exact in Q[x].
    Poly prev = Poly::constant(Rat(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return {};
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero()) throw std::logic_error("determinant: inexact Bareiss division");
                m[i][j] = std::move(q);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace bispec
