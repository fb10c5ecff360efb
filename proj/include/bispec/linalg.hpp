#ifndef BISPEC_LINALG_HPP
#define BISPEC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix of rationals. The column count is kept explicitly so
/// that systems with zero equations still know their number of unknowns.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Builds from nested rows; throws std::invalid_argument if they are ragged.
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const RatVector& row);
    RatVector row(std::size_t r) const;
    RatVector multiply(const RatVector& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct LinearSolution {
    /// Free variables set to zero. Absent only for a homogeneous solve that did not ask for one.
    std::optional<RatVector> particular;
    /// Reduced-row-echelon free-variable basis: one vector per non-pivot column,
    /// with a 1 in that column and zeros in every other free column.
    std::vector<RatVector> nullspace;
    std::vector<std::size_t> pivot_columns;
};

/// Exact Gauss-Jordan elimination of A x = b.
///
/// Pivoting is deterministic: columns are scanned left to right and the first
/// row (from the current one down) with a nonzero entry is taken. Throws
/// InconsistentSystem when no solution exists.
LinearSolution solve_linear(const RatMatrix& a, const RatVector& b);

/// Nullspace basis of A (same canonical form as solve_linear).
std::vector<RatVector> nullspace(const RatMatrix& a);

Rat determinant(RatMatrix a);

/// Determinant over Q[x] by fraction-free (Bareiss) elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

}  // namespace bispec

#endif
