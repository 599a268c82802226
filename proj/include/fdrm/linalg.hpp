#pragma once

#include "fdrm/gf.hpp"

#include <utility>
#include <vector>

namespace fdrm {

// 1-indexed (row, col) position used by shapes, profiles and JSON.
using Cell = std::pair<int, int>;

// Dense matrix over a finite field, entries stored row-major.
class Matrix {
public:
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);
    static Matrix unit(FieldPtr field, int rows, int cols, int i, int j);  // 1-indexed cell
    static Matrix identity(FieldPtr field, int n);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return data_[r * cols_ + c]; }  // 0-indexed
    void set(int r, int c, int v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(int c) const;
    void add_scaled_inplace(const Matrix& o, int c);

    Matrix transpose() const;
    // Transpose then reverse row and column order; maps a right-justified
    // Ferrers shape onto its conjugate while preserving rank.
    Matrix anti_transpose() const;

    // Copies o into this matrix with its top-left at (row_off, col_off), 0-indexed.
    void paste(const Matrix& o, int row_off, int col_off);

    int rank() const;
    // Reduced row echelon form; pivots are 0-indexed column indices, ascending.
    std::pair<Matrix, std::vector<int>> rref() const;

    // 1-indexed cells carrying nonzero entries, lexicographic order.
    std::vector<Cell> support() const;

    const std::vector<int>& data() const { return data_; }

private:
    FieldPtr field_;
    int rows_;
    int cols_;
    std::vector<int> data_;
};

// Basis of {x : M x = 0}, deterministic (free variables in column order).
std::vector<std::vector<int>> nullspace(const Matrix& M);

// Stacks a on top of b.
Matrix vstack(const Matrix& a, const Matrix& b);

/*
 * Linear space of k x m matrices.  The stored basis is Gauss-reduced over
 * the row-major vectorization: strictly increasing leading positions, each
 * leading entry 1 and the only nonzero entry in its position across the
 * basis.
 */
class MatrixSpace {
public:
    MatrixSpace(FieldPtr field, int rows, int cols);  // zero space
    static MatrixSpace span(FieldPtr field, int rows, int cols, const std::vector<Matrix>& gens);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }

    // Linear combination with coefficient vector of length dim().
    Matrix element(const std::vector<int>& coeffs) const;
    bool contains(const Matrix& M) const;

    // 0-indexed row-major vector positions of the basis leading entries.
    const std::vector<int>& leading_positions() const { return leading_; }

private:
    FieldPtr field_;
    int rows_;
    int cols_;
    std::vector<Matrix> basis_;
    std::vector<int> leading_;
};

/*
 * Walks every element of a space exactly once, mutating one accumulator
 * matrix in place.  Elements are indexed 0 .. q^dim - 1; the coefficient of
 * basis vector i at index t is the field encoding (t / q^i) mod q.  Stepping
 * costs one scaled addition per carried digit, so a full sweep is linear in
 * the number of elements visited.
 */
class SpanOdometer {
public:
    explicit SpanOdometer(const MatrixSpace& S, long long start_index = 0);

    const Matrix& value() const { return value_; }
    const std::vector<int>& digits() const { return digits_; }
    long long index() const { return index_; }

    void step();  // advances to the next index, wrapping at q^dim

private:
    const MatrixSpace* space_;
    std::vector<int> digits_;
    Matrix value_;
    long long index_;
};

// Subspace of V whose elements are supported inside the given 1-indexed cells.
MatrixSpace intersect_with_shape(const MatrixSpace& V, const std::vector<Cell>& allowed);

// Sum of two spaces of identical ambient size.
MatrixSpace space_sum(const MatrixSpace& A, const MatrixSpace& B);

// dim(rowspace(X) ∩ rowspace(Y)) for full-row-rank X, Y with equal column count.
int subspace_intersection_dim(const Matrix& X, const Matrix& Y);

}  // namespace fdrm
