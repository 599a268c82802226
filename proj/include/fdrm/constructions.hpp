#pragma once

#include "fdrm/shapes.hpp"

#include <string>

namespace fdrm {

enum class BasisOrder { ascending, descending };

// k x k matrix over the base field describing multiplication by beta on
// GF(q^k): row j holds the coordinates of beta * b_j over the basis
// (b_1, ..., b_k), which is {1, alpha, ..., alpha^{k-1}} ascending or its
// reverse descending.
Matrix mult_matrix(const Extension& ext, int beta, BasisOrder order);

// Space of k x m matrices (k <= m) in which every nonzero element has rank
// at least delta; dimension m(k - delta + 1).  Linearized-polynomial
// evaluation construction over GF(q^m).
MatrixSpace mrd(const FieldPtr& f, int k, int m, int delta);

// Generator matrix of a length-n linear code with minimum distance delta
// and dimension n - delta + 1.  Polynomial evaluation at the n smallest
// field elements; for q = n - 1 the coefficient of x^{n-delta} is appended
// as an extra coordinate.  delta = 1 gives the identity for any field.
Matrix mds_code(const FieldPtr& f, int n, int delta);

// MRD space cut down to the diagram: when r_{delta-1} >= k the cut happens
// inside [r_{delta-1}^{delta-1}, r_delta, ..., r_k] and the dimension is
// exactly sum_{i >= delta} r_i; otherwise the full diagram is used and only
// a lower bound |F| - m(delta - 1) is guaranteed.
MatrixSpace intersect_construction(const FerrersDiagram& F, int delta, const FieldPtr& f);

// One MDS code per diagonal of cardinality >= delta, each codeword written
// along its diagonal.  Dimension sum (|D| - delta + 1) over used diagonals;
// diagonals needing a field larger than q are skipped.
MatrixSpace diagonal_construction(const FerrersDiagram& F, int delta, const FieldPtr& f);

// Square diagram F (k x k) with t = T_k(F) satisfying k/2 <= t <= k - 1:
// best of the block-diagonal construction (dimension floor(k/2)) and the
// multiplication-by-GF(q^k) construction (dimension 2t - k + 1), both with
// shape [k^t, t^{k-t}].  method_out, when given, receives the winning tag.
MatrixSpace square_construction(const FerrersDiagram& F, const FieldPtr& f,
                                std::string* method_out = nullptr);

// Places the i-th basis elements of A and B simultaneously into disjoint
// row and column ranges of a k x m box (top-left corners 1-indexed).  Every
// nonzero element has rank >= deltaA + deltaB; dimension min(dim A, dim B).
MatrixSpace block_combine(const MatrixSpace& A, const MatrixSpace& B, int row_a, int col_a,
                          int row_b, int col_b, int k, int m);

struct ConstructionResult {
    MatrixSpace space;
    std::string method;  // mrd|intersect|teo1|diagonal|block_diag|field_mul|block_combine|auto-composite
    long long tdelta = 0;
    bool attains_bound = false;
    bool transposed = false;
};

// Tries every applicable construction on F and on its transpose and keeps
// the highest dimension; ties go to provably bound-attaining routes first.
ConstructionResult construct_auto(const FerrersDiagram& F, int delta, const FieldPtr& f);

}  // namespace fdrm
