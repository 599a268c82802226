#pragma once

#include "fdrm/shapes.hpp"

namespace fdrm {

struct AnticodeResult {
    MatrixSpace space;
    LineSelection lines;   // optimal deletion lines, |rows|+|cols| = delta-1
    long long tdelta = 0;  // T_delta(P)
};

// Largest space of matrices supported on P whose elements all have rank at
// most delta-1: unit matrices on the cells covered by an optimal selection
// of delta-1 lines.  Dimension |P| - T_delta(P) for every field.
AnticodeResult anticode_max(const Profile& P, int delta, const FieldPtr& f);

// 0-1 matrix marking the leading positions of the stored basis.
Matrix pattern_matrix(const MatrixSpace& A);

struct LineCover {
    int rho = 0;
    LineSelection lines;
};

// Minimum set of rows and columns covering all nonzero entries, via maximum
// bipartite matching.  Among minimum covers the result prefers rows over
// columns, then smaller indices.
LineCover min_line_cover(const Matrix& B);

// rho of the pattern matrix: some element of A has rank at least this.
int rank_reach_lower_bound(const MatrixSpace& A);

}  // namespace fdrm
