#pragma once

#include "fdrm/linalg.hpp"

#include <string>
#include <vector>

namespace fdrm {

/*
 * Right-justified Ferrers diagram inside a k x m box: row i carries r_i
 * cells in the rightmost columns, r_1 >= r_2 >= ... >= r_k >= 0.
 * Zero-cardinality rows are kept so the bounding box is explicit.
 */
class FerrersDiagram {
public:
    FerrersDiagram(std::vector<int> row_cards, int m);
    // Text form "6,3,2,2@6"; the "@m" suffix defaults to r_1.
    static FerrersDiagram parse(const std::string& text);

    int k() const { return (int)rows_.size(); }
    int m() const { return m_; }
    const std::vector<int>& row_cards() const { return rows_; }
    long long size() const;

    bool contains_cell(int i, int j) const;  // 1-indexed
    std::vector<Cell> cells() const;

    // Conjugate diagram in the m x k box.
    FerrersDiagram transpose() const;
    // Cell-wise containment of sub (same column count; shorter sub is padded
    // with zero rows).
    bool contains(const FerrersDiagram& sub) const;

    // Diagonals indexed r = i - j + m, r = 1..k+m-1; within a diagonal the
    // cells are listed by increasing row.  Entry r-1 of the result holds
    // diagonal r; diagonals missing the diagram come back empty.
    std::vector<std::vector<Cell>> diagonals() const;

    std::string render() const;   // right-justified '*' picture
    std::string to_text() const;  // "6,3,2,2@6"

    bool operator==(const FerrersDiagram& o) const { return rows_ == o.rows_ && m_ == o.m_; }

private:
    std::vector<int> rows_;
    int m_;
};

struct TdeltaResult {
    long long value = 0;
    int argmin_i = 0;                // smallest minimising i in [0, delta-1]
    std::vector<long long> per_i;    // the value for each i
};

// min over i in [0, delta-1] of the cells left after deleting the topmost i
// rows and the rightmost delta-1-i columns.
TdeltaResult tdelta_ferrers(const FerrersDiagram& F, int delta);

// Arbitrary cell subset of a k x m box, cells 1-indexed and kept sorted.
class Profile {
public:
    Profile(int k, int m, std::vector<Cell> cells);
    static Profile from_diagram(const FerrersDiagram& F);

    int k() const { return k_; }
    int m() const { return m_; }
    const std::vector<Cell>& cells() const { return cells_; }
    long long size() const { return (long long)cells_.size(); }
    bool contains_cell(int i, int j) const;

private:
    int k_;
    int m_;
    std::vector<Cell> cells_;
};

struct LineSelection {
    std::vector<int> rows;  // 1-indexed, ascending
    std::vector<int> cols;
};

struct ProfileTdeltaResult {
    long long value = 0;
    LineSelection lines;  // minimising deletion, |rows|+|cols| = delta-1
};

// min over row sets I and column sets J with |I|+|J| = delta-1 of the cells
// of P outside the selected lines.  Ties prefer smaller |I|, then
// lexicographically smaller I, then J.
ProfileTdeltaResult tdelta_profile(const Profile& P, int delta);

// Shape of the free positions of a reduced echelon matrix with the given
// pivot columns (1-indexed, strictly increasing, values in [1, n]):
// a k x (n-k) diagram with r_i = n - k - p_i + i.
FerrersDiagram from_pivot(const std::vector<int>& pivots, int n);

}  // namespace fdrm
