#pragma once

#include "fdrm/constructions.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fdrm {

// Binary vector marking the pivot columns of a reduced echelon form.
class PivotVector {
public:
    explicit PivotVector(const std::string& bits);
    static PivotVector from_positions(const std::vector<int>& positions, int n);

    int n() const { return (int)bits_.size(); }
    int weight() const { return (int)positions_.size(); }
    const std::string& bits() const { return bits_; }
    const std::vector<int>& positions() const { return positions_; }  // 1-indexed

    bool operator==(const PivotVector& o) const { return bits_ == o.bits_; }

private:
    std::string bits_;
    std::vector<int> positions_;
};

int hamming_distance(const PivotVector& a, const PivotVector& b);

// Greedy constant-weight lexicode: one descending pass over all of F_2^n,
// keeping vectors of weight k at Hamming distance >= d from everything kept
// so far.  The seed is the first codeword.
std::vector<PivotVector> lexicode(int n, int k, int d, const PivotVector& seed);

// Reduced echelon k x n matrix with pivot columns v and the free entries
// taken from M (a k x (n-k) matrix shaped by from_pivot(v)).
Matrix lift(const PivotVector& v, const Matrix& M);

// Pivot columns of the reduced echelon form of N (full row rank required).
PivotVector pivot_of(const Matrix& N);

// max(dim X, dim Y) - dim(X cap Y) for row spaces of full-rank X and Y.
int injection_distance(const Matrix& X, const Matrix& Y);

struct Level {
    PivotVector pivot;
    MatrixSpace space;
    long long tdelta = 0;
    std::string method;
};

struct SubspaceCode {
    int n = 0;
    int k = 0;
    int delta = 0;  // design minimum rank of every level space
    FieldPtr field;
    std::vector<Level> levels;
    mpz_class cardinality;
};

// Builds one level per pivot vector; spaces come from construct_auto unless
// provided (provided spaces are validated for shape and minimum rank).
// Pivot vectors must share n and weight and be pairwise >= 2*delta apart.
SubspaceCode multilevel_build(const std::vector<PivotVector>& pivots, int delta, const FieldPtr& f,
                              const std::vector<MatrixSpace>* level_spaces = nullptr);

// All codewords of one level (reduced echelon matrices); errors above the cap.
std::vector<Matrix> level_codewords(const SubspaceCode& C, int level, long long cap = 1 << 20);

struct DistanceCertificate {
    int value = 0;
    bool exact = false;       // false: certified lower bound or sampled observation
    std::string strategy;
};

// Pairwise injection distance over all codewords; refuses beyond 10^7 pairs.
DistanceCertificate min_distance_exact(const SubspaceCode& C);
// Certified lower bound: within-level minimum rank, cross-level half Hamming
// distance of the pivots.
DistanceCertificate min_distance_structured(const SubspaceCode& C);
// Observed minimum over random codeword pairs (not a certificate).
DistanceCertificate min_distance_sampled(const SubspaceCode& C, long long pairs, unsigned seed,
                                         bool cross_level_only = false);

struct MultilevelBound {
    mpz_class lower;
    mpz_class upper;
    std::vector<bool> in_dprime;   // per pivot: member of D'
    std::vector<bool> in_dsecond;  // per pivot: member of D''
};

// Cardinality bounds for the best multilevel code on the given pivot set.
MultilevelBound multilevel_bound(const std::vector<PivotVector>& pivots, int delta,
                                 const FieldPtr& f);

struct TableRow {
    int n, k, delta;
    std::vector<std::pair<int, int>> poly;  // (exponent, coefficient), descending
};

// Cardinality polynomials of the five reference multilevel codes.
const std::vector<TableRow>& table_rows();
mpz_class eval_table_row(const TableRow& row, long long q);
std::string table_row_poly_text(const TableRow& row);

}  // namespace fdrm
