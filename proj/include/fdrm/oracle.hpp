#pragma once

#include "fdrm/constructions.hpp"

#include <map>
#include <optional>
#include <string>

namespace fdrm {

enum class VerifyMode { exhaustive, sample };

struct VerifyReport {
    bool ok = true;
    long long checked = 0;  // elements examined (serial order up to the witness)
    std::optional<Matrix> witness;
    std::optional<std::vector<int>> witness_coeffs;
};

/*
 * Checks every nonzero element of S (or `samples` random nonzero ones) for
 * rank >= delta.  Exhaustive mode refuses spaces beyond 2^20 elements and
 * reports the violation of smallest enumeration index regardless of the
 * thread count.
 */
VerifyReport verify_delta_space(const MatrixSpace& S, int delta,
                                VerifyMode mode = VerifyMode::exhaustive, long long samples = 10000,
                                unsigned seed = 1, int jobs = 1);

// Same sweep with the opposite predicate: every element must have rank <= delta.
VerifyReport verify_anticode(const MatrixSpace& S, int delta,
                             VerifyMode mode = VerifyMode::exhaustive, long long samples = 10000,
                             unsigned seed = 1, int jobs = 1);

// rank -> element count over all q^dim elements of S (rank 0 counts the zero
// matrix).  Subject to the same 2^20 cap as exhaustive verification.
std::map<int, long long> rank_distribution(const MatrixSpace& S, int jobs = 1);

struct SearchResult {
    int max_dim = 0;
    bool certified = false;  // search space exhausted within the node budget
    long long nodes = 0;
    MatrixSpace witness;
};

/*
 * Exhaustive depth-first search for the largest space of matrices supported
 * in F whose nonzero elements all have rank >= delta.  Bases are enumerated
 * in reduced-echelon canonical form, newest vector with the earliest leading
 * cell, so every candidate space is visited exactly once.
 */
SearchResult search_max_dim(const FerrersDiagram& F, int delta, const FieldPtr& f,
                            long long node_budget = 5'000'000);

struct ConjectureReport {
    std::string status;  // "proven_attained", "attained_by_search" or "gap_unresolved"
    long long tdelta = 0;
    int constructed_dim = 0;
    std::optional<int> searched_dim;  // absent when construction already attains the bound
    bool search_certified = false;
};

// Compares the dimension bound with what construction and search achieve on F.
ConjectureReport check_conjecture(const FerrersDiagram& F, int delta, const FieldPtr& f,
                                  long long node_budget = 5'000'000);

}  // namespace fdrm
