#include "fdrm/multilevel.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <random>

namespace fdrm {
namespace {

mpz_class q_pow(long long q, long long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)q, (unsigned long)e);
    return r;
}

// Minimum nonzero rank by enumerating the whole space (q^dim elements).
int min_nonzero_rank(const MatrixSpace& S) {
    const long long q = S.field()->q();
    long long total = 1;
    for (int i = 0; i < S.dim(); ++i) total *= q;
    int best = INT_MAX;
    SpanOdometer odo(S);
    for (long long step = 1; step < total; ++step) {
        odo.step();
        best = std::min(best, odo.value().rank());
        if (best == 1) break;
    }
    return best;
}

}  // namespace

PivotVector::PivotVector(const std::string& bits) : bits_(bits) {
    if (bits_.empty()) throw std::invalid_argument("empty pivot vector");
    for (int i = 0; i < (int)bits_.size(); ++i) {
        if (bits_[i] == '1')
            positions_.push_back(i + 1);
        else if (bits_[i] != '0')
            throw std::invalid_argument("pivot vector must be a 0/1 string");
    }
}

PivotVector PivotVector::from_positions(const std::vector<int>& positions, int n) {
    std::string bits(n, '0');
    for (int p : positions) {
        if (p < 1 || p > n) throw std::invalid_argument("position out of range");
        bits[p - 1] = '1';
    }
    return PivotVector(bits);
}

int hamming_distance(const PivotVector& a, const PivotVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("length mismatch");
    int d = 0;
    for (int i = 0; i < a.n(); ++i)
        if (a.bits()[i] != b.bits()[i]) ++d;
    return d;
}

std::vector<PivotVector> lexicode(int n, int k, int d, const PivotVector& seed) {
    if (n < 1 || n > 24) throw ResourceCapError("lexicode length must be in [1, 24]");
    if (k < 0 || k > n || d < 1) throw std::invalid_argument("bad lexicode parameters");
    if (seed.n() != n || seed.weight() != k)
        throw std::invalid_argument("seed weight or length mismatch");
    auto to_word = [&](const std::string& bits) {
        unsigned long r = 0;
        for (char c : bits) r = (r << 1) | (c == '1');
        return r;
    };
    auto to_bits = [&](unsigned long w) {
        std::string bits(n, '0');
        for (int i = 0; i < n; ++i)
            if (w >> (n - 1 - i) & 1) bits[i] = '1';
        return bits;
    };
    std::vector<unsigned long> words{to_word(seed.bits())};
    for (long long x = (1LL << n) - 1; x >= 0; --x) {
        unsigned long w = (unsigned long)x;
        if (std::popcount(w) != k) continue;
        bool ok = true;
        for (unsigned long c : words)
            if (std::popcount(w ^ c) < d) {
                ok = false;
                break;
            }
        if (ok) words.push_back(w);
    }
    std::vector<PivotVector> out;
    for (unsigned long w : words) out.emplace_back(to_bits(w));
    return out;
}

Matrix lift(const PivotVector& v, const Matrix& M) {
    const int n = v.n();
    const int k = v.weight();
    if (M.rows() != k || M.cols() != n - k)
        throw std::invalid_argument("free-entry matrix must be k x (n-k)");
    FerrersDiagram F = from_pivot(v.positions(), n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n - k; ++j)
            if (M.at(i, j) != 0 && !F.contains_cell(i + 1, j + 1))
                throw std::invalid_argument("free entries leave the pivot shape");
    Matrix N(M.field(), k, n);
    const auto& pos = v.positions();
    for (int t = 0; t < k; ++t) N.set(t, pos[t] - 1, 1);
    int nj = 0;
    for (int j = 1; j <= n; ++j) {
        if (nj < k && pos[nj] == j) {
            ++nj;
            continue;
        }
        for (int i = 0; i < k; ++i) N.set(i, j - 1, M.at(i, j - nj - 1));
    }
    return N;
}

PivotVector pivot_of(const Matrix& N) {
    auto [R, pivots] = N.rref();
    (void)R;
    if ((int)pivots.size() != N.rows()) throw std::invalid_argument("matrix is not full row rank");
    std::vector<int> pos;
    for (int c : pivots) pos.push_back(c + 1);
    return PivotVector::from_positions(pos, N.cols());
}

int injection_distance(const Matrix& X, const Matrix& Y) {
    if (X.cols() != Y.cols()) throw std::invalid_argument("ambient dimension mismatch");
    int inter = subspace_intersection_dim(X, Y);
    return std::max(X.rows(), Y.rows()) - inter;
}

SubspaceCode multilevel_build(const std::vector<PivotVector>& pivots, int delta, const FieldPtr& f,
                              const std::vector<MatrixSpace>* level_spaces) {
    if (pivots.empty()) throw std::invalid_argument("need at least one pivot vector");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    const int n = pivots[0].n();
    const int k = pivots[0].weight();
    for (const auto& v : pivots)
        if (v.n() != n || v.weight() != k)
            throw std::invalid_argument("pivot vectors must share length and weight");
    for (size_t a = 0; a < pivots.size(); ++a)
        for (size_t b = a + 1; b < pivots.size(); ++b)
            if (hamming_distance(pivots[a], pivots[b]) < 2 * delta)
                throw std::invalid_argument("pivot vectors closer than 2*delta");
    if (level_spaces && level_spaces->size() != pivots.size())
        throw std::invalid_argument("level space count mismatch");

    SubspaceCode C;
    C.n = n;
    C.k = k;
    C.delta = delta;
    C.field = f;
    C.cardinality = 0;
    for (size_t i = 0; i < pivots.size(); ++i) {
        const auto& v = pivots[i];
        FerrersDiagram F = from_pivot(v.positions(), n);
        Level lvl{v, MatrixSpace(f, k, n - k), tdelta_ferrers(F, delta).value, ""};
        if (level_spaces) {
            const auto& S = (*level_spaces)[i];
            if (!S.field()->same(*f) || S.rows() != k || S.cols() != n - k)
                throw std::invalid_argument("level space has the wrong ambient size or field");
            for (const auto& b : S.basis())
                for (const auto& [ci, cj] : b.support())
                    if (!F.contains_cell(ci, cj))
                        throw std::invalid_argument("level space leaves the pivot shape");
            if (S.dim() > 0) {
                double combos = std::pow((double)f->q(), S.dim());
                if (combos <= 4096.0) {
                    if (min_nonzero_rank(S) < delta)
                        throw std::invalid_argument("level space is not a delta space");
                } else {
                    std::mt19937 gen(0xC0DEu + (unsigned)i);
                    std::uniform_int_distribution<int> coeff(0, (int)f->q() - 1);
                    for (int trial = 0; trial < 256; ++trial) {
                        std::vector<int> cs(S.dim());
                        bool nonzero = false;
                        for (auto& c : cs) nonzero |= (c = coeff(gen)) != 0;
                        if (!nonzero) continue;
                        if (S.element(cs).rank() < delta)
                            throw std::invalid_argument("level space is not a delta space");
                    }
                }
            }
            lvl.space = S;
            lvl.method = "given";
        } else {
            auto res = construct_auto(F, delta, f);
            lvl.space = res.space;
            lvl.method = res.method;
        }
        C.cardinality += q_pow(f->q(), lvl.space.dim());
        C.levels.push_back(std::move(lvl));
    }
    return C;
}

std::vector<Matrix> level_codewords(const SubspaceCode& C, int level, long long cap) {
    const auto& lvl = C.levels.at(level);
    const long long q = C.field->q();
    double total = std::pow((double)q, lvl.space.dim());
    if (total > (double)cap) throw ResourceCapError("level too large to materialize");
    std::vector<Matrix> words;
    SpanOdometer odo(lvl.space);
    long long count = (long long)total;
    for (long long step = 0; step < count; ++step) {
        words.push_back(lift(lvl.pivot, odo.value()));
        odo.step();
    }
    return words;
}

DistanceCertificate min_distance_exact(const SubspaceCode& C) {
    if (C.cardinality > mpz_class(1 << 20)) throw ResourceCapError("too many codewords");
    mpz_class pairs = C.cardinality * (C.cardinality - 1) / 2;
    if (pairs > mpz_class(10'000'000)) throw ResourceCapError("exact strategy beyond 10^7 pairs");
    std::vector<Matrix> all;
    for (size_t i = 0; i < C.levels.size(); ++i) {
        auto words = level_codewords(C, (int)i);
        all.insert(all.end(), words.begin(), words.end());
    }
    int best = C.k;
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = a + 1; b < all.size(); ++b) {
            best = std::min(best, injection_distance(all[a], all[b]));
            if (best == 0) return {0, true, "exact"};
        }
    return {best, true, "exact"};
}

DistanceCertificate min_distance_structured(const SubspaceCode& C) {
    int within = INT_MAX;
    for (const auto& lvl : C.levels) {
        if (lvl.space.dim() == 0) continue;
        double combos = std::pow((double)C.field->q(), lvl.space.dim());
        if (combos <= 65536.0) {
            within = std::min(within, min_nonzero_rank(lvl.space));
        } else {
            // Too big to enumerate; the level was built or validated as a
            // delta space, so its minimum nonzero rank is at least that.
            within = std::min(within, C.delta);
        }
    }
    int cross = INT_MAX;
    for (size_t a = 0; a < C.levels.size(); ++a)
        for (size_t b = a + 1; b < C.levels.size(); ++b)
            cross = std::min(cross,
                             (hamming_distance(C.levels[a].pivot, C.levels[b].pivot) + 1) / 2);
    int value = std::min(within, cross);
    if (value == INT_MAX) value = C.k;
    return {value, false, "structured"};
}

DistanceCertificate min_distance_sampled(const SubspaceCode& C, long long pairs, unsigned seed,
                                         bool cross_level_only) {
    if (cross_level_only && C.levels.size() < 2)
        throw std::invalid_argument("cross-level sampling needs at least two levels");
    std::mt19937 gen(seed);
    const int q = (int)C.field->q();
    std::uniform_int_distribution<int> level_pick(0, (int)C.levels.size() - 1);
    std::uniform_int_distribution<int> coeff(0, q - 1);
    auto random_word = [&](int lvl_idx, std::vector<int>& coeffs_out) {
        const auto& lvl = C.levels[lvl_idx];
        coeffs_out.assign(lvl.space.dim(), 0);
        for (auto& c : coeffs_out) c = coeff(gen);
        return lift(lvl.pivot, lvl.space.element(coeffs_out));
    };
    int best = C.k;
    std::vector<int> ca, cb;
    for (long long t = 0; t < pairs; ++t) {
        int la = level_pick(gen);
        int lb = level_pick(gen);
        if (cross_level_only) {
            while (lb == la) lb = level_pick(gen);
        }
        Matrix A = random_word(la, ca);
        Matrix B = random_word(lb, cb);
        if (la == lb && ca == cb) {
            --t;
            continue;
        }
        best = std::min(best, injection_distance(A, B));
        if (best == 0) break;
    }
    return {best, false, "sampled"};
}

MultilevelBound multilevel_bound(const std::vector<PivotVector>& pivots, int delta,
                                 const FieldPtr& f) {
    if (pivots.empty()) throw std::invalid_argument("need at least one pivot vector");
    if (delta < 2) throw std::invalid_argument("bound needs delta >= 2");
    const int n = pivots[0].n();
    const int k = pivots[0].weight();
    if (delta > k) throw std::invalid_argument("delta exceeds the constant weight");
    for (const auto& v : pivots)
        if (v.n() != n || v.weight() != k)
            throw std::invalid_argument("pivot vectors must share length and weight");
    const long long q = f->q();
    MultilevelBound B;
    B.lower = 0;
    B.upper = 0;
    size_t n_prime = 0, n_second = 0;
    for (const auto& v : pivots) {
        const auto& p = v.positions();
        bool dprime = p[delta - 2] <= n - 2 * k + delta - 1;
        bool dsecond = true;
        for (int i = 1; i <= delta; ++i)
            if (p[i - 1] > n - k - delta + 2 * i - 1) dsecond = false;
        B.in_dprime.push_back(dprime);
        B.in_dsecond.push_back(dsecond);
        long long T = tdelta_ferrers(from_pivot(p, n), delta).value;
        if (dprime) {
            B.lower += q_pow(q, T);
            ++n_prime;
        }
        if (dsecond) {
            B.upper += q_pow(q, T);
            ++n_second;
        }
    }
    B.lower += mpz_class((unsigned long)(n_second - n_prime)) * (unsigned long)q;
    B.lower += mpz_class((unsigned long)(pivots.size() - n_second));
    B.upper += mpz_class((unsigned long)(pivots.size() - n_second));
    return B;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {10, 5, 3, {{15, 1}, {6, 1}, {2, 2}, {1, 1}, {0, 1}}},
        {11, 5, 3, {{18, 1}, {9, 1}, {6, 1}, {4, 1}, {3, 4}, {2, 3}}},
        {14, 4, 3, {{20, 1}, {14, 1}, {10, 1}, {9, 1}, {8, 1}, {6, 2}, {5, 2}, {4, 2}, {3, 1}, {2, 1}}},
        {14, 5, 4, {{18, 1}, {10, 1}, {3, 1}, {0, 1}}},
        {15, 6, 5, {{18, 1}, {5, 1}, {0, 1}}},
    };
    return rows;
}

mpz_class eval_table_row(const TableRow& row, long long q) {
    mpz_class v = 0;
    for (const auto& [e, c] : row.poly) v += mpz_class(c) * q_pow(q, e);
    return v;
}

std::string table_row_poly_text(const TableRow& row) {
    std::string out;
    for (const auto& [e, c] : row.poly) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += "q";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace fdrm
