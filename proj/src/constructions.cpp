#include "fdrm/constructions.hpp"

#include <algorithm>
#include <optional>

namespace fdrm {
namespace {

// Nonzero rows of F together with the offsets of the tight bounding box
// (zero rows dropped, empty leftmost columns dropped).
struct Tight {
    std::optional<FerrersDiagram> diagram;  // absent when F has no cells
    int col_off = 0;
};

Tight trim(const FerrersDiagram& F) {
    Tight t;
    std::vector<int> rows;
    for (int r : F.row_cards())
        if (r > 0) rows.push_back(r);
    if (rows.empty()) return t;
    int mt = rows[0];
    t.col_off = F.m() - mt;
    t.diagram = FerrersDiagram(rows, mt);
    return t;
}

MatrixSpace embed_space(const MatrixSpace& S, const FieldPtr& f, int k, int m, int row_off,
                        int col_off) {
    std::vector<Matrix> gens;
    for (const auto& b : S.basis()) {
        Matrix M(f, k, m);
        M.paste(b, row_off, col_off);
        gens.push_back(std::move(M));
    }
    return MatrixSpace::span(f, k, m, gens);
}

MatrixSpace unit_span(const FerrersDiagram& F, const FieldPtr& f) {
    std::vector<Matrix> gens;
    for (const auto& [i, j] : F.cells()) gens.push_back(Matrix::unit(f, F.k(), F.m(), i, j));
    return MatrixSpace::span(f, F.k(), F.m(), gens);
}

}  // namespace

Matrix mult_matrix(const Extension& ext, int beta, BasisOrder order) {
    const int k = ext.k();
    const auto& big = ext.big();
    Matrix M(ext.base(), k, k);
    for (int j = 1; j <= k; ++j) {
        int exp_j = (order == BasisOrder::descending) ? k - j : j - 1;
        int w = big->mul(beta, big->pow(ext.alpha(), exp_j));
        auto coords = ext.expand(w);
        for (int t = 1; t <= k; ++t) {
            int idx = (order == BasisOrder::descending) ? k - t : t - 1;
            M.set(j - 1, t - 1, coords[idx]);
        }
    }
    return M;
}

MatrixSpace mrd(const FieldPtr& f, int k, int m, int delta) {
    if (delta < 1 || delta > k || k > m) throw std::invalid_argument("need 1 <= delta <= k <= m");
    auto ext = Extension::get(f, m);
    const auto& big = ext->big();
    const int alpha = ext->alpha();
    std::vector<int> points(k);
    for (int i = 0; i < k; ++i) points[i] = big->pow(alpha, i);
    std::vector<Matrix> gens;
    long long qt = 1;
    for (int t = 0; t <= k - delta; ++t) {
        for (int s = 0; s < m; ++s) {
            int a = big->pow(alpha, s);
            Matrix M(f, k, m);
            for (int i = 0; i < k; ++i) {
                int val = big->mul(a, big->pow(points[i], qt));
                auto row = ext->expand(val);
                for (int j = 0; j < m; ++j) M.set(i, j, row[j]);
            }
            gens.push_back(std::move(M));
        }
        qt *= f->q();
    }
    auto S = MatrixSpace::span(f, k, m, gens);
    if (S.dim() != m * (k - delta + 1)) throw std::logic_error("rank-metric basis is degenerate");
    return S;
}

Matrix mds_code(const FieldPtr& f, int n, int delta) {
    if (n < 1 || delta < 1 || delta > n) throw std::invalid_argument("need 1 <= delta <= n");
    if (delta == 1) return Matrix::identity(f, n);
    const long long q = f->q();
    if (q < n - 1) throw std::invalid_argument("field too small for an MDS code of this length");
    const int dim = n - delta + 1;
    Matrix G(f, dim, n);
    if (q >= n) {
        for (int t = 0; t < dim; ++t)
            for (int j = 0; j < n; ++j) G.set(t, j, f->pow(j, t));
    } else {
        // q = n - 1: evaluate at the whole field and append the coefficient
        // of x^{n-delta} as the last coordinate.
        for (int t = 0; t < dim; ++t) {
            for (int j = 0; j < (int)q; ++j) G.set(t, j, f->pow(j, t));
            G.set(t, n - 1, t == n - delta ? 1 : 0);
        }
    }
    return G;
}

MatrixSpace intersect_construction(const FerrersDiagram& F, int delta, const FieldPtr& f) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    if (delta == 1) return unit_span(F, f);
    auto t = trim(F);
    if (!t.diagram) return MatrixSpace(f, F.k(), F.m());
    const auto& D = *t.diagram;
    const int kt = D.k(), mt = D.m();
    if (delta > kt || delta > mt) return MatrixSpace(f, F.k(), F.m());
    if (kt > mt) {
        // Build on the conjugate and map back; ranks are unaffected.
        auto W = intersect_construction(D.transpose(), delta, f);
        std::vector<Matrix> gens;
        for (const auto& b : W.basis()) gens.push_back(b.anti_transpose());
        auto S = MatrixSpace::span(f, kt, mt, gens);
        return embed_space(S, f, F.k(), F.m(), 0, t.col_off);
    }
    const auto& rows = D.row_cards();
    const int rd = rows[delta - 2];  // r_{delta-1}
    if (rd >= kt) {
        std::vector<int> sub(kt);
        for (int i = 0; i < delta - 1; ++i) sub[i] = rd;
        for (int i = delta - 1; i < kt; ++i) sub[i] = rows[i];
        FerrersDiagram Fp(sub, rd);
        auto V = mrd(f, kt, rd, delta);
        auto W = intersect_with_shape(V, Fp.cells());
        return embed_space(W, f, F.k(), F.m(), 0, F.m() - rd);
    }
    auto V = mrd(f, kt, mt, delta);
    auto W = intersect_with_shape(V, D.cells());
    return embed_space(W, f, F.k(), F.m(), 0, t.col_off);
}

MatrixSpace diagonal_construction(const FerrersDiagram& F, int delta, const FieldPtr& f) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    std::vector<Matrix> gens;
    for (const auto& D : F.diagonals()) {
        const int n = (int)D.size();
        if (n < delta) continue;
        if (delta > 1 && f->q() < n - 1) continue;  // field too small, skip
        Matrix G = mds_code(f, n, delta);
        for (int r = 0; r < G.rows(); ++r) {
            Matrix M(f, F.k(), F.m());
            for (int c = 0; c < n; ++c) M.set(D[c].first - 1, D[c].second - 1, G.at(r, c));
            gens.push_back(std::move(M));
        }
    }
    return MatrixSpace::span(f, F.k(), F.m(), gens);
}

MatrixSpace square_construction(const FerrersDiagram& F, const FieldPtr& f, std::string* method_out) {
    const int k = F.k();
    if (k != F.m()) throw std::invalid_argument("square construction needs a k x k diagram");
    if (k < 2) throw std::invalid_argument("square construction needs k >= 2");
    const long long t = tdelta_ferrers(F, k).value;
    if (2 * t < k || t > k - 1)
        throw std::invalid_argument("square construction needs k/2 <= T_k(F) <= k-1");
    std::vector<int> shape(k);
    for (int i = 0; i < k; ++i) shape[i] = i < t ? k : (int)t;
    if (!F.contains(FerrersDiagram(shape, k)))
        throw std::logic_error("diagram does not contain its square core");

    const int k1 = k / 2, k2 = k - k1;
    auto A = mrd(f, k1, k1, k1);
    auto B = mrd(f, k2, k2, k2);
    std::vector<Matrix> gens;
    for (int i = 0; i < k1; ++i) {
        Matrix M(f, k, k);
        M.paste(A.basis()[i], 0, 0);
        M.paste(B.basis()[i], k1, k1);
        gens.push_back(std::move(M));
    }
    auto block_diag = MatrixSpace::span(f, k, k, gens);

    MatrixSpace second(f, k, k);
    std::string second_tag;
    if (k >= t + 2) {
        auto ext = Extension::get(f, k);
        std::vector<Matrix> mg;
        for (int i = 0; i <= (int)(2 * t) - k; ++i)
            mg.push_back(mult_matrix(*ext, ext->big()->pow(ext->alpha(), i), BasisOrder::descending));
        second = MatrixSpace::span(f, k, k, mg);
        second_tag = "field_mul";
    } else {  // t = k-1: cutting the MRD space down to the core already wins
        second = intersect_construction(FerrersDiagram(shape, k), k, f);
        second_tag = "teo1";
    }
    if (second.dim() >= block_diag.dim()) {
        if (method_out) *method_out = second_tag;
        return second;
    }
    if (method_out) *method_out = "block_diag";
    return block_diag;
}

MatrixSpace block_combine(const MatrixSpace& A, const MatrixSpace& B, int row_a, int col_a,
                          int row_b, int col_b, int k, int m) {
    if (!A.field()->same(*B.field())) throw std::invalid_argument("field mismatch");
    auto check_range = [&](int start, int len, int bound) {
        if (start < 1 || start + len - 1 > bound) throw std::invalid_argument("placement out of range");
    };
    check_range(row_a, A.rows(), k);
    check_range(col_a, A.cols(), m);
    check_range(row_b, B.rows(), k);
    check_range(col_b, B.cols(), m);
    bool rows_disjoint = row_a + A.rows() <= row_b || row_b + B.rows() <= row_a;
    bool cols_disjoint = col_a + A.cols() <= col_b || col_b + B.cols() <= col_a;
    if (!rows_disjoint || !cols_disjoint)
        throw std::invalid_argument("row and column ranges must both be disjoint");
    const int d = std::min(A.dim(), B.dim());
    std::vector<Matrix> gens;
    for (int i = 0; i < d; ++i) {
        Matrix M(A.field(), k, m);
        M.paste(A.basis()[i], row_a - 1, col_a - 1);
        M.paste(B.basis()[i], row_b - 1, col_b - 1);
        gens.push_back(std::move(M));
    }
    return MatrixSpace::span(A.field(), k, m, gens);
}

namespace {

struct Candidate {
    MatrixSpace space;
    std::string method;
    bool transposed;
};

// Candidates for one orientation, appended in provable-first priority order.
void collect_candidates(const FerrersDiagram& F, int delta, const FieldPtr& f, bool transposed,
                        int pass, std::vector<Candidate>& out) {
    auto t = trim(F);
    auto add = [&](MatrixSpace S, const std::string& tag) {
        out.push_back({std::move(S), tag, transposed});
    };
    if (!t.diagram) return;
    const auto& D = *t.diagram;
    const int kt = D.k(), mt = D.m();
    if (delta > kt || delta > mt) return;
    const auto& rows = D.row_cards();
    const bool teo1_applies = delta >= 2 && kt <= mt && rows[delta - 2] >= kt;

    if (pass == 0) {  // routes that provably attain the bound
        if (teo1_applies) {
            try {
                add(intersect_construction(F, delta, f), "teo1");
            } catch (const ResourceCapError&) {
            }
        }
        bool teo4 = true;
        for (int i = 1; i <= kt; ++i) {
            if (i < delta && rows[i - 1] < mt - i + 1) teo4 = false;
            if (i >= delta && rows[i - 1] > mt - i + 1) teo4 = false;
        }
        if (teo4) {
            long long need = 0;
            for (const auto& diag : D.diagonals())
                if ((int)diag.size() >= delta) need = std::max(need, (long long)diag.size() - 1);
            if (delta == 1 || f->q() >= need)
                add(embed_space(diagonal_construction(D, delta, f), f, F.k(), F.m(), 0, t.col_off),
                    "diagonal");
        }
        return;
    }

    // generic fallbacks
    if (delta == kt && kt == mt && kt >= 2) {
        long long tk = tdelta_ferrers(D, kt).value;
        if (2 * tk >= kt && tk <= kt - 1) {
            try {
                std::string tag;
                auto S = square_construction(D, f, &tag);
                add(embed_space(S, f, F.k(), F.m(), 0, t.col_off), tag);
            } catch (const ResourceCapError&) {
            }
        }
    }
    add(embed_space(diagonal_construction(D, delta, f), f, F.k(), F.m(), 0, t.col_off), "diagonal");
    if (!teo1_applies) {
        try {
            add(intersect_construction(F, delta, f), "intersect");
        } catch (const ResourceCapError&) {
        }
    }
    // split into a top-left and bottom-right block, ranks add
    for (int s = 1; s < kt; ++s) {
        const int wb = rows[s];
        const int wa = mt - wb;
        if (wa <= 0) continue;
        std::vector<int> arows(rows.begin(), rows.begin() + s);
        for (auto& r : arows) r -= wb;
        if (std::all_of(arows.begin(), arows.end(), [](int r) { return r == 0; })) continue;
        std::vector<int> brows(rows.begin() + s, rows.end());
        FerrersDiagram Ad(arows, wa), Bd(brows, wb);
        for (int da = 1; da < delta; ++da) {
            const int db = delta - da;
            if (da > std::min(s, wa) || db > std::min(kt - s, wb)) continue;
            auto RA = construct_auto(Ad, da, f);
            if (RA.space.dim() == 0) continue;
            auto RB = construct_auto(Bd, db, f);
            if (RB.space.dim() == 0) continue;
            auto S = block_combine(RA.space, RB.space, 1, 1, s + 1, wa + 1, kt, mt);
            add(embed_space(S, f, F.k(), F.m(), 0, t.col_off), "auto-composite");
        }
    }
}

}  // namespace

ConstructionResult construct_auto(const FerrersDiagram& F, int delta, const FieldPtr& f) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    const auto T = tdelta_ferrers(F, delta);

    if (delta == 1) {
        ConstructionResult res{unit_span(F, f), "intersect", T.value, true, false};
        res.attains_bound = res.space.dim() == T.value;
        return res;
    }

    std::vector<Candidate> cands;
    FerrersDiagram FT = F.transpose();
    for (int pass = 0; pass < 2; ++pass) {
        collect_candidates(F, delta, f, false, pass, cands);
        collect_candidates(FT, delta, f, true, pass, cands);
    }

    ConstructionResult best{MatrixSpace(f, F.k(), F.m()), "intersect", T.value, false, false};
    for (auto& c : cands) {
        MatrixSpace S = c.space;
        if (c.transposed) {
            std::vector<Matrix> gens;
            for (const auto& b : S.basis()) gens.push_back(b.anti_transpose());
            S = MatrixSpace::span(f, F.k(), F.m(), gens);
        }
        if (S.dim() > best.space.dim()) {
            best.space = std::move(S);
            best.method = c.method;
            best.transposed = c.transposed;
        }
    }
    best.attains_bound = best.space.dim() == T.value;
    return best;
}

}  // namespace fdrm
