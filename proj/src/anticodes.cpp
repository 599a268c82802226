#include "fdrm/anticodes.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace fdrm {

AnticodeResult anticode_max(const Profile& P, int delta, const FieldPtr& f) {
    auto td = tdelta_profile(P, delta);
    std::set<int> rows(td.lines.rows.begin(), td.lines.rows.end());
    std::set<int> cols(td.lines.cols.begin(), td.lines.cols.end());
    std::vector<Matrix> gens;
    for (const auto& [i, j] : P.cells())
        if (rows.count(i) || cols.count(j)) gens.push_back(Matrix::unit(f, P.k(), P.m(), i, j));
    AnticodeResult res{MatrixSpace::span(f, P.k(), P.m(), gens), td.lines, td.value};
    if (res.space.dim() != P.size() - td.value)
        throw std::logic_error("anticode dimension mismatch");
    return res;
}

Matrix pattern_matrix(const MatrixSpace& A) {
    Matrix B(A.field(), A.rows(), A.cols());
    for (int pos : A.leading_positions()) B.set(pos / A.cols(), pos % A.cols(), 1);
    return B;
}

LineCover min_line_cover(const Matrix& B) {
    const int k = B.rows(), m = B.cols();
    // Maximum bipartite matching, rows to columns, Kuhn's augmenting paths.
    std::vector<int> col_match(m, -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int r, std::vector<bool>& seen) {
        for (int c = 0; c < m; ++c) {
            if (B.at(r, c) == 0 || seen[c]) continue;
            seen[c] = true;
            if (col_match[c] < 0 || augment(col_match[c], seen)) {
                col_match[c] = r;
                return true;
            }
        }
        return false;
    };
    int rho = 0;
    for (int r = 0; r < k; ++r) {
        std::vector<bool> seen(m, false);
        if (augment(r, seen)) ++rho;
    }

    // All one-cells must be covered; pick the preferred minimum cover by
    // branching on the first uncovered one (its row or its column).
    std::vector<Cell> ones;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m; ++c)
            if (B.at(r, c) != 0) ones.emplace_back(r, c);

    using Key = std::pair<int, int>;  // (0, row) before (1, col)
    std::optional<std::vector<Key>> best;
    std::vector<bool> row_in(k, false), col_in(m, false);
    std::vector<Key> chosen;
    std::function<void()> dfs = [&]() {
        if ((int)chosen.size() > rho) return;
        const Cell* uncovered = nullptr;
        for (const auto& cell : ones) {
            if (!row_in[cell.first] && !col_in[cell.second]) {
                uncovered = &cell;
                break;
            }
        }
        if (!uncovered) {
            auto cand = chosen;
            std::sort(cand.begin(), cand.end());
            if (!best || cand < *best) best = cand;
            return;
        }
        auto [r, c] = *uncovered;
        row_in[r] = true;
        chosen.emplace_back(0, r);
        dfs();
        chosen.pop_back();
        row_in[r] = false;
        col_in[c] = true;
        chosen.emplace_back(1, c);
        dfs();
        chosen.pop_back();
        col_in[c] = false;
    };
    dfs();

    LineCover cover;
    cover.rho = rho;
    if (best) {
        for (const auto& [kind, idx] : *best) {
            if (kind == 0)
                cover.lines.rows.push_back(idx + 1);
            else
                cover.lines.cols.push_back(idx + 1);
        }
    }
    return cover;
}

int rank_reach_lower_bound(const MatrixSpace& A) {
    if (A.dim() == 0) return 0;
    return min_line_cover(pattern_matrix(A)).rho;
}

}  // namespace fdrm
