#include "fdrm/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fdrm {

FerrersDiagram::FerrersDiagram(std::vector<int> row_cards, int m) : rows_(std::move(row_cards)), m_(m) {
    if (rows_.empty()) throw std::invalid_argument("diagram needs at least one row");
    if (m_ < 0) throw std::invalid_argument("negative column count");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0 || rows_[i] > m_) throw std::invalid_argument("row cardinality out of range");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("row cardinalities must be nonincreasing");
    }
}

FerrersDiagram FerrersDiagram::parse(const std::string& text) {
    std::string body = text;
    int m = -1;
    auto at = text.find('@');
    if (at != std::string::npos) {
        body = text.substr(0, at);
        m = std::stoi(text.substr(at + 1));
    }
    std::vector<int> rows;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) rows.push_back(std::stoi(tok));
    }
    if (rows.empty()) throw std::invalid_argument("empty diagram text");
    if (m < 0) m = rows[0];
    return FerrersDiagram(rows, m);
}

long long FerrersDiagram::size() const {
    long long s = 0;
    for (int r : rows_) s += r;
    return s;
}

bool FerrersDiagram::contains_cell(int i, int j) const {
    if (i < 1 || i > k() || j < 1 || j > m_) return false;
    return j > m_ - rows_[i - 1];
}

std::vector<Cell> FerrersDiagram::cells() const {
    std::vector<Cell> cs;
    for (int i = 1; i <= k(); ++i)
        for (int j = m_ - rows_[i - 1] + 1; j <= m_; ++j) cs.emplace_back(i, j);
    return cs;
}

FerrersDiagram FerrersDiagram::transpose() const {
    std::vector<int> conj(m_, 0);
    for (int j = 1; j <= m_; ++j)
        for (int r : rows_)
            if (r >= j) ++conj[j - 1];
    if (conj.empty()) conj.push_back(0);  // m = 0 collapses to a single empty row
    return FerrersDiagram(conj, k());
}

bool FerrersDiagram::contains(const FerrersDiagram& sub) const {
    if (sub.m() != m_) throw std::invalid_argument("column count mismatch");
    if (sub.k() > k()) {
        for (int i = k(); i < sub.k(); ++i)
            if (sub.row_cards()[i] != 0) return false;
    }
    for (int i = 0; i < std::min(k(), sub.k()); ++i)
        if (sub.row_cards()[i] > rows_[i]) return false;
    return true;
}

std::vector<std::vector<Cell>> FerrersDiagram::diagonals() const {
    std::vector<std::vector<Cell>> ds(k() + m_ - 1 > 0 ? k() + m_ - 1 : 0);
    for (int i = 1; i <= k(); ++i)
        for (int j = m_ - rows_[i - 1] + 1; j <= m_; ++j) ds[i - j + m_ - 1].emplace_back(i, j);
    return ds;
}

std::string FerrersDiagram::render() const {
    std::string out;
    for (int i = 0; i < k(); ++i) {
        if (i > 0) out += '\n';
        out += std::string(m_ - rows_[i], ' ');
        out += std::string(rows_[i], '*');
    }
    return out;
}

std::string FerrersDiagram::to_text() const {
    std::string out;
    for (int i = 0; i < k(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(rows_[i]);
    }
    out += '@';
    out += std::to_string(m_);
    return out;
}

TdeltaResult tdelta_ferrers(const FerrersDiagram& F, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    TdeltaResult res;
    res.per_i.resize(delta);
    for (int i = 0; i < delta; ++i) {
        long long v = 0;
        for (int u = i + 1; u <= F.k(); ++u)
            v += std::max(F.row_cards()[u - 1] - (delta - 1 - i), 0);
        res.per_i[i] = v;
    }
    res.argmin_i = 0;
    for (int i = 1; i < delta; ++i)
        if (res.per_i[i] < res.per_i[res.argmin_i]) res.argmin_i = i;
    res.value = res.per_i[res.argmin_i];
    return res;
}

Profile::Profile(int k, int m, std::vector<Cell> cells) : k_(k), m_(m), cells_(std::move(cells)) {
    if (k_ < 1 || m_ < 1) throw std::invalid_argument("profile box must be positive");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const auto& [i, j] : cells_)
        if (i < 1 || i > k_ || j < 1 || j > m_) throw std::invalid_argument("cell out of range");
}

Profile Profile::from_diagram(const FerrersDiagram& F) {
    return Profile(F.k(), std::max(F.m(), 1), F.cells());
}

bool Profile::contains_cell(int i, int j) const {
    return std::binary_search(cells_.begin(), cells_.end(), Cell{i, j});
}

namespace {

// All size-a subsets of {1..n} in lexicographic order, fed to fn.
void for_each_subset(int n, int a, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(a);
    for (int i = 0; i < a; ++i) idx[i] = i + 1;
    while (true) {
        if (!fn(idx)) return;
        int pos = a - 1;
        while (pos >= 0 && idx[pos] == n - (a - 1 - pos)) --pos;
        if (pos < 0) return;
        ++idx[pos];
        for (int i = pos + 1; i < a; ++i) idx[i] = idx[i - 1] + 1;
    }
}

long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) {
        v = v * (n - r + i) / i;
        if (v > (1LL << 40)) return 1LL << 40;
    }
    return v;
}

}  // namespace

ProfileTdeltaResult tdelta_profile(const Profile& P, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    const int k = P.k(), m = P.m();
    if (delta - 1 > k + m) throw std::invalid_argument("delta exceeds available lines");
    long long total = 0;
    for (int a = std::max(0, delta - 1 - m); a <= std::min(k, delta - 1); ++a)
        total += binom(k, a) * binom(m, delta - 1 - a);
    if (total > 20'000'000LL) throw ResourceCapError("profile line enumeration too large");

    ProfileTdeltaResult best;
    best.value = -1;
    for (int a = std::max(0, delta - 1 - m); a <= std::min(k, delta - 1); ++a) {
        int b = delta - 1 - a;
        for_each_subset(k, a, [&](const std::vector<int>& I) {
            std::vector<bool> in_row(k + 1, false);
            for (int i : I) in_row[i] = true;
            for_each_subset(m, b, [&](const std::vector<int>& J) {
                std::vector<bool> in_col(m + 1, false);
                for (int j : J) in_col[j] = true;
                long long left = 0;
                for (const auto& [ci, cj] : P.cells())
                    if (!in_row[ci] && !in_col[cj]) ++left;
                if (best.value < 0 || left < best.value) {
                    best.value = left;
                    best.lines.rows = I;
                    best.lines.cols = J;
                }
                return true;
            });
            return true;
        });
    }
    return best;
}

FerrersDiagram from_pivot(const std::vector<int>& pivots, int n) {
    const int k = (int)pivots.size();
    if (k < 1 || n < k) throw std::invalid_argument("need 1 <= k <= n pivots");
    for (int i = 0; i < k; ++i) {
        if (pivots[i] < 1 || pivots[i] > n) throw std::invalid_argument("pivot out of range");
        if (i > 0 && pivots[i] <= pivots[i - 1])
            throw std::invalid_argument("pivots must be strictly increasing");
    }
    std::vector<int> rows(k);
    for (int i = 1; i <= k; ++i) rows[i - 1] = n - k - pivots[i - 1] + i;
    return FerrersDiagram(rows, n - k);
}

}  // namespace fdrm
