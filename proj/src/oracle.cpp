#include "fdrm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace fdrm {
namespace {

long long span_size_capped(const MatrixSpace& S) {
    long long total = 1;
    for (int i = 0; i < S.dim(); ++i) {
        total *= S.field()->q();
        if (total > kFieldSizeCap)
            throw ResourceCapError("space too large for an exhaustive sweep");
    }
    return total;
}

struct Violation {
    long long index;
    std::vector<int> coeffs;
    Matrix element;
};

// Sweeps indices [1, total) of the span in parallel chunks and returns the
// lowest-index element failing the predicate, if any.
std::optional<Violation> sweep_for_violation(const MatrixSpace& S, long long total, int jobs,
                                             const std::function<bool(const Matrix&)>& good) {
    jobs = std::max(1, jobs);
    long long work = total - 1;
    if (work <= 0) return std::nullopt;
    int chunks = (int)std::min<long long>(jobs, work);
    std::atomic<long long> best_idx{LLONG_MAX};
    std::mutex best_mu;
    std::optional<Violation> best;
    auto run_chunk = [&](long long lo, long long hi) {
        if (lo >= best_idx.load()) return;
        SpanOdometer odo(S, lo);
        for (long long idx = lo; idx < hi; ++idx) {
            if ((idx & 1023) == 0 && idx > best_idx.load()) return;
            if (!good(odo.value())) {
                long long cur = best_idx.load();
                while (idx < cur && !best_idx.compare_exchange_weak(cur, idx)) {
                }
                if (idx <= best_idx.load()) {
                    std::lock_guard<std::mutex> lock(best_mu);
                    if (!best || idx < best->index) best = Violation{idx, odo.digits(), odo.value()};
                }
                return;
            }
            odo.step();
        }
    };
    if (chunks == 1) {
        run_chunk(1, total);
    } else {
        std::vector<std::thread> threads;
        long long per = work / chunks, extra = work % chunks, lo = 1;
        for (int c = 0; c < chunks; ++c) {
            long long hi = lo + per + (c < extra ? 1 : 0);
            threads.emplace_back(run_chunk, lo, hi);
            lo = hi;
        }
        for (auto& t : threads) t.join();
    }
    if (!best) return std::nullopt;
    return best;
}

VerifyReport verify_with(const MatrixSpace& S, VerifyMode mode, long long samples, unsigned seed,
                         int jobs, const std::function<bool(const Matrix&)>& good) {
    VerifyReport rep;
    if (S.dim() == 0) return rep;
    if (mode == VerifyMode::exhaustive) {
        long long total = span_size_capped(S);
        auto bad = sweep_for_violation(S, total, jobs, good);
        if (bad) {
            rep.ok = false;
            rep.checked = bad->index;
            rep.witness = bad->element;
            rep.witness_coeffs = bad->coeffs;
        } else {
            rep.checked = total - 1;
        }
        return rep;
    }
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> coeff(0, (int)S.field()->q() - 1);
    for (long long t = 0; t < samples; ++t) {
        std::vector<int> cs(S.dim());
        bool nonzero = false;
        for (auto& c : cs) nonzero |= (c = coeff(gen)) != 0;
        if (!nonzero) {
            --t;
            continue;
        }
        Matrix M = S.element(cs);
        ++rep.checked;
        if (!good(M)) {
            rep.ok = false;
            rep.witness = M;
            rep.witness_coeffs = cs;
            return rep;
        }
    }
    return rep;
}

}  // namespace

VerifyReport verify_delta_space(const MatrixSpace& S, int delta, VerifyMode mode,
                                long long samples, unsigned seed, int jobs) {
    return verify_with(S, mode, samples, seed, jobs,
                       [delta](const Matrix& M) { return M.rank() >= delta; });
}

VerifyReport verify_anticode(const MatrixSpace& S, int delta, VerifyMode mode, long long samples,
                             unsigned seed, int jobs) {
    return verify_with(S, mode, samples, seed, jobs,
                       [delta](const Matrix& M) { return M.rank() <= delta; });
}

std::map<int, long long> rank_distribution(const MatrixSpace& S, int jobs) {
    long long total = span_size_capped(S);
    jobs = std::max(1, (int)std::min<long long>(jobs, total));
    std::vector<std::map<int, long long>> partial(jobs);
    auto run_chunk = [&](int c, long long lo, long long hi) {
        SpanOdometer odo(S, lo);
        for (long long idx = lo; idx < hi; ++idx) {
            ++partial[c][odo.value().rank()];
            odo.step();
        }
    };
    if (jobs == 1) {
        run_chunk(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        long long per = total / jobs, extra = total % jobs, lo = 0;
        for (int c = 0; c < jobs; ++c) {
            long long hi = lo + per + (c < extra ? 1 : 0);
            threads.emplace_back(run_chunk, c, lo, hi);
            lo = hi;
        }
        for (auto& t : threads) t.join();
    }
    std::map<int, long long> out;
    for (const auto& m : partial)
        for (const auto& [r, c] : m) out[r] += c;
    return out;
}

namespace {

struct SearchState {
    FieldPtr f;
    int k, m;
    std::vector<int> cell_pos;  // row-major 0-indexed positions of the cells of F
    long long budget;
    int delta;
    long long nodes = 0;
    bool truncated = false;
    std::vector<Matrix> basis;  // strictly decreasing leading position
    std::vector<int> leads;     // row-major positions, parallel to basis
    std::vector<Matrix> best;

    // True when every combination of cand with the current span keeps rank >= delta.
    bool compatible(const Matrix& cand) const {
        MatrixSpace cur = MatrixSpace::span(f, k, m, basis);
        long long total = 1;
        for (int i = 0; i < cur.dim(); ++i) total *= f->q();
        SpanOdometer odo(cur);
        for (long long t = 0; t < total; ++t) {
            if ((cand + odo.value()).rank() < delta) return false;
            odo.step();
        }
        return true;
    }

    // min_lead: index into cell_pos below which the next leading cell must fall.
    void dfs(int min_lead) {
        if (basis.size() > best.size()) best = basis;
        const int q = (int)f->q();
        for (int lead = min_lead - 1; lead >= 0; --lead) {
            if ((int)basis.size() + 1 + lead <= (int)best.size()) break;
            std::vector<int> free_pos;
            for (int t = lead + 1; t < (int)cell_pos.size(); ++t)
                if (std::find(leads.begin(), leads.end(), cell_pos[t]) == leads.end())
                    free_pos.push_back(cell_pos[t]);
            std::vector<int> digits(free_pos.size(), 0);
            while (true) {
                if (++nodes > budget) {
                    truncated = true;
                    return;
                }
                Matrix cand(f, k, m);
                cand.set(cell_pos[lead] / m, cell_pos[lead] % m, 1);
                for (size_t t = 0; t < free_pos.size(); ++t)
                    cand.set(free_pos[t] / m, free_pos[t] % m, digits[t]);
                if (cand.rank() >= delta && compatible(cand)) {
                    basis.push_back(cand);
                    leads.push_back(cell_pos[lead]);
                    dfs(lead);
                    basis.pop_back();
                    leads.pop_back();
                    if (truncated) return;
                }
                size_t i = 0;
                while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
                if (i == digits.size()) break;
                ++digits[i];
            }
        }
    }
};

}  // namespace

SearchResult search_max_dim(const FerrersDiagram& F, int delta, const FieldPtr& f,
                            long long node_budget) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    SearchState st{f, F.k(), F.m(), {}, node_budget, delta, 0, false, {}, {}, {}};
    for (const auto& [i, j] : F.cells()) st.cell_pos.push_back((i - 1) * F.m() + (j - 1));
    std::sort(st.cell_pos.begin(), st.cell_pos.end());
    st.dfs((int)st.cell_pos.size());
    SearchResult res{(int)st.best.size(), !st.truncated, st.nodes,
                     MatrixSpace::span(f, F.k(), F.m(), st.best)};
    return res;
}

ConjectureReport check_conjecture(const FerrersDiagram& F, int delta, const FieldPtr& f,
                                  long long node_budget) {
    ConjectureReport rep;
    rep.tdelta = tdelta_ferrers(F, delta).value;
    auto built = construct_auto(F, delta, f);
    rep.constructed_dim = built.space.dim();
    if (rep.constructed_dim == rep.tdelta) {
        rep.status = "proven_attained";
        return rep;
    }
    auto searched = search_max_dim(F, delta, f, node_budget);
    rep.searched_dim = searched.max_dim;
    rep.search_certified = searched.certified;
    if (searched.certified && searched.max_dim == rep.tdelta)
        rep.status = "attained_by_search";
    else
        rep.status = "gap_unresolved";
    return rep;
}

}  // namespace fdrm
