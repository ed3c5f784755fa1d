#include "khoma/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <map>

namespace khoma {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(dense.size());
    m.cols = m.rows == 0 ? 0 : static_cast<int>(dense[0].size());
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(dense[static_cast<size_t>(i)].size()) != m.cols)
            throw error("ragged dense matrix");
        for (int j = 0; j < m.cols; ++j) {
            std::int64_t v = dense[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v != 0)
                m.entries.push_back(Triplet{i, j, v});
        }
    }
    return m;
}

std::vector<std::int64_t> SmithResult::torsion() const {
    std::vector<std::int64_t> t;
    for (std::int64_t d : divisors)
        if (d > 1)
            t.push_back(d);
    return t;
}

namespace {

using Column = std::vector<std::pair<int, std::int64_t>>; // (row, value), sorted by row

std::int64_t column_value(const Column& col, int row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    return (it != col.end() && it->first == row) ? it->second : 0;
}

// The dense remainder works in 128 bits: elimination grows entries faster
// than the sparse unit phase, and the contract stays "exact or loud".
using Wide = __int128;

Wide wide_sub_mul(Wide a, Wide q, Wide b) {
    Wide prod, res;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &res))
        throw overflow_error("integer overflow in smith reduction");
    return res;
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// Diagonalization of the dense remainder left after unit-pivot elimination.
std::vector<std::int64_t> dense_snf(std::vector<std::vector<Wide>> a) {
    std::vector<std::int64_t> divisors;
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int s = 0;
    while (s < rows && s < cols) {
        int pi = -1, pj = -1;
        Wide best = 0;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                Wide v = wide_abs(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        std::swap(a[static_cast<size_t>(s)], a[static_cast<size_t>(pi)]);
        for (int i = 0; i < rows; ++i)
            std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(s)],
                      a[static_cast<size_t>(i)][static_cast<size_t>(pj)]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = s + 1; i < rows; ++i) {
                Wide v = a[static_cast<size_t>(i)][static_cast<size_t>(s)];
                if (v == 0)
                    continue;
                Wide q = v / a[static_cast<size_t>(s)][static_cast<size_t>(s)];
                if (q != 0)
                    for (int j = s; j < cols; ++j)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            wide_sub_mul(a[static_cast<size_t>(i)][static_cast<size_t>(j)], q,
                                         a[static_cast<size_t>(s)][static_cast<size_t>(j)]);
                if (a[static_cast<size_t>(i)][static_cast<size_t>(s)] != 0) {
                    std::swap(a[static_cast<size_t>(s)], a[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            for (int j = s + 1; j < cols; ++j) {
                Wide v = a[static_cast<size_t>(s)][static_cast<size_t>(j)];
                if (v == 0)
                    continue;
                Wide q = v / a[static_cast<size_t>(s)][static_cast<size_t>(s)];
                if (q != 0)
                    for (int i = s; i < rows; ++i)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            wide_sub_mul(a[static_cast<size_t>(i)][static_cast<size_t>(j)], q,
                                         a[static_cast<size_t>(i)][static_cast<size_t>(s)]);
                if (a[static_cast<size_t>(s)][static_cast<size_t>(j)] != 0) {
                    for (int i = 0; i < rows; ++i)
                        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(s)],
                                  a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Pivot must divide the rest of the submatrix for the chain.
            Wide p = a[static_cast<size_t>(s)][static_cast<size_t>(s)];
            for (int i = s + 1; i < rows && clean; ++i)
                for (int j = s + 1; j < cols; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % p != 0) {
                        for (int jj = s; jj < cols; ++jj)
                            a[static_cast<size_t>(s)][static_cast<size_t>(jj)] =
                                wide_sub_mul(a[static_cast<size_t>(s)][static_cast<size_t>(jj)],
                                             -1, a[static_cast<size_t>(i)][static_cast<size_t>(jj)]);
                        clean = false;
                        break;
                    }
        }
        Wide d = wide_abs(a[static_cast<size_t>(s)][static_cast<size_t>(s)]);
        if (d > static_cast<Wide>(INT64_MAX))
            throw overflow_error("invariant factor exceeds 64 bits");
        divisors.push_back(static_cast<std::int64_t>(d));
        ++s;
    }
    return divisors;
}

// Sparse workspace for the unit-pivot phase.  Pivots are chosen by lazy
// Markowitz scoring (fewest fill-in candidates first); row occupancy counts
// are exact, row->column membership lists may carry stale ids.
struct Workspace {
    std::vector<Column> cols;
    std::vector<std::vector<int>> row_cols;
    std::vector<int> row_nnz;
    std::vector<bool> col_active;
    std::vector<bool> row_active;

    struct Candidate {
        std::int64_t score;
        int row;
        int col;
        bool operator>(const Candidate& o) const { return score > o.score; }
    };
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>> heap;

    std::int64_t score(int r, int c) const {
        return static_cast<std::int64_t>(row_nnz[static_cast<size_t>(r)] - 1) *
               static_cast<std::int64_t>(cols[static_cast<size_t>(c)].size() - 1);
    }

    void push_unit(int row, int col) { heap.push(Candidate{score(row, col), row, col}); }

    void note_entry(int row, int col, std::int64_t v) {
        row_cols[static_cast<size_t>(row)].push_back(col);
        ++row_nnz[static_cast<size_t>(row)];
        if (v == 1 || v == -1)
            push_unit(row, col);
    }

    // col_j -= f * col_c, merging sorted columns.
    void axpy(int j, std::int64_t f, const Column& base) {
        Column& dst = cols[static_cast<size_t>(j)];
        Column merged;
        merged.reserve(dst.size() + base.size());
        size_t x = 0, y = 0;
        while (x < dst.size() || y < base.size()) {
            if (y == base.size() || (x < dst.size() && dst[x].first < base[y].first)) {
                merged.push_back(dst[x++]);
            } else if (x == dst.size() || base[y].first < dst[x].first) {
                std::int64_t v = checked_mul(-f, base[y].second);
                merged.emplace_back(base[y].first, v);
                note_entry(base[y].first, j, v);
                ++y;
            } else {
                std::int64_t v = checked_sub(dst[x].second, checked_mul(f, base[y].second));
                if (v != 0) {
                    merged.emplace_back(dst[x].first, v);
                    if (v == 1 || v == -1)
                        push_unit(dst[x].first, j);
                } else {
                    --row_nnz[static_cast<size_t>(dst[x].first)];
                }
                ++x;
                ++y;
            }
        }
        dst = std::move(merged);
    }
};

} // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
    Workspace ws;
    ws.cols.assign(static_cast<size_t>(m.cols), {});
    ws.row_cols.assign(static_cast<size_t>(m.rows), {});
    ws.row_nnz.assign(static_cast<size_t>(m.rows), 0);
    ws.col_active.assign(static_cast<size_t>(m.cols), true);
    ws.row_active.assign(static_cast<size_t>(m.rows), true);

    {
        std::vector<Triplet> sorted = m.entries;
        std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
            return std::tie(a.col, a.row) < std::tie(b.col, b.row);
        });
        for (size_t i = 0; i < sorted.size(); ++i) {
            const Triplet& t = sorted[i];
            if (t.row < 0 || t.row >= m.rows || t.col < 0 || t.col >= m.cols)
                throw error("matrix entry out of range");
            if (i > 0 && sorted[i - 1].col == t.col && sorted[i - 1].row == t.row)
                throw error("duplicate matrix entry");
            if (t.value == 0)
                continue;
            ws.cols[static_cast<size_t>(t.col)].emplace_back(t.row, t.value);
            ws.row_cols[static_cast<size_t>(t.row)].push_back(t.col);
            ++ws.row_nnz[static_cast<size_t>(t.row)];
        }
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [r, v] : ws.cols[static_cast<size_t>(c)])
                if (v == 1 || v == -1)
                    ws.push_unit(r, c);
    }

    int unit_rank = 0;
    auto eliminate = [&](int r, int c, std::int64_t v) {
        const Column base = ws.cols[static_cast<size_t>(c)]; // copy: source of the axpy
        auto& carrying = ws.row_cols[static_cast<size_t>(r)];
        std::vector<int> targets;
        targets.reserve(carrying.size());
        for (int j : carrying)
            if (j != c && ws.col_active[static_cast<size_t>(j)])
                targets.push_back(j);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int j : targets) {
            std::int64_t a = column_value(ws.cols[static_cast<size_t>(j)], r);
            if (a == 0)
                continue; // stale occupancy
            ws.axpy(j, checked_mul(a, v), base); // v in {1,-1} is its own inverse
        }
        for (const auto& [rr, vv] : base)
            --ws.row_nnz[static_cast<size_t>(rr)];
        ws.col_active[static_cast<size_t>(c)] = false;
        ws.row_active[static_cast<size_t>(r)] = false;
        ws.cols[static_cast<size_t>(c)].clear();
        carrying.clear();
        ws.row_nnz[static_cast<size_t>(r)] = 0;
        ++unit_rank;
    };

    for (;;) {
        int best_r = -1, best_c = -1;
        std::int64_t best_v = 0;
        while (!ws.heap.empty()) {
            Workspace::Candidate cand = ws.heap.top();
            ws.heap.pop();
            if (!ws.row_active[static_cast<size_t>(cand.row)] ||
                !ws.col_active[static_cast<size_t>(cand.col)])
                continue;
            std::int64_t v = column_value(ws.cols[static_cast<size_t>(cand.col)], cand.row);
            if (v != 1 && v != -1)
                continue; // stale value
            std::int64_t current = ws.score(cand.row, cand.col);
            if (current > cand.score) {
                ws.heap.push(Workspace::Candidate{current, cand.row, cand.col});
                continue;
            }
            best_r = cand.row;
            best_c = cand.col;
            best_v = v;
            break;
        }
        if (best_r < 0) {
            // Heap exhausted; one full rescan catches any unit it missed.
            bool found = false;
            for (int c = 0; c < m.cols && !found; ++c) {
                if (!ws.col_active[static_cast<size_t>(c)])
                    continue;
                for (const auto& [r, v] : ws.cols[static_cast<size_t>(c)])
                    if (v == 1 || v == -1) {
                        best_r = r;
                        best_c = c;
                        best_v = v;
                        found = true;
                        break;
                    }
            }
            if (!found)
                break;
        }
        eliminate(best_r, best_c, best_v);
    }

    // Compact the remaining core and finish densely.
    std::map<int, int> row_index;
    std::vector<std::vector<Wide>> core;
    {
        std::vector<std::vector<std::pair<int, std::int64_t>>> remaining;
        for (int c = 0; c < m.cols; ++c) {
            if (!ws.col_active[static_cast<size_t>(c)] || ws.cols[static_cast<size_t>(c)].empty())
                continue;
            remaining.push_back(ws.cols[static_cast<size_t>(c)]);
            for (const auto& [r, v] : remaining.back())
                row_index.try_emplace(r, 0);
        }
        int next = 0;
        for (auto& [r, idx] : row_index)
            idx = next++;
        if (!remaining.empty()) {
            if (static_cast<std::int64_t>(row_index.size()) *
                    static_cast<std::int64_t>(remaining.size()) >
                8'000'000)
                throw error("smith_normal_form: remainder after unit elimination too large");
            core.assign(row_index.size(), std::vector<Wide>(remaining.size(), 0));
            for (size_t j = 0; j < remaining.size(); ++j)
                for (const auto& [r, v] : remaining[j])
                    core[static_cast<size_t>(row_index[r])][j] = v;
        }
    }

    SmithResult result;
    result.divisors.assign(static_cast<size_t>(unit_rank), 1);
    for (std::int64_t d : dense_snf(std::move(core)))
        result.divisors.push_back(d);
    return result;
}

} // namespace khoma
