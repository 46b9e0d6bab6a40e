#include "snf.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace rf {

namespace {

// Dense SNF core. When transforms are requested every row operation is
// mirrored into L/Linv and every column operation into R/Rinv.
struct DenseSnf {
    IntMatrix M;
    bool want;
    IntMatrix L, Li, R, Ri;

    explicit DenseSnf(IntMatrix m, bool with_transforms) : M(std::move(m)), want(with_transforms) {
        if (want) {
            L = IntMatrix::identity(M.rows);
            Li = IntMatrix::identity(M.rows);
            R = IntMatrix::identity(M.cols);
            Ri = IntMatrix::identity(M.cols);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
        if (want) {
            for (int c = 0; c < L.cols; ++c) std::swap(L.at(i, c), L.at(j, c));
            for (int r = 0; r < Li.rows; ++r) std::swap(Li.at(r, i), Li.at(r, j));
        }
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
        if (want) {
            for (int r = 0; r < R.rows; ++r) std::swap(R.at(r, i), R.at(r, j));
            for (int c = 0; c < Ri.cols; ++c) std::swap(Ri.at(i, c), Ri.at(j, c));
        }
    }

    // row i -= q * row r
    void row_sub(int i, int r, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < M.cols; ++c) M.at(i, c) -= q * M.at(r, c);
        if (want) {
            for (int c = 0; c < L.cols; ++c) L.at(i, c) -= q * L.at(r, c);
            for (int rr = 0; rr < Li.rows; ++rr) Li.at(rr, r) += q * Li.at(rr, i);
        }
    }

    // col j -= q * col r
    void col_sub(int j, int r, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, r);
        if (want) {
            for (int i = 0; i < R.rows; ++i) R.at(i, j) -= q * R.at(i, r);
            for (int c = 0; c < Ri.cols; ++c) Ri.at(r, c) += q * Ri.at(j, c);
        }
    }

    // row i += row b (divisibility fixup)
    void row_add(int i, int b) {
        for (int c = 0; c < M.cols; ++c) M.at(i, c) += M.at(b, c);
        if (want) {
            for (int c = 0; c < L.cols; ++c) L.at(i, c) += L.at(b, c);
            for (int rr = 0; rr < Li.rows; ++rr) Li.at(rr, b) -= Li.at(rr, i);
        }
    }

    void negate_row(int i) {
        for (int c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
        if (want) {
            for (int c = 0; c < L.cols; ++c) L.at(i, c) = -L.at(i, c);
            for (int rr = 0; rr < Li.rows; ++rr) Li.at(rr, i) = -Li.at(rr, i);
        }
    }

    std::vector<Int> run() {
        std::vector<Int> diag;
        const int m = M.rows, n = M.cols;
        int r = 0;
        while (r < std::min(m, n)) {
            int pi = -1, pj = -1;
            Int best;
            for (int i = r; i < m; ++i)
                for (int j = r; j < n; ++j) {
                    const Int& v = M.at(i, j);
                    if (v == 0) continue;
                    Int av = v < 0 ? -v : v;
                    if (pi < 0 || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            swap_rows(r, pi);
            swap_cols(r, pj);
            while (true) {
                bool changed = false;
                for (int i = r + 1; i < m; ++i) {
                    if (M.at(i, r) != 0) {
                        Int q = floordiv(M.at(i, r), M.at(r, r));
                        if (q != 0) {
                            row_sub(i, r, q);
                            changed = true;
                        }
                        if (M.at(i, r) != 0) {
                            // remainder becomes the new, smaller pivot
                            swap_rows(r, i);
                            changed = true;
                        }
                    }
                }
                bool col_dirty = false;
                for (int i = r + 1; i < m; ++i)
                    if (M.at(i, r) != 0) col_dirty = true;
                if (col_dirty) continue;
                for (int j = r + 1; j < n; ++j) {
                    if (M.at(r, j) != 0) {
                        Int q = floordiv(M.at(r, j), M.at(r, r));
                        if (q != 0) {
                            col_sub(j, r, q);
                            changed = true;
                        }
                        if (M.at(r, j) != 0) {
                            swap_cols(r, j);
                            changed = true;
                        }
                    }
                }
                bool dirty = false;
                for (int i = r + 1; i < m; ++i)
                    if (M.at(i, r) != 0) dirty = true;
                for (int j = r + 1; j < n; ++j)
                    if (M.at(r, j) != 0) dirty = true;
                if (dirty) continue;
                (void)changed;
                break;
            }
            const Int d = M.at(r, r);
            int bad = -1;
            for (int i = r + 1; i < m && bad < 0; ++i)
                for (int j = r + 1; j < n; ++j)
                    if (M.at(i, j) % d != 0) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                row_add(r, bad);
                continue;
            }
            if (M.at(r, r) < 0) negate_row(r);
            diag.push_back(M.at(r, r));
            ++r;
        }
        return diag;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M) {
    DenseSnf s(M, true);
    SnfResult out;
    out.diagonal = s.run();
    out.left = std::move(s.L);
    out.left_inv = std::move(s.Li);
    out.right = std::move(s.R);
    out.right_inv = std::move(s.Ri);
    return out;
}

std::vector<Int> snf_diagonal(const SparseMat& M_in) {
    const int nrows = M_in.rows, ncols = M_in.cols;
    std::vector<std::map<int, Int>> rows = M_in.row;
    std::vector<std::set<int>> colrows(ncols);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) colrows[c].insert(r);
    std::vector<char> row_active(nrows, 1);
    int ones = 0;

    while (true) {
        // pivot: |v| = 1 with minimum ((nnz_row-1)*(nnz_col-1), r, c)
        long long best_cost = -1;
        int bp = -1, bq = -1;
        for (int r = 0; r < nrows; ++r) {
            if (!row_active[r] || rows[r].empty()) continue;
            const long long nr = (long long)rows[r].size();
            for (const auto& [c, v] : rows[r]) {
                if (v == 1 || v == -1) {
                    long long cost = (nr - 1) * ((long long)colrows[c].size() - 1);
                    if (bp < 0 || cost < best_cost) {
                        best_cost = cost;
                        bp = r;
                        bq = c;
                    }
                }
            }
        }
        if (bp < 0) break;
        const int p = bp, q = bq;
        const Int pv = rows[p].at(q);  // +1 or -1
        std::vector<int> col_members(colrows[q].begin(), colrows[q].end());
        for (int r : col_members) {
            if (r == p) continue;
            Int f = rows[r].at(q) * pv;
            for (const auto& [c, v] : rows[p]) {
                auto it = rows[r].find(c);
                Int nv = (it == rows[r].end() ? Int(0) : it->second) - f * v;
                if (nv != 0) {
                    if (it == rows[r].end()) {
                        rows[r].emplace(c, std::move(nv));
                        colrows[c].insert(r);
                    } else {
                        it->second = std::move(nv);
                    }
                } else if (it != rows[r].end()) {
                    rows[r].erase(it);
                    colrows[c].erase(r);
                }
            }
        }
        for (const auto& [c, v] : rows[p]) colrows[c].erase(p);
        rows[p].clear();
        row_active[p] = 0;
        ++ones;
    }

    // residual block, compressed
    std::vector<int> live_rows;
    std::set<int> live_col_set;
    for (int r = 0; r < nrows; ++r)
        if (row_active[r] && !rows[r].empty()) {
            live_rows.push_back(r);
            for (const auto& [c, v] : rows[r]) live_col_set.insert(c);
        }
    std::vector<int> live_cols(live_col_set.begin(), live_col_set.end());
    std::map<int, int> ci;
    for (int i = 0; i < (int)live_cols.size(); ++i) ci[live_cols[i]] = i;
    IntMatrix res((int)live_rows.size(), (int)live_cols.size());
    for (int i = 0; i < (int)live_rows.size(); ++i)
        for (const auto& [c, v] : rows[live_rows[i]]) res.at(i, ci[c]) = v;

    DenseSnf tail(std::move(res), false);
    std::vector<Int> diag(ones, Int(1));
    for (Int& d : tail.run()) diag.push_back(std::move(d));
    return diag;
}

}  // namespace rf
