#include "delta.hpp"

#include <algorithm>

#include "error.hpp"

namespace rf {

namespace {
constexpr long long kSimplexBudget = 5'000'000;
}

std::vector<Blocks> ordered_partitions(int n, int k) {
    if (k < 1 || k > n) throw Error(ErrCode::Invalid, "partition arity out of range");
    std::vector<Blocks> out;
    std::vector<int> f(n, 1);
    while (true) {
        int distinct = 0;
        std::vector<char> seen(k + 1, 0);
        for (int v : f)
            if (!seen[v]) {
                seen[v] = 1;
                ++distinct;
            }
        if (distinct == k) {
            Blocks b(k);
            for (int i = 0; i < n; ++i) b[f[i] - 1].push_back(i + 1);
            out.push_back(std::move(b));
        }
        int pos = n - 1;
        while (pos >= 0 && f[pos] == k) {
            f[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++f[pos];
    }
    return out;
}

DeltaSet triangulate(const CubicalSet& X) {
    DeltaSet D;
    D.X = &X;
    const int P = X.P;
    D.max_degree = P;
    D.parts.resize(P + 1);
    D.pindex.resize(P + 1);
    D.offsets.resize(P + 1);
    D.counts.assign(P + 1, 0);
    for (int k = 0; k <= P; ++k) {
        if (k == 0) {
            // degree 0 is the 0-cells with the empty partition
            D.counts[0] = X.cells(0);
            continue;
        }
        D.parts[k].resize(P - k + 1);
        D.pindex[k].resize(P - k + 1);
        D.offsets[k].resize(P - k + 1);
        long long acc = 0;
        for (int n = k; n <= P; ++n) {
            auto ps = ordered_partitions(n, k);
            std::map<Blocks, int> idx;
            for (int i = 0; i < (int)ps.size(); ++i) idx.emplace(ps[i], i);
            D.offsets[k][n - k] = acc;
            acc += X.cells(n) * (long long)ps.size();
            D.parts[k][n - k] = std::move(ps);
            D.pindex[k][n - k] = std::move(idx);
        }
        D.counts[k] = acc;
        if (acc > kSimplexBudget) throw Error(ErrCode::TooLarge, "triangulation exceeds the simplex budget");
    }
    return D;
}

DeltaSet::Simplex DeltaSet::simplex(int k, long long idx) const {
    if (k == 0) return {0, idx, 0};
    for (int n = max_degree; n >= k; --n) {
        if (idx >= offsets[k][n - k]) {
            long long rel = idx - offsets[k][n - k];
            const long long np = (long long)parts[k][n - k].size();
            return {n, rel / np, (int)(rel % np)};
        }
    }
    throw Error(ErrCode::Invalid, "simplex index out of range");
}

long long DeltaSet::sindex(int k, int n, long long cell, int pi) const {
    if (k == 0) return cell;
    return offsets[k][n - k] + cell * (long long)parts[k][n - k].size() + pi;
}

long long DeltaSet::face(int k, long long idx, int i) const {
    const Simplex s = simplex(k, idx);
    const Blocks& blocks = parts[k][s.n - k][s.pi];
    if (0 < i && i < k) {
        Blocks nb;
        nb.reserve(k - 1);
        for (int b = 0; b < i - 1; ++b) nb.push_back(blocks[b]);
        std::vector<int> merged = blocks[i - 1];
        merged.insert(merged.end(), blocks[i].begin(), blocks[i].end());
        std::sort(merged.begin(), merged.end());
        nb.push_back(std::move(merged));
        for (int b = i + 1; b < k; ++b) nb.push_back(blocks[b]);
        return sindex(k - 1, s.n, s.cell, pindex[k - 1][s.n - (k - 1)].at(nb));
    }
    // outer faces: composite cubical face over the first (eps=1) or last
    // (eps=0) block, applied by descending index, then relabel survivors
    const std::vector<int>& S = (i == 0) ? blocks.front() : blocks.back();
    const int eps = (i == 0) ? 1 : 0;
    long long c2 = s.cell;
    std::vector<int> sorted_S = S;
    std::sort(sorted_S.begin(), sorted_S.end(), std::greater<int>());
    for (int j : sorted_S) {
        int removed_above = 0;
        for (int v : S)
            if (v > j) ++removed_above;
        c2 = X->face(s.n - removed_above, c2, j, eps);
    }
    const int n2 = s.n - (int)S.size();
    if (k - 1 == 0) return sindex(0, 0, c2, 0);
    Blocks rel;
    rel.reserve(k - 1);
    for (int b = (i == 0) ? 1 : 0; b < ((i == 0) ? k : k - 1); ++b) {
        std::vector<int> nbv;
        nbv.reserve(blocks[b].size());
        for (int t : blocks[b]) {
            int below = 0;
            for (int v : S)
                if (v < t) ++below;
            nbv.push_back(t - below);
        }
        rel.push_back(std::move(nbv));
    }
    return sindex(k - 1, n2, c2, pindex[k - 1][n2 - (k - 1)].at(rel));
}

SparseMat delta_boundary_matrix(const DeltaSet& D, int k) {
    if (k < 1 || k > D.max_degree) throw Error(ErrCode::OutOfRange, "boundary degree outside truncation");
    const long long rows = D.simplex_count(k - 1);
    const long long cols = D.simplex_count(k);
    SparseMat M((int)rows, (int)cols);
    for (long long idx = 0; idx < cols; ++idx)
        for (int i = 0; i <= k; ++i) M.add((int)D.face(k, idx, i), (int)idx, (i % 2 == 0) ? 1 : -1);
    return M;
}

IdentityScanReport simplicial_identity_scan(const DeltaSet& D) {
    IdentityScanReport rep;
    for (int k = 2; k <= D.max_degree; ++k) {
        const long long nc = D.simplex_count(k);
        for (long long idx = 0; idx < nc; ++idx)
            for (int i = 0; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    if (D.face(k - 1, D.face(k, idx, j), i) != D.face(k - 1, D.face(k, idx, i), j - 1)) {
                        rep.ok = false;
                        rep.witness = {k, idx, i, j};
                        return rep;
                    }
    }
    return rep;
}

HomologyResult delta_homology(const DeltaSet& D, int n) {
    if (n < 0 || n > D.max_degree - 1) throw Error(ErrCode::OutOfRange, "homology degree outside truncation");
    SparseMat d_n = n == 0 ? SparseMat(0, (int)D.simplex_count(0)) : delta_boundary_matrix(D, n);
    SparseMat d_np1 = delta_boundary_matrix(D, n + 1);
    HomologyResult h = homology_of_pair_sparse(d_n, d_np1);
    h.degree = n;
    return h;
}

PointImage phi_point(const std::vector<Rat>& t) {
    const int p = (int)t.size();
    for (const Rat& v : t)
        if (v < 0 || v > 1) throw Error(ErrCode::OutOfRange, "cube coordinate outside [0,1]");
    PointImage out;
    out.order.resize(p);
    for (int i = 0; i < p; ++i) out.order[i] = i + 1;
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (t[a - 1] != t[b - 1]) return t[a - 1] > t[b - 1];
        return a < b;
    });
    out.barycentric.reserve(p + 1);
    Rat prev = 1;
    for (int i : out.order) {
        out.barycentric.push_back(prev - t[i - 1]);
        prev = t[i - 1];
    }
    out.barycentric.push_back(prev);
    return out;
}

std::vector<Rat> psi_point(const std::vector<Rat>& b, const Blocks& blocks, int n) {
    const int k = (int)blocks.size();
    if ((int)b.size() != k + 1) throw Error(ErrCode::Invalid, "barycentric length does not match partition");
    std::vector<int> block_of(n + 1, -1);
    for (int j = 0; j < k; ++j)
        for (int i : blocks[j]) {
            if (i < 1 || i > n || block_of[i] != -1) throw Error(ErrCode::Invalid, "bad partition");
            block_of[i] = j + 1;
        }
    // suffix[j] = b_j + .. + b_k
    std::vector<Rat> suffix(k + 2, Rat(0));
    for (int j = k; j >= 0; --j) suffix[j] = suffix[j + 1] + b[j];
    std::vector<Rat> t(n);
    for (int i = 1; i <= n; ++i) {
        if (block_of[i] < 0) throw Error(ErrCode::Invalid, "partition does not cover the index set");
        t[i - 1] = suffix[block_of[i]];
    }
    return t;
}

}  // namespace rf
