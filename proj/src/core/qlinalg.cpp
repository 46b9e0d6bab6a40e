#include "qlinalg.hpp"

#include <map>

#include "error.hpp"

namespace rf {

std::vector<std::vector<Rat>> rational_nullspace(std::vector<std::vector<Rat>> M, int cols) {
    for (const auto& row : M)
        if ((int)row.size() != cols) throw Error(ErrCode::Invalid, "ragged matrix");
    const int rows = (int)M.size();
    std::map<int, int> pivot_row_of;  // pivot column -> row index
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        const Rat pv = M[r][c];
        for (Rat& v : M[r]) v /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Rat f = M[i][c];
            for (int k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
        }
        pivot_row_of[c] = r;
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (pivot_row_of.count(fc)) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (const auto& [c, rr] : pivot_row_of) v[c] = -M[rr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RationalCochain> cocycle_kernel_basis(const Quandle& Q, int n) {
    if (n < 1) throw Error(ErrCode::OutOfRange, "cocycle degree must be >= 1");
    const long long cols = tuple_count(Q.n, n);
    const long long rows = tuple_count(Q.n, n + 1);
    if (rows * cols > 50'000'000LL) throw Error(ErrCode::TooLarge, "kernel system too large");
    std::vector<std::vector<Rat>> M((size_t)rows, std::vector<Rat>((size_t)cols, Rat(0)));
    for (long long ridx = 0; ridx < rows; ++ridx) {
        std::vector<int> t = tuple_decode(ridx, Q.n, n + 1);
        for (int i = 1; i <= n + 1; ++i) {
            std::vector<int> s0;
            s0.reserve(n);
            for (int m = 0; m < n + 1; ++m)
                if (m != i - 1) s0.push_back(t[m]);
            std::vector<int> s1;
            s1.reserve(n);
            for (int m = 0; m < i - 1; ++m) s1.push_back(Q.op(t[m], t[i - 1]));
            for (int m = i; m < n + 1; ++m) s1.push_back(t[m]);
            const int sgn = (i % 2 == 0) ? 1 : -1;
            M[ridx][tuple_index(s0, Q.n)] += sgn;
            M[ridx][tuple_index(s1, Q.n)] -= sgn;
        }
    }
    std::vector<RationalCochain> out;
    for (auto& v : rational_nullspace(std::move(M), (int)cols)) {
        RationalCochain f(n, Q.n);
        f.values = std::move(v);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace rf
