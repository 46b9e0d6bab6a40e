#include "cubical.hpp"

#include "chains.hpp"
#include "error.hpp"

namespace rf {

namespace {
constexpr long long kCellBudget = 5'000'000;
}

long long CubicalSet::cells(int p) const {
    long long c = ysize();
    for (int i = 0; i < p; ++i) c *= Q->n;
    return c;
}

std::vector<int> CubicalSet::decode(int p, long long idx) const {
    std::vector<int> yx(p + 1);
    for (int i = p; i >= 1; --i) {
        yx[i] = (int)(idx % Q->n);
        idx /= Q->n;
    }
    yx[0] = (int)idx;
    return yx;
}

long long CubicalSet::encode(const std::vector<int>& yx) const {
    long long idx = yx[0];
    for (size_t i = 1; i < yx.size(); ++i) idx = idx * Q->n + yx[i];
    return idx;
}

long long CubicalSet::face(int p, long long idx, int j, int eps) const {
    std::vector<int> yx = decode(p, idx);
    const int xj = yx[j];
    std::vector<int> out;
    out.reserve(p);
    if (eps == 0) {
        out.push_back(yx[0]);
        for (int m = 1; m <= p; ++m)
            if (m != j) out.push_back(yx[m]);
    } else {
        out.push_back(y_is_quandle ? Q->op(yx[0], xj) : 0);
        for (int m = 1; m < j; ++m) out.push_back(Q->op(yx[m], xj));
        for (int m = j + 1; m <= p; ++m) out.push_back(yx[m]);
    }
    return encode(out);
}

CubicalSet rack_space(const Quandle& Q, bool y_is_quandle, int P) {
    if (P < 1) throw Error(ErrCode::Invalid, "truncation degree must be >= 1");
    CubicalSet X;
    X.Q = &Q;
    X.P = P;
    X.y_is_quandle = y_is_quandle;
    long long top = X.ysize();
    for (int i = 0; i < P; ++i) {
        top *= Q.n;
        if (top > kCellBudget) throw Error(ErrCode::TooLarge, "rack space truncation exceeds the cell budget");
    }
    return X;
}

IdentityScanReport cubical_identity_scan(const CubicalSet& X) {
    IdentityScanReport rep;
    for (int p = 2; p <= X.P; ++p) {
        const long long nc = X.cells(p);
        for (long long idx = 0; idx < nc; ++idx)
            for (int i = 1; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    for (int eps = 0; eps < 2; ++eps)
                        for (int eta = 0; eta < 2; ++eta) {
                            const long long a = X.face(p - 1, X.face(p, idx, j, eta), i, eps);
                            const long long b = X.face(p - 1, X.face(p, idx, i, eps), j - 1, eta);
                            if (a != b) {
                                rep.ok = false;
                                rep.witness = {p, idx, i, j, eps, eta};
                                return rep;
                            }
                        }
    }
    return rep;
}

SparseMat cubical_boundary_matrix(const CubicalSet& X, int p) {
    if (p < 1 || p > X.P) throw Error(ErrCode::OutOfRange, "boundary degree outside truncation");
    const long long rows = X.cells(p - 1);
    const long long cols = X.cells(p);
    SparseMat M((int)rows, (int)cols);
    for (long long idx = 0; idx < cols; ++idx)
        for (int i = 1; i <= p; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            M.add((int)X.face(p, idx, i, 0), (int)idx, sign);
            M.add((int)X.face(p, idx, i, 1), (int)idx, -sign);
        }
    return M;
}

HomologyResult cubical_homology(const CubicalSet& X, int n) {
    if (n < 0 || n > X.P - 1) throw Error(ErrCode::OutOfRange, "homology degree outside truncation");
    SparseMat d_n = n == 0 ? SparseMat(0, (int)X.cells(0)) : cubical_boundary_matrix(X, n);
    SparseMat d_np1 = cubical_boundary_matrix(X, n + 1);
    HomologyResult h = homology_of_pair_sparse(d_n, d_np1);
    h.degree = n;
    return h;
}

}  // namespace rf
