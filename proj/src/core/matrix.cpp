#include "matrix.hpp"

#include "error.hpp"

namespace rf {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw Error(ErrCode::Invalid, "matrix product shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Int& w = B.at(k, j);
                if (w != 0) C.at(i, j) += v * w;
            }
        }
    return C;
}

void SparseMat::add(int r, int c, const Int& v) {
    if (v == 0) return;
    auto& m = row[r];
    auto it = m.find(c);
    if (it == m.end()) {
        m.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) m.erase(it);
    }
}

long long SparseMat::nnz() const {
    long long n = 0;
    for (const auto& m : row) n += (long long)m.size();
    return n;
}

IntMatrix SparseMat::to_dense() const {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) m.at(r, c) = v;
    return m;
}

SparseMat SparseMat::from_dense(const IntMatrix& m) {
    SparseMat s(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) s.row[r].emplace(c, m.at(r, c));
    return s;
}

bool sparse_product_is_zero(const SparseMat& A, const SparseMat& B) {
    if (A.cols != B.rows) throw Error(ErrCode::Invalid, "matrix product shape mismatch");
    for (int r = 0; r < A.rows; ++r) {
        std::map<int, Int> acc;
        for (const auto& [k, v] : A.row[r])
            for (const auto& [j, w] : B.row[k]) {
                Int& t = acc[j];
                t += v * w;
            }
        for (const auto& [j, t] : acc)
            if (t != 0) return false;
    }
    return true;
}

}  // namespace rf
