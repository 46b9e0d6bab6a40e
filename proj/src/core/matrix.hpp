#pragma once

#include <map>
#include <vector>

#include "ints.hpp"

namespace rf {

// Dense row-major integer matrix. Entries are arbitrary precision.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static IntMatrix identity(int n);
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);

// Sparse rows keyed by column. std::map keeps iteration deterministic, which
// the SNF pivot rules rely on.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Int>> row;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

    // Adds v at (r,c), erasing the entry if it cancels to zero.
    void add(int r, int c, const Int& v);
    long long nnz() const;
    IntMatrix to_dense() const;
    static SparseMat from_dense(const IntMatrix& m);
};

// Returns A*B over sparse representations; used for complex checks.
bool sparse_product_is_zero(const SparseMat& A, const SparseMat& B);

}  // namespace rf
