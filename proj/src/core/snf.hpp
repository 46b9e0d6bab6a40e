#pragma once

#include <vector>

#include "matrix.hpp"

namespace rf {

// left * M * right = diag(diagonal) padded with zeros. diagonal entries are
// positive and form a divisibility chain (1s included, zeros omitted).
// left/right are built from elementary operations, so they are unimodular by
// construction; the inverses are accumulated alongside and satisfy
// left * left_inv = I and right_inv * right = I exactly.
struct SnfResult {
    std::vector<Int> diagonal;
    IntMatrix left, right;
    IntMatrix left_inv, right_inv;
};

// Dense SNF with transforms. Deterministic: pivot is the minimum
// (|value|, row, col) of the remaining block; reduction uses floored
// quotients; a divisibility violation is repaired by adding the offending
// row to the pivot row and re-reducing.
SnfResult smith_normal_form(const IntMatrix& M);

// Diagonal-only fast path for large sparse matrices. Phase A eliminates
// |pivot| = 1 entries chosen by minimum ((nnz_row-1)*(nnz_col-1), row, col);
// phase B runs the dense algorithm on the residual block. Same invariant
// factors as smith_normal_form.
std::vector<Int> snf_diagonal(const SparseMat& M);

inline int snf_rank(const std::vector<Int>& diag) { return (int)diag.size(); }

}  // namespace rf
