#pragma once

#include <optional>
#include <vector>

#include "homology.hpp"
#include "quandle.hpp"

namespace rf {

// Truncated cubical set of a rack space. Cells at degree p are Y x Q^p with
// Y either a point or Q itself acting by y -> y<|x. Cell index is
// y * q^p + (big-endian tuple index), so cells are in lexicographic order.
// Holds a non-owning pointer: the quandle must outlive the set.
struct CubicalSet {
    const Quandle* Q = nullptr;
    int P = 0;
    bool y_is_quandle = false;

    int ysize() const { return y_is_quandle ? Q->n : 1; }
    long long cells(int p) const;

    // j in 1..p. eps = 0 drops slot j; eps = 1 also acts on y and on the
    // slots left of j.
    long long face(int p, long long idx, int j, int eps) const;

    std::vector<int> decode(int p, long long idx) const;  // [y, x1..xp]
    long long encode(const std::vector<int>& yx) const;
};

// Throws TruncationTooLarge via ErrCode::TooLarge if the top degree exceeds
// the cell budget.
CubicalSet rack_space(const Quandle& Q, bool y_is_quandle, int P);

struct IdentityScanReport {
    bool ok = true;
    // (p, cell, i, j, eps, eta) of the first failure
    std::vector<long long> witness;
};

IdentityScanReport cubical_identity_scan(const CubicalSet& X);

SparseMat cubical_boundary_matrix(const CubicalSet& X, int p);

// Degree n homology of the cellular complex, n <= P-1 (DegreeOutOfTruncation
// via ErrCode::OutOfRange otherwise).
HomologyResult cubical_homology(const CubicalSet& X, int n);

}  // namespace rf
