#pragma once

#include <map>
#include <vector>

#include "cubical.hpp"

namespace rf {

// Ordered partition of {1..n} into nonempty blocks, 1-based members.
using Blocks = std::vector<std::vector<int>>;

// All k-partitions of [n], enumerated as surjections [n] -> [k] in lex order
// of (f(1)..f(n)); blocks collect the preimages.
std::vector<Blocks> ordered_partitions(int n, int k);

// Triangulation of a truncated cubical set. A k-simplex is (n, cell,
// partition index) with n in [k..P]; simplices are ordered by (n, cell,
// partition index), which makes positions computable from offsets.
// Holds a non-owning pointer: the cubical set must outlive the triangulation.
struct DeltaSet {
    const CubicalSet* X = nullptr;
    int max_degree = 0;
    // parts[k][n - k] lists the k-partitions of [n]
    std::vector<std::vector<std::vector<Blocks>>> parts;
    std::vector<std::vector<std::map<Blocks, int>>> pindex;
    // offsets[k][n - k] is the index of the first (n, 0, 0) simplex
    std::vector<std::vector<long long>> offsets;
    std::vector<long long> counts;

    long long simplex_count(int k) const { return counts[k]; }

    struct Simplex {
        int n;
        long long cell;
        int pi;
    };
    Simplex simplex(int k, long long idx) const;
    long long sindex(int k, int n, long long cell, int pi) const;

    // i in 0..k. Outer faces push a composite cubical face through the first
    // or last block; inner faces merge adjacent blocks.
    long long face(int k, long long idx, int i) const;
};

DeltaSet triangulate(const CubicalSet& X);

SparseMat delta_boundary_matrix(const DeltaSet& D, int k);

IdentityScanReport simplicial_identity_scan(const DeltaSet& D);

// n <= max_degree - 1 (DegreeOutOfTruncation via ErrCode::OutOfRange).
HomologyResult delta_homology(const DeltaSet& D, int n);

// Barycentric image of a point of the p-cube: coordinates sorted descending
// (ties by ascending index), b = (1 - t_{i1}, t_{i1} - t_{i2}, .., t_{ik}),
// simplex partition = singletons in sorted order. Coordinates must lie in
// [0,1] (CoordinateOutOfRange via ErrCode::OutOfRange).
struct PointImage {
    std::vector<Rat> barycentric;
    std::vector<int> order;  // singleton blocks, 1-based cube indices
};
PointImage phi_point(const std::vector<Rat>& t);

// Inverse realization: t_i = sum of barycentric masses from the block of i
// onward. blocks is any ordered partition of [n].
std::vector<Rat> psi_point(const std::vector<Rat>& b, const Blocks& blocks, int n);

}  // namespace rf
