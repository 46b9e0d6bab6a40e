#pragma once

#include <array>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "matrix.hpp"
#include "snf.hpp"

namespace rf {

// torsion is the >1 part of the elementary divisor chain, in divisibility
// order.
struct HomologyResult {
    int degree = 0;
    int betti = 0;
    std::vector<Int> torsion;

    bool operator==(const HomologyResult& o) const = default;
};

// d_n: C_n -> C_{n-1}, d_np1: C_{n+1} -> C_n. Requires d_n * d_np1 = 0
// (NotAComplex otherwise). betti = dim C_n - rank d_n - rank d_np1.
HomologyResult homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1);
HomologyResult homology_of_pair_sparse(const SparseMat& d_n, const SparseMat& d_np1);

// Homology of the rack complex at degree n >= 0. d_0 is the zero map.
HomologyResult rack_homology(const Quandle& Q, int n);

// Second homology of the Alexander quandle on Z_N with unit w, computed from
// the presentation Z + (Z_N tensor Z_N)/(x@y - w*y@x): generators e_{x,y},
// bilinearity and twist relations, then SNF. Valid for connected quandles
// (gcd(1-w, N) = 1); evaluated formally for any unit.
HomologyResult clauwens_h2(long N, long w);

// Image of the generator (a,b) under n(a,b) -> (n, [(a-b)@b]), with the
// quotient coordinates SNF-normalized. Coordinate list: torsion coordinates
// in divisor order, then free coordinates; factors with divisor 1 omitted.
std::pair<Int, std::vector<Int>> clauwens_h2_class(long N, long w, long a, long b);
// Linear extension to a degree-2 chain over alexander(N, w).
std::pair<Int, std::vector<Int>> clauwens_h2_class_chain(long N, long w, const FormalChain& c);

// Rational points of the plane quandle x<|y = 2y - x.
using PlanePoint = std::array<Rat, 2>;
using PlaneTriple = std::array<PlanePoint, 3>;

// C(a, b) = a1*b2 - a2*b1. Returns (delta C)(x, y, z), identically zero.
Rat det_cocycle_coboundary(const PlaneTriple& t);

struct DetCocycleReport {
    int checked = 0;
    int failures = 0;
    std::vector<PlaneTriple> failing;
};

DetCocycleReport det_cocycle_check(const std::vector<PlaneTriple>& triples);
// Deterministic triples for a seed; numerators in [-50,50], denominators in
// [1,11].
std::vector<PlaneTriple> seeded_plane_triples(int count, unsigned long long seed);

}  // namespace rf
