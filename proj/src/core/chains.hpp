#pragma once

#include <map>
#include <vector>

#include "matrix.hpp"
#include "quandle.hpp"

namespace rf {

// Tuples over {0..q-1} in lexicographic order = big-endian mixed-radix index:
// index(x1..xn) = x1*q^(n-1) + ... + xn.
long long tuple_count(int q, int degree);
long long tuple_index(const std::vector<int>& t, int q);
std::vector<int> tuple_decode(long long idx, int q, int degree);

// Finitely supported integer combination of degree-n tuples. Zero
// coefficients are never stored.
struct FormalChain {
    int degree = 0;
    std::map<std::vector<int>, Int> terms;

    void add(const std::vector<int>& t, const Int& c);
    bool empty() const { return terms.empty(); }
    bool operator==(const FormalChain& o) const = default;
};

// d(x1..xn) = sum_i (-1)^i [(x1..^xi..xn) - (x1<|xi,..,x_{i-1}<|xi, x_{i+1}..xn)].
// Degree 0 returns the empty chain.
FormalChain rack_boundary(const FormalChain& c, const Quandle& Q);

// Matrix of the boundary over the lexicographic tuple bases; rows are
// (n-1)-tuples, columns n-tuples. n = 1 gives one row for the empty tuple.
SparseMat boundary_matrix_sparse(const Quandle& Q, int n);
IntMatrix boundary_matrix(const Quandle& Q, int n);

// Total rational-valued cochain on Q^degree, indexed by tuple_index.
struct RationalCochain {
    int degree = 0;
    int q = 0;
    std::vector<Rat> values;

    RationalCochain() = default;
    RationalCochain(int deg, int q_) : degree(deg), q(q_), values(tuple_count(q_, deg)) {}

    Rat& at(long long i) { return values[i]; }
    const Rat& at(long long i) const { return values[i]; }
    bool is_zero() const;
    bool operator==(const RationalCochain& o) const = default;
};

RationalCochain cochain_add(const RationalCochain& a, const RationalCochain& b);
RationalCochain cochain_sub(const RationalCochain& a, const RationalCochain& b);
RationalCochain cochain_scale(const RationalCochain& a, const Rat& s);

// (delta f)(t) = f(dt) for every (degree+1)-tuple t.
RationalCochain coboundary(const RationalCochain& f, const Quandle& Q);
bool is_rack_cocycle(const RationalCochain& f, const Quandle& Q);

// Cocycle condition for an integer-valued cochain read mod k (k >= 1):
// every value of delta f must be an integer divisible by k.
bool is_rack_cocycle_mod(const RationalCochain& f, const Quandle& Q, const Int& k);

}  // namespace rf
