#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace rf {

// Finite quandle on {0..n-1}. table[x*n+y] = x<|y, inv_table[x*n+y] = the
// unique z with z<|y = x. Axioms are verified at construction; failures
// report the lexicographically smallest witness:
//   Q1: x<|x = x               witness (x)
//   Q2: (.<|y) bijective       witness (x,y), smallest x whose column value
//                              repeats an earlier one
//   Q3: (x<|y)<|z = (x<|z)<|(y<|z)   witness (x,y,z)
struct Quandle {
    int n = 0;
    std::vector<int> table;
    std::vector<int> inv_table;

    int op(int x, int y) const { return table[size_t(x) * n + y]; }
    int inv_op(int x, int y) const { return inv_table[size_t(x) * n + y]; }
};

Quandle make_trivial(int n);
Quandle make_dihedral(int n);
// x<|y = w*x + (1-w)*y mod N. Throws BadUnit unless gcd(w, N) = 1.
Quandle make_alexander(long N, long w);
Quandle make_from_table(const std::vector<std::vector<int>>& t);

// Descriptors: trivial:n, dihedral:n, alexander:N:w, table:<path>.
Quandle parse_descriptor(const std::string& desc);
// Plain text: first non-comment line n, then n rows of n ints; '#' starts a
// comment line.
Quandle load_table_file(const std::string& path);

// Right-translation closure. perms[k] is a bijection of {0..n-1} stored as a
// vector; kappa[y] indexes the permutation (.<|y).
struct InnerGroup {
    std::vector<std::vector<int>> perms;
    std::vector<int> kappa;
};

InnerGroup inner_group(const Quandle& Q);

bool is_connected(const Quandle& Q);
// Minimal t >= 1 with x <|^t y = x for all x, y.
int quandle_type(const Quandle& Q);
// Every left translation x -> a<|x is a bijection.
bool is_left_homogeneous(const Quandle& Q);

// Orbit partition of the Inn(Q) action; orbit_of[x] is the smallest element
// of x's orbit.
std::vector<int> orbit_reps(const Quandle& Q);
int orbit_count(const Quandle& Q);

}  // namespace rf
