#pragma once

#include <map>
#include <vector>

#include "chains.hpp"
#include "quandle.hpp"

namespace rf {

// Lexicographically smallest element of the diagonal Inn(Q)-orbit of t.
std::vector<int> orbit_canonical(const InnerGroup& G, const std::vector<int>& t);

// Integer combination of (degree+1)-tuples in the coinvariant homogeneous
// complex. Every stored tuple is its orbit's canonical representative.
struct HomogeneousChain {
    int degree = 0;
    std::map<std::vector<int>, Int> terms;

    bool operator==(const HomogeneousChain& o) const = default;
};

HomogeneousChain reduce_to_coinvariants(const InnerGroup& G, int degree,
                                        const std::map<std::vector<int>, Int>& raw);

// Alternating sum of coordinate drops, re-reduced. Degree must be >= 1.
HomogeneousChain homogeneous_boundary(const Quandle& Q, const InnerGroup& G,
                                      const HomogeneousChain& c);

// Left fold x(iota, i) = (..(x_i <|^{iota(i+1)} x_{i+1}) ..) <|^{iota(n)} x_n
// with a <|^0 b = a. bits[m-2] holds iota(m) for m in 2..n; i is 1-based.
int x_iota(const Quandle& Q, const std::vector<int>& x, const std::vector<int>& bits, int i);

// Unreduced phi_n(x) = sum over iota of (-1)^{|iota|} (p, x(iota,1..n)).
std::map<std::vector<int>, Int> ik_phi_raw(const Quandle& Q, const std::vector<int>& x, int p);

// phi_n extended to chains, reduced to coinvariants.
HomogeneousChain ik_chain_map(const Quandle& Q, const InnerGroup& G, const FormalChain& c,
                              int p);

struct ChainMapDegreeReport {
    int degree = 0;
    bool exhaustive = true;
    long long checked = 0;
    bool ok = true;
    std::vector<int> witness;  // first generator violating the identity
};

// Checks boundary(phi(x)) == phi(rack boundary of x) in coinvariants for each
// degree 1..max_degree: exhaustive through degree 3, then `seeded` random
// generators per degree.
std::vector<ChainMapDegreeReport> ik_verify(const Quandle& Q, int max_degree, int p,
                                            int seeded, unsigned long long seed);

// Pulls a coinvariant cochain back along phi_q: result(x) = f(phi_q(x)).
// Keys of f are (qdeg+1)-tuples; two keys in one orbit must carry one value
// (NotCoinvariant otherwise); absent orbits read as 0.
RationalCochain pullback_cocycle(const Quandle& Q, const InnerGroup& G, int qdeg,
                                 const std::map<std::vector<int>, Rat>& f, int p);

}  // namespace rf
