#pragma once

#include <string>
#include <vector>

#include "chains.hpp"
#include "quandle.hpp"

namespace rf {

// Degree-raising face operators on total rational cochains, 1-based slot i.
// eps = 0 drops coordinate i; eps = 1 acts on the first i-1 coordinates by
// <| x_i and then drops it.
RationalCochain face_avg(const Quandle& Q, const RationalCochain& h, int i, int eps);

// phi_n^j: average the first min(j, n) coordinates over right translations.
// j ranges over 0..n+1; j = 0 is the identity, j = n+1 coincides with j = n.
RationalCochain phi_avg(const Quandle& Q, const RationalCochain& h, int j);

// D_n^j: degree-lowering average, 1 <= j <= n; j = n is the zero map.
// D(k)(x_1..x_{n-1}) averages k(x_1<|y_1,..,x_{j-1}<|y_{j-1}, x_j, y_j,
// x_{j+1},..,x_{n-1}) over y in Q^j.
RationalCochain d_avg(const Quandle& Q, const RationalCochain& k, int j);

struct IdentityFailure {
    std::string identity;  // E1..E6
    int n = 0;
    int i = 0;  // 0 when the identity has no i index
    int j = 0;
    std::vector<int> witness;  // basis cochain's indicator tuple
};

struct CommutationReport {
    bool ok = true;
    long long failure_count = 0;
    std::vector<IdentityFailure> failures;  // capped; first entries in scan order
};

// Exhaustive scan of the six face/average/homotopy commutation identities on
// all indicator cochains of degree 1..nmax.
CommutationReport verify_commutation_identities(const Quandle& Q, int nmax);

struct HomotopySignReport {
    int n = 0;
    int j = 0;
    // Sign pairs (e1, e2) with delta(D h) + e1*D(delta h) == e2*(phi^j - phi^{j-1})(h)
    // for every basis cochain and every seeded random cochain.
    std::vector<std::pair<int, int>> consistent;
};

// Brute-force sign search; throws NoConsistentSigns when no pair survives.
HomotopySignReport homotopy_identity_check(const Quandle& Q, int n, int j, int num_random,
                                           unsigned long long seed);

struct Trivialization {
    Rat c;
    RationalCochain g;  // degree n-1; f = c + delta(g)
};

// Writes a cocycle of a connected left-homogeneous quandle as a constant plus
// an exact coboundary: c = phi_n^n(f), g = sum_j (-1)^{j+1} D_n^j(f).
Trivialization trivialize_cocycle(const Quandle& Q, const RationalCochain& f);

}  // namespace rf
