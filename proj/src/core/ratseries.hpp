#pragma once

#include <vector>

#include "ints.hpp"

namespace rf {

// Truncated integer power series; coeffs has length N+1, coeffs[k] is the
// degree-k coefficient.
struct IntSeries {
    int N = 0;
    std::vector<Int> coeffs;

    IntSeries() : coeffs(1, Int(0)) {}
    explicit IntSeries(int trunc) : N(trunc), coeffs(trunc + 1, Int(0)) {}

    bool operator==(const IntSeries&) const = default;
};

IntSeries series_from_coeffs(std::vector<Int> c);
// Result truncation is min(a.N, b.N).
IntSeries series_mul(const IntSeries& a, const IntSeries& b);
IntSeries series_add(const IntSeries& a, const IntSeries& b);
// Requires a0 = +-1 so the inverse stays integral.
IntSeries series_inverse(const IntSeries& a);

// Poincare series of BQ from the Betti profile of Q: 1/(1 - s*P_Q(s)).
IntSeries bq_series(const std::vector<Int>& betti_Q, int N);
// Poincare series of B_G Q: P_G(s)/(1 - s*P_Q(s)).
IntSeries bgq_series(const std::vector<Int>& betti_Q, const std::vector<Int>& betti_G, int N);

// (1+s^k)^u for odd k, (1-s^k)^{-u} for even k, truncated at N.
IntSeries euler_factor(int k, const Int& u, int N);
// Product of euler_factor(k, u[k-1]) for k = 1..len(u), truncated at N.
IntSeries euler_product(const std::vector<Int>& u, int N);
// Inverse of euler_product, degree by degree.  u[k-1] is the exponent at
// degree k.  Requires F0 = 1; throws NegativeRank{k} when no non-negative
// exponent matches.
std::vector<Int> extract_ranks(const IntSeries& F, int N);

struct FibrationRankReport {
    bool ok = true;
    int first_bad_k = 0;  // 1-based degree of the first mismatch when !ok
    std::vector<Int> total_ranks;
    std::vector<Int> base_ranks;
};

// Checks extract_ranks(bgq) == extract_ranks(bq) + ranks_G componentwise.
FibrationRankReport fibration_rank_check(const std::vector<Int>& betti_Q,
                                         const std::vector<Int>& betti_G,
                                         const std::vector<Int>& ranks_G, int N);

}  // namespace rf
