#include "ratseries.hpp"

#include <algorithm>

#include "error.hpp"

namespace rf {

IntSeries series_from_coeffs(std::vector<Int> c) {
    if (c.empty()) c.push_back(0);
    IntSeries s((int)c.size() - 1);
    s.coeffs = std::move(c);
    return s;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const int N = std::min(a.N, b.N);
    IntSeries out(N);
    for (int i = 0; i <= N && i <= a.N; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= N && j <= b.N; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

IntSeries series_add(const IntSeries& a, const IntSeries& b) {
    const int N = std::min(a.N, b.N);
    IntSeries out(N);
    for (int i = 0; i <= N; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

IntSeries series_inverse(const IntSeries& a) {
    if (a.coeffs[0] != 1 && a.coeffs[0] != -1)
        throw Error(ErrCode::NonUnitConstantTerm, "series inverse needs constant term +-1");
    const Int a0 = a.coeffs[0];
    IntSeries out(a.N);
    out.coeffs[0] = a0;  // a0 is its own inverse
    for (int k = 1; k <= a.N; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) acc += a.coeffs[i] * out.coeffs[k - i];
        out.coeffs[k] = -a0 * acc;
    }
    return out;
}

namespace {

IntSeries profile_series(const std::vector<Int>& betti, int N) {
    IntSeries p(N);
    for (int i = 0; i < (int)betti.size() && i <= N; ++i) p.coeffs[i] = betti[i];
    return p;
}

}  // namespace

IntSeries bq_series(const std::vector<Int>& betti_Q, int N) {
    if (N < 0) throw Error(ErrCode::Invalid, "negative truncation");
    IntSeries den(N);
    den.coeffs[0] = 1;
    // 1 - s*P_Q(s)
    for (int i = 0; i < (int)betti_Q.size() && i + 1 <= N; ++i) den.coeffs[i + 1] -= betti_Q[i];
    return series_inverse(den);
}

IntSeries bgq_series(const std::vector<Int>& betti_Q, const std::vector<Int>& betti_G, int N) {
    return series_mul(profile_series(betti_G, N), bq_series(betti_Q, N));
}

IntSeries euler_factor(int k, const Int& u, int N) {
    if (k < 1) throw Error(ErrCode::Invalid, "factor degree must be positive");
    if (u < 0) throw Error(ErrCode::NegativeRank, "negative exponent", {(long)k});
    IntSeries base(N);
    base.coeffs[0] = 1;
    if (k <= N) base.coeffs[k] = (k % 2 == 1) ? 1 : -1;
    if (k % 2 == 0) base = series_inverse(base);
    IntSeries out(N);
    out.coeffs[0] = 1;
    for (Int e = 0; e < u; ++e) out = series_mul(out, base);
    return out;
}

IntSeries euler_product(const std::vector<Int>& u, int N) {
    IntSeries out(N);
    out.coeffs[0] = 1;
    for (int k = 1; k <= (int)u.size(); ++k) {
        if (u[k - 1] == 0) continue;
        out = series_mul(out, euler_factor(k, u[k - 1], N));
    }
    return out;
}

std::vector<Int> extract_ranks(const IntSeries& F, int N) {
    if (N > F.N) throw Error(ErrCode::OutOfRange, "extraction depth exceeds truncation");
    if (F.coeffs[0] != 1) throw Error(ErrCode::Invalid, "rank extraction needs constant term 1");
    std::vector<Int> u;
    u.reserve(N);
    IntSeries run(N);
    run.coeffs[0] = 1;
    for (int k = 1; k <= N; ++k) {
        Int uk = F.coeffs[k] - run.coeffs[k];
        if (uk < 0) throw Error(ErrCode::NegativeRank, "series is not an Euler product with non-negative exponents", {(long)k});
        u.push_back(uk);
        if (uk != 0) run = series_mul(run, euler_factor(k, uk, N));
    }
    return u;
}

FibrationRankReport fibration_rank_check(const std::vector<Int>& betti_Q,
                                         const std::vector<Int>& betti_G,
                                         const std::vector<Int>& ranks_G, int N) {
    FibrationRankReport rep;
    rep.total_ranks = extract_ranks(bgq_series(betti_Q, betti_G, N), N);
    rep.base_ranks = extract_ranks(bq_series(betti_Q, N), N);
    for (int k = 1; k <= N; ++k) {
        Int g = (k <= (int)ranks_G.size()) ? ranks_G[k - 1] : Int(0);
        if (rep.total_ranks[k - 1] != rep.base_ranks[k - 1] + g) {
            rep.ok = false;
            rep.first_bad_k = k;
            return rep;
        }
    }
    return rep;
}

}  // namespace rf
