#include "averaging.hpp"

#include <random>

#include "error.hpp"

namespace rf {

namespace {
constexpr long long kFailureCap = 32;

Int pow_int(int q, int e) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= q;
    return p;
}
}  // namespace

RationalCochain face_avg(const Quandle& Q, const RationalCochain& h, int i, int eps) {
    const int n = h.degree + 1;
    if (i < 1 || i > n) throw Error(ErrCode::OutOfRange, "face index outside 1..n+1");
    if (eps != 0 && eps != 1) throw Error(ErrCode::Invalid, "face kind must be 0 or 1");
    RationalCochain out(n, Q.n);
    const long long total = tuple_count(Q.n, n);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> t = tuple_decode(idx, Q.n, n);
        std::vector<int> s;
        s.reserve(n - 1);
        if (eps == 0) {
            for (int m = 0; m < n; ++m)
                if (m != i - 1) s.push_back(t[m]);
        } else {
            for (int m = 0; m < i - 1; ++m) s.push_back(Q.op(t[m], t[i - 1]));
            for (int m = i; m < n; ++m) s.push_back(t[m]);
        }
        out.at(idx) = h.at(tuple_index(s, Q.n));
    }
    return out;
}

RationalCochain phi_avg(const Quandle& Q, const RationalCochain& h, int j) {
    const int n = h.degree;
    if (j < 0 || j > n + 1) throw Error(ErrCode::OutOfRange, "averaging depth outside 0..n+1");
    const int jj = std::min(j, n);
    if (jj == 0) return h;
    RationalCochain out(n, Q.n);
    const long long total = tuple_count(Q.n, n);
    const long long ytotal = tuple_count(Q.n, jj);
    const Rat scale = Rat(1, pow_int(Q.n, jj));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> t = tuple_decode(idx, Q.n, n);
        Rat acc = 0;
        std::vector<int> s = t;
        for (long long yidx = 0; yidx < ytotal; ++yidx) {
            std::vector<int> y = tuple_decode(yidx, Q.n, jj);
            for (int m = 0; m < jj; ++m) s[m] = Q.op(t[m], y[m]);
            acc += h.at(tuple_index(s, Q.n));
        }
        out.at(idx) = acc * scale;
    }
    return out;
}

RationalCochain d_avg(const Quandle& Q, const RationalCochain& k, int j) {
    const int n = k.degree;
    if (j < 1 || j > n) throw Error(ErrCode::OutOfRange, "homotopy index outside 1..n");
    RationalCochain out(n - 1, Q.n);
    if (j == n) return out;  // zero map by definition
    const long long total = tuple_count(Q.n, n - 1);
    const long long ytotal = tuple_count(Q.n, j);
    const Rat scale = Rat(1, pow_int(Q.n, j));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> t = tuple_decode(idx, Q.n, n - 1);
        Rat acc = 0;
        std::vector<int> s(n);
        for (long long yidx = 0; yidx < ytotal; ++yidx) {
            std::vector<int> y = tuple_decode(yidx, Q.n, j);
            for (int m = 0; m < j - 1; ++m) s[m] = Q.op(t[m], y[m]);
            s[j - 1] = t[j - 1];
            s[j] = y[j - 1];
            for (int m = j; m < n - 1; ++m) s[m + 1] = t[m];
            acc += k.at(tuple_index(s, Q.n));
        }
        out.at(idx) = acc * scale;
    }
    return out;
}

CommutationReport verify_commutation_identities(const Quandle& Q, int nmax) {
    CommutationReport rep;
    auto record = [&](const char* id, int n, int i, int j, const std::vector<int>& bt) {
        ++rep.failure_count;
        rep.ok = false;
        if ((long long)rep.failures.size() < kFailureCap)
            rep.failures.push_back({id, n, i, j, bt});
    };
    for (int n = 1; n <= nmax; ++n) {
        const long long total = tuple_count(Q.n, n);
        for (long long bidx = 0; bidx < total; ++bidx) {
            std::vector<int> bt = tuple_decode(bidx, Q.n, n);
            RationalCochain h(n, Q.n);
            h.at(bidx) = 1;
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= j; ++i) {
                    if (d_avg(Q, face_avg(Q, h, i, 0), j) != d_avg(Q, face_avg(Q, h, i, 1), j)) {
                        record("E1", n, i, j, bt);
                        break;
                    }
                }
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= j; ++i) {
                    RationalCochain dj = d_avg(Q, h, j);
                    if (face_avg(Q, dj, i, 0) != face_avg(Q, dj, i, 1)) {
                        record("E2", n, i, j, bt);
                        break;
                    }
                }
            for (int j = 1; j <= n - 1; ++j) {
                if (d_avg(Q, face_avg(Q, h, j + 1, 0), j) != phi_avg(Q, h, j - 1))
                    record("E3", n, 0, j, bt);
                if (d_avg(Q, face_avg(Q, h, j + 1, 1), j) != phi_avg(Q, h, j))
                    record("E4", n, 0, j, bt);
            }
            for (int j = 1; j <= n; ++j)
                for (int i = j + 1; i <= n; ++i)
                    for (int e = 0; e <= 1; ++e) {
                        if (d_avg(Q, face_avg(Q, h, i + 1, e), j) !=
                            face_avg(Q, d_avg(Q, h, j), i, e))
                            record(e == 0 ? "E5" : "E6", n, i, j, bt);
                    }
        }
    }
    return rep;
}

HomotopySignReport homotopy_identity_check(const Quandle& Q, int n, int j, int num_random,
                                           unsigned long long seed) {
    if (n < 1) throw Error(ErrCode::OutOfRange, "degree must be >= 1");
    if (j < 1 || j > n) throw Error(ErrCode::OutOfRange, "homotopy index outside 1..n");
    std::vector<RationalCochain> pool;
    const long long total = tuple_count(Q.n, n);
    for (long long bidx = 0; bidx < total; ++bidx) {
        RationalCochain h(n, Q.n);
        h.at(bidx) = 1;
        pool.push_back(std::move(h));
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < num_random; ++s) {
        RationalCochain h(n, Q.n);
        for (long long idx = 0; idx < total; ++idx) {
            long num = (long)(rng() % 21) - 10;
            long den = (long)(rng() % 5) + 1;
            h.at(idx) = Rat(num, den);
        }
        pool.push_back(std::move(h));
    }
    HomotopySignReport rep;
    rep.n = n;
    rep.j = j;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            bool ok = true;
            for (const auto& h : pool) {
                RationalCochain lhs = coboundary(d_avg(Q, h, j), Q);
                RationalCochain mid = d_avg(Q, coboundary(h, Q), j);
                RationalCochain rhs = cochain_sub(phi_avg(Q, h, j), phi_avg(Q, h, j - 1));
                if (cochain_add(lhs, cochain_scale(mid, e1)) != cochain_scale(rhs, e2)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rep.consistent.emplace_back(e1, e2);
        }
    if (rep.consistent.empty())
        throw Error(ErrCode::NoConsistentSigns, "no sign assignment satisfies the homotopy identity");
    return rep;
}

Trivialization trivialize_cocycle(const Quandle& Q, const RationalCochain& f) {
    const int n = f.degree;
    if (n < 1) throw Error(ErrCode::OutOfRange, "degree must be >= 1");
    if (!is_connected(Q) || !is_left_homogeneous(Q))
        throw Error(ErrCode::NotHomogeneous, "quandle must be connected and left-homogeneous");
    if (!is_rack_cocycle(f, Q)) throw Error(ErrCode::NotACocycle, "input is not a cocycle");
    RationalCochain averaged = phi_avg(Q, f, n);
    const Rat c = averaged.at(0);
    for (const Rat& v : averaged.values)
        if (v != c) throw Error(ErrCode::Invalid, "fully averaged cocycle is not constant");
    Trivialization out{c, RationalCochain(n - 1, Q.n)};
    for (int j = 1; j <= n; ++j) {
        RationalCochain dj = d_avg(Q, f, j);
        out.g = (j % 2 == 1) ? cochain_add(out.g, dj) : cochain_sub(out.g, dj);
    }
    return out;
}

}  // namespace rf
