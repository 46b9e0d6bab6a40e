#include "ik.hpp"

#include <random>

#include "error.hpp"

namespace rf {

std::vector<int> orbit_canonical(const InnerGroup& G, const std::vector<int>& t) {
    std::vector<int> best = t;
    std::vector<int> cur(t.size());
    for (const auto& g : G.perms) {
        for (size_t i = 0; i < t.size(); ++i) cur[i] = g[t[i]];
        if (cur < best) best = cur;
    }
    return best;
}

HomogeneousChain reduce_to_coinvariants(const InnerGroup& G, int degree,
                                        const std::map<std::vector<int>, Int>& raw) {
    HomogeneousChain out;
    out.degree = degree;
    for (const auto& [t, c] : raw) {
        std::vector<int> r = orbit_canonical(G, t);
        Int& acc = out.terms[r];
        acc += c;
        if (acc == 0) out.terms.erase(r);
    }
    return out;
}

namespace {

void raw_add(std::map<std::vector<int>, Int>& m, const std::vector<int>& t, const Int& c) {
    Int& acc = m[t];
    acc += c;
    if (acc == 0) m.erase(t);
}

std::map<std::vector<int>, Int> homogeneous_boundary_raw(
    const std::map<std::vector<int>, Int>& terms) {
    std::map<std::vector<int>, Int> out;
    for (const auto& [t, c] : terms) {
        for (size_t i = 0; i < t.size(); ++i) {
            std::vector<int> s;
            s.reserve(t.size() - 1);
            s.insert(s.end(), t.begin(), t.begin() + i);
            s.insert(s.end(), t.begin() + i + 1, t.end());
            raw_add(out, s, (i % 2 == 0) ? c : -c);
        }
    }
    return out;
}

}  // namespace

HomogeneousChain homogeneous_boundary(const Quandle& Q, const InnerGroup& G,
                                      const HomogeneousChain& c) {
    (void)Q;
    if (c.degree < 1) throw Error(ErrCode::OutOfRange, "boundary needs degree >= 1");
    return reduce_to_coinvariants(G, c.degree - 1, homogeneous_boundary_raw(c.terms));
}

int x_iota(const Quandle& Q, const std::vector<int>& x, const std::vector<int>& bits, int i) {
    const int n = (int)x.size();
    int z = x[i - 1];
    for (int m = i + 1; m <= n; ++m)
        if (bits[m - 2]) z = Q.op(z, x[m - 1]);
    return z;
}

std::map<std::vector<int>, Int> ik_phi_raw(const Quandle& Q, const std::vector<int>& x, int p) {
    std::map<std::vector<int>, Int> out;
    const int n = (int)x.size();
    if (n == 0) {
        out[{p}] = 1;
        return out;
    }
    std::vector<int> bits(n - 1, 0);
    const long long total = 1LL << (n - 1);
    for (long long mask = 0; mask < total; ++mask) {
        int weight = 0;
        for (int m = 0; m < n - 1; ++m) {
            bits[m] = (int)((mask >> m) & 1);
            weight += bits[m];
        }
        std::vector<int> t(n + 1);
        t[0] = p;
        for (int i = 1; i <= n; ++i) t[i] = x_iota(Q, x, bits, i);
        raw_add(out, t, (weight % 2 == 0) ? 1 : -1);
    }
    return out;
}

HomogeneousChain ik_chain_map(const Quandle& Q, const InnerGroup& G, const FormalChain& c,
                              int p) {
    if (p < 0 || p >= Q.n) throw Error(ErrCode::OutOfRange, "basepoint outside the quandle");
    std::map<std::vector<int>, Int> raw;
    for (const auto& [x, coef] : c.terms)
        for (const auto& [t, d] : ik_phi_raw(Q, x, p)) raw_add(raw, t, coef * d);
    return reduce_to_coinvariants(G, c.degree + 1, raw);
}

std::vector<ChainMapDegreeReport> ik_verify(const Quandle& Q, int max_degree, int p,
                                            int seeded, unsigned long long seed) {
    if (p < 0 || p >= Q.n) throw Error(ErrCode::OutOfRange, "basepoint outside the quandle");
    const InnerGroup G = inner_group(Q);
    std::mt19937_64 rng(seed);
    std::vector<ChainMapDegreeReport> reports;
    for (int n = 1; n <= max_degree; ++n) {
        ChainMapDegreeReport rep;
        rep.degree = n;
        rep.exhaustive = n <= 3;
        std::vector<std::vector<int>> pool;
        if (rep.exhaustive) {
            const long long total = tuple_count(Q.n, n);
            pool.reserve(total);
            for (long long idx = 0; idx < total; ++idx) pool.push_back(tuple_decode(idx, Q.n, n));
        } else {
            pool.reserve(seeded);
            for (int s = 0; s < seeded; ++s) {
                std::vector<int> t(n);
                for (int& v : t) v = (int)(rng() % (unsigned long long)Q.n);
                pool.push_back(std::move(t));
            }
        }
        for (const auto& x : pool) {
            FormalChain gen;
            gen.degree = n;
            gen.add(x, 1);
            HomogeneousChain lhs = homogeneous_boundary(Q, G, ik_chain_map(Q, G, gen, p));
            HomogeneousChain rhs = ik_chain_map(Q, G, rack_boundary(gen, Q), p);
            ++rep.checked;
            if (lhs != rhs) {
                rep.ok = false;
                rep.witness = x;
                break;
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

RationalCochain pullback_cocycle(const Quandle& Q, const InnerGroup& G, int qdeg,
                                 const std::map<std::vector<int>, Rat>& f, int p) {
    if (p < 0 || p >= Q.n) throw Error(ErrCode::OutOfRange, "basepoint outside the quandle");
    if (qdeg < 1) throw Error(ErrCode::OutOfRange, "pullback degree must be >= 1");
    std::map<std::vector<int>, Rat> canon;
    for (const auto& [t, v] : f) {
        if ((int)t.size() != qdeg + 1)
            throw Error(ErrCode::Invalid, "cochain key arity does not match the degree");
        for (int e : t)
            if (e < 0 || e >= Q.n) throw Error(ErrCode::OutOfRange, "cochain key outside the quandle");
        std::vector<int> r = orbit_canonical(G, t);
        auto it = canon.find(r);
        if (it == canon.end())
            canon.emplace(std::move(r), v);
        else if (it->second != v)
            throw Error(ErrCode::NotCoinvariant, "two tuples in one orbit carry different values");
    }
    RationalCochain out(qdeg, Q.n);
    const long long total = tuple_count(Q.n, qdeg);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> x = tuple_decode(idx, Q.n, qdeg);
        Rat acc = 0;
        for (const auto& [t, c] : ik_phi_raw(Q, x, p)) {
            auto it = canon.find(orbit_canonical(G, t));
            if (it != canon.end()) acc += Rat(c) * it->second;
        }
        out.at(idx) = acc;
    }
    return out;
}

}  // namespace rf
