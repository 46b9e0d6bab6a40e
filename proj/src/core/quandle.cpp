#include "quandle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace rf {

namespace {

constexpr int kMaxSize = 4096;
constexpr size_t kMaxInnerOrder = 200000;

void validate_and_finish(Quandle& Q) {
    const int n = Q.n;
    for (int x = 0; x < n; ++x)
        if (Q.op(x, x) != x)
            throw Error(ErrCode::AxiomQ1, "Q1 fails: " + std::to_string(x) + "<|" + std::to_string(x) + " != " + std::to_string(x), {x});
    // Q2 witness scan is x-major so the first collision is lexicographically
    // smallest as an (x,y) pair.
    std::vector<char> seen(size_t(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            char& s = seen[size_t(y) * n + Q.op(x, y)];
            if (s)
                throw Error(ErrCode::AxiomQ2, "Q2 fails: column " + std::to_string(y) + " repeats value " + std::to_string(Q.op(x, y)) + " at x=" + std::to_string(x), {x, y});
            s = 1;
        }
    Q.inv_table.assign(size_t(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) Q.inv_table[size_t(Q.op(x, y)) * n + y] = x;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (Q.op(Q.op(x, y), z) != Q.op(Q.op(x, z), Q.op(y, z)))
                    throw Error(ErrCode::AxiomQ3, "Q3 fails at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")", {x, y, z});
}

long emod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Quandle make_trivial(int n) {
    if (n < 1 || n > kMaxSize) throw Error(ErrCode::Invalid, "quandle size out of range");
    Quandle Q;
    Q.n = n;
    Q.table.resize(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) Q.table[size_t(x) * n + y] = x;
    validate_and_finish(Q);
    return Q;
}

Quandle make_dihedral(int n) {
    if (n < 1 || n > kMaxSize) throw Error(ErrCode::Invalid, "quandle size out of range");
    Quandle Q;
    Q.n = n;
    Q.table.resize(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) Q.table[size_t(x) * n + y] = (int)emod(2L * y - x, n);
    validate_and_finish(Q);
    return Q;
}

Quandle make_alexander(long N, long w) {
    if (N < 1 || N > kMaxSize) throw Error(ErrCode::Invalid, "quandle size out of range");
    w = emod(w, N);
    if (std::gcd(w == 0 ? N : w, N) != 1)
        throw Error(ErrCode::BadUnit, "w = " + std::to_string(w) + " is not a unit mod " + std::to_string(N));
    Quandle Q;
    Q.n = (int)N;
    Q.table.resize(size_t(N) * N);
    for (long x = 0; x < N; ++x)
        for (long y = 0; y < N; ++y) Q.table[size_t(x) * N + y] = (int)emod(w * x + (1 - w) * y, N);
    validate_and_finish(Q);
    return Q;
}

Quandle make_from_table(const std::vector<std::vector<int>>& t) {
    const int n = (int)t.size();
    if (n < 1 || n > kMaxSize) throw Error(ErrCode::Invalid, "quandle size out of range");
    Quandle Q;
    Q.n = n;
    Q.table.resize(size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        if ((int)t[x].size() != n) throw Error(ErrCode::Parse, "table row " + std::to_string(x) + " has wrong length");
        for (int y = 0; y < n; ++y) {
            if (t[x][y] < 0 || t[x][y] >= n)
                throw Error(ErrCode::Parse, "table entry out of range at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            Q.table[size_t(x) * n + y] = t[x][y];
        }
    }
    validate_and_finish(Q);
    return Q;
}

Quandle load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrCode::Io, "cannot open " + path);
    std::vector<long> nums;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long v;
        std::string tok;
        while (ls >> tok) {
            try {
                size_t pos = 0;
                v = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(ErrCode::Parse, path + ": bad token '" + tok + "'");
            }
            nums.push_back(v);
        }
    }
    if (nums.empty()) throw Error(ErrCode::Parse, path + ": empty table file");
    const long n = nums[0];
    if (n < 1 || n > kMaxSize) throw Error(ErrCode::Parse, path + ": bad size " + std::to_string(n));
    if ((long)nums.size() != 1 + n * n)
        throw Error(ErrCode::Parse, path + ": expected " + std::to_string(n * n) + " entries, got " + std::to_string(nums.size() - 1));
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            long v = nums[1 + x * n + y];
            if (v < 0 || v >= n) throw Error(ErrCode::Parse, path + ": entry out of range at row " + std::to_string(x));
            t[x][y] = (int)v;
        }
    return make_from_table(t);
}

Quandle parse_descriptor(const std::string& desc) {
    auto bad = [&]() -> Error { return Error(ErrCode::Parse, "bad quandle descriptor '" + desc + "'"); };
    auto colon = desc.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string kind = desc.substr(0, colon);
    const std::string rest = desc.substr(colon + 1);
    auto to_long = [&](const std::string& s) -> long {
        try {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size() || s.empty()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw bad();
        }
    };
    if (kind == "trivial") return make_trivial((int)to_long(rest));
    if (kind == "dihedral") return make_dihedral((int)to_long(rest));
    if (kind == "alexander") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw bad();
        return make_alexander(to_long(rest.substr(0, c2)), to_long(rest.substr(c2 + 1)));
    }
    if (kind == "table") return load_table_file(rest);
    throw bad();
}

InnerGroup inner_group(const Quandle& Q) {
    const int n = Q.n;
    InnerGroup G;
    G.kappa.resize(n);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> gens;
    for (int y = 0; y < n; ++y) {
        std::vector<int> p(n);
        for (int x = 0; x < n; ++x) p[x] = Q.op(x, y);
        auto [it, fresh] = index.emplace(p, (int)G.perms.size());
        if (fresh) {
            G.perms.push_back(p);
            gens.push_back(p);
        }
        G.kappa[y] = it->second;
    }
    // breadth-first closure under composition; inverses come for free in a
    // finite group of permutations
    std::vector<std::vector<int>> frontier = G.perms;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                std::vector<int> c(n);
                for (int x = 0; x < n; ++x) c[x] = g[h[x]];
                if (index.emplace(c, (int)G.perms.size()).second) {
                    G.perms.push_back(c);
                    next.push_back(std::move(c));
                    if (G.perms.size() > kMaxInnerOrder)
                        throw Error(ErrCode::TooLarge, "inner group exceeds " + std::to_string(kMaxInnerOrder) + " elements");
                }
            }
        frontier = std::move(next);
    }
    return G;
}

std::vector<int> orbit_reps(const Quandle& Q) {
    const int n = Q.n;
    // union-find over x ~ x<|y; the generated group's orbits coincide with
    // this closure
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = find(x), b = find(Q.op(x, y));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> rep(n);
    for (int x = 0; x < n; ++x) rep[x] = find(x);
    return rep;
}

int orbit_count(const Quandle& Q) {
    auto rep = orbit_reps(Q);
    int c = 0;
    for (int x = 0; x < Q.n; ++x)
        if (rep[x] == x) ++c;
    return c;
}

bool is_connected(const Quandle& Q) { return orbit_count(Q) == 1; }

int quandle_type(const Quandle& Q) {
    const int n = Q.n;
    // t is the lcm over y of the order of (.<|y) restricted to each cycle;
    // equivalently iterate until every column map's t-th power is identity
    long long t = 1;
    for (int y = 0; y < n; ++y) {
        // order of the permutation (.<|y)
        std::vector<char> done(n, 0);
        long long ord = 1;
        for (int x = 0; x < n; ++x) {
            if (done[x]) continue;
            int len = 0, c = x;
            do {
                done[c] = 1;
                c = Q.op(c, y);
                ++len;
            } while (c != x);
            ord = std::lcm(ord, (long long)len);
        }
        t = std::lcm(t, ord);
    }
    return (int)t;
}

bool is_left_homogeneous(const Quandle& Q) {
    const int n = Q.n;
    for (int a = 0; a < n; ++a) {
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            char& h = hit[Q.op(a, x)];
            if (h) return false;
            h = 1;
        }
    }
    return true;
}

}  // namespace rf
