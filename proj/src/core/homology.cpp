#include "homology.hpp"

#include <numeric>
#include <random>

#include "error.hpp"

namespace rf {

HomologyResult homology_of_pair_sparse(const SparseMat& d_n, const SparseMat& d_np1) {
    if (d_n.cols != d_np1.rows) throw Error(ErrCode::Invalid, "chain group dimension mismatch");
    if (!sparse_product_is_zero(d_n, d_np1)) throw Error(ErrCode::NotAComplex, "d_n * d_{n+1} != 0");
    const auto diag_n = snf_diagonal(d_n);
    const auto diag_np1 = snf_diagonal(d_np1);
    HomologyResult h;
    h.betti = d_n.cols - snf_rank(diag_n) - snf_rank(diag_np1);
    for (const Int& d : diag_np1)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

HomologyResult homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1) {
    return homology_of_pair_sparse(SparseMat::from_dense(d_n), SparseMat::from_dense(d_np1));
}

HomologyResult rack_homology(const Quandle& Q, int n) {
    if (n < 0) throw Error(ErrCode::Invalid, "negative degree");
    SparseMat d_n = n == 0 ? SparseMat(0, 1) : boundary_matrix_sparse(Q, n);
    SparseMat d_np1 = boundary_matrix_sparse(Q, n + 1);
    HomologyResult h = homology_of_pair_sparse(d_n, d_np1);
    h.degree = n;
    return h;
}

namespace {

long emod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Relation matrix for (Z_N tensor Z_N)/(x@y - w*y@x) over generators
// e_{x,y} (column x*N + y): bilinearity in each slot plus the twist.
SparseMat clauwens_relations(long N, long w) {
    const int gens = (int)(N * N);
    std::vector<std::map<int, Int>> rows;
    auto gi = [&](long x, long y) { return (int)(x * N + y); };
    auto push = [&](std::map<int, Int> r) {
        // drop identically zero relations to keep the matrix tidy
        for (auto it = r.begin(); it != r.end();)
            it = it->second == 0 ? r.erase(it) : std::next(it);
        if (!r.empty()) rows.push_back(std::move(r));
    };
    for (long x = 0; x < N; ++x)
        for (long xp = 0; xp < N; ++xp)
            for (long y = 0; y < N; ++y) {
                std::map<int, Int> r;
                r[gi(emod(x + xp, N), y)] += 1;
                r[gi(x, y)] -= 1;
                r[gi(xp, y)] -= 1;
                push(std::move(r));
            }
    for (long x = 0; x < N; ++x)
        for (long y = 0; y < N; ++y)
            for (long yp = 0; yp < N; ++yp) {
                std::map<int, Int> r;
                r[gi(x, emod(y + yp, N))] += 1;
                r[gi(x, y)] -= 1;
                r[gi(x, yp)] -= 1;
                push(std::move(r));
            }
    for (long x = 0; x < N; ++x)
        for (long y = 0; y < N; ++y) {
            std::map<int, Int> r;
            r[gi(x, y)] += 1;
            r[gi(y, x)] -= Int(w);
            push(std::move(r));
        }
    SparseMat M((int)rows.size(), gens);
    for (size_t i = 0; i < rows.size(); ++i) M.row[i] = std::move(rows[i]);
    return M;
}

void check_unit(long N, long& w) {
    if (N < 1) throw Error(ErrCode::Invalid, "modulus must be positive");
    w = emod(w, N);
    long g = std::gcd(w == 0 ? N : w, N);
    if (g != 1) throw Error(ErrCode::BadUnit, "w = " + std::to_string(w) + " is not a unit mod " + std::to_string(N));
}

}  // namespace

HomologyResult clauwens_h2(long N, long w) {
    check_unit(N, w);
    const SparseMat rel = clauwens_relations(N, w);
    const auto diag = snf_diagonal(rel);
    HomologyResult h;
    h.degree = 2;
    // Z summand plus the free part of the quotient
    h.betti = 1 + (rel.cols - snf_rank(diag));
    for (const Int& d : diag)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

std::pair<Int, std::vector<Int>> clauwens_h2_class_chain(long N, long w, const FormalChain& c) {
    check_unit(N, w);
    if (c.degree != 2) throw Error(ErrCode::Invalid, "clauwens class needs a degree-2 chain");
    const int gens = (int)(N * N);
    // quotient Z^gens / column span of A; class of v reads off L*v against the
    // diagonal
    const SparseMat rel = clauwens_relations(N, w);
    IntMatrix A(gens, rel.rows);  // columns are relations
    for (int r = 0; r < rel.rows; ++r)
        for (const auto& [cidx, v] : rel.row[r]) A.at(cidx, r) = v;
    const SnfResult snf = smith_normal_form(A);
    std::vector<Int> v(gens, Int(0));
    Int lead = 0;
    for (const auto& [t, coef] : c.terms) {
        long a = t[0], b = t[1];
        lead += coef;
        v[emod(a - b, N) * N + b] += coef;
    }
    // w_i = (L*v)_i; coordinate i is w_i mod d_i for torsion factors, free
    // past the diagonal
    std::vector<Int> coords;
    const int k = (int)snf.diagonal.size();
    for (int i = 0; i < gens; ++i) {
        Int wi = 0;
        for (int j = 0; j < gens; ++j)
            if (snf.left.at(i, j) != 0 && v[j] != 0) wi += snf.left.at(i, j) * v[j];
        if (i < k) {
            const Int& d = snf.diagonal[i];
            if (d == 1) continue;
            Int m = wi % d;
            if (m < 0) m += d;
            coords.push_back(m);
        } else {
            coords.push_back(wi);
        }
    }
    return {lead, coords};
}

std::pair<Int, std::vector<Int>> clauwens_h2_class(long N, long w, long a, long b) {
    FormalChain c;
    c.degree = 2;
    c.add({(int)emod(a, N), (int)emod(b, N)}, 1);
    return clauwens_h2_class_chain(N, w, c);
}

static Rat det2(const PlanePoint& a, const PlanePoint& b) { return a[0] * b[1] - a[1] * b[0]; }

static PlanePoint reflect(const PlanePoint& x, const PlanePoint& y) {
    return {2 * y[0] - x[0], 2 * y[1] - x[1]};
}

Rat det_cocycle_coboundary(const PlaneTriple& t) {
    const auto& [x, y, z] = t;
    // dual of the degree-3 boundary: sum_i (-1)^i [C(drop_i) - C(act_i)]
    Rat v = 0;
    v -= det2(y, z) - det2(y, z);
    v += det2(x, z) - det2(reflect(x, y), z);
    v -= det2(x, y) - det2(reflect(x, z), reflect(y, z));
    return v;
}

DetCocycleReport det_cocycle_check(const std::vector<PlaneTriple>& triples) {
    DetCocycleReport rep;
    for (const auto& t : triples) {
        ++rep.checked;
        if (det_cocycle_coboundary(t) != 0) {
            ++rep.failures;
            rep.failing.push_back(t);
        }
    }
    return rep;
}

std::vector<PlaneTriple> seeded_plane_triples(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    // rng() % k keeps the stream identical across standard libraries
    auto coord = [&]() {
        long num = (long)(rng() % 101) - 50;
        long den = (long)(rng() % 11) + 1;
        return Rat(num, den);
    };
    std::vector<PlaneTriple> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        PlaneTriple t;
        for (auto& p : t) p = {coord(), coord()};
        out.push_back(t);
    }
    return out;
}

}  // namespace rf
