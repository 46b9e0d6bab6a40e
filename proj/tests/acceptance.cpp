// Acceptance gate: each criterion prints one PASS/FAIL line (plus indented
// detail) and the process exit code reflects the verdict. Run with the
// criterion number 1..11 as the only argument.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/averaging.hpp"
#include "core/chains.hpp"
#include "core/cubical.hpp"
#include "core/delta.hpp"
#include "core/homology.hpp"
#include "core/ik.hpp"
#include "core/qlinalg.hpp"
#include "core/quandle.hpp"
#include "core/ratseries.hpp"
#include "core/snf.hpp"

using namespace rf;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> detail;

    void fail(const std::string& s) {
        pass = false;
        if (summary.empty()) summary = s;
    }
    void note(const std::string& s) { detail.push_back(s); }
};

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<Int> ints(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

std::string homology_str(const HomologyResult& h) {
    return "betti " + std::to_string(h.betti) + ", torsion [" + join_ints(h.torsion) + "]";
}

// ---------------------------------------------------------------------------
// 1. Rank-table reproduction against the reference rows, depth 17, exact.

const std::vector<std::vector<long>> kRankProfiles = {
    {1, 0, 1}, {1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 1}};

const std::vector<std::vector<long>> kReferenceRows = {
    {1, 1, 1, 1, 1, 2, 2, 2, 3, 5, 6, 7, 11, 27, 47, 85, 151},
    {1, 1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 3, 7, 11, 16, 23},
    {1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 3, 5, 7, 10}};

// Extraction variant that stops folding new factors into the running product
// after degree freeze_k; used to characterize the reference rows when the
// faithful extraction disagrees with them.
std::vector<Int> extract_ranks_frozen(const IntSeries& F, int N, int freeze_k) {
    std::vector<Int> u;
    IntSeries run(N);
    run.coeffs[0] = 1;
    for (int k = 1; k <= N; ++k) {
        Int uk = F.coeffs[k] - run.coeffs[k];
        u.push_back(uk);
        if (k <= freeze_k && uk != 0) run = series_mul(run, euler_factor(k, uk, N));
    }
    return u;
}

Outcome criterion_1() {
    Outcome out;
    const int depth = 17;
    int diverging = 0;
    bool frozen_matches_all = true;
    std::vector<std::string> tables;
    for (size_t m = 0; m < kRankProfiles.size(); ++m) {
        std::vector<Int> betti = ints(kRankProfiles[m]);
        IntSeries F = bq_series(betti, depth);
        std::vector<Int> got = extract_ranks(F, depth);
        std::vector<Int> ref = ints(kReferenceRows[m]);
        std::string head = "profile " + join_longs(kRankProfiles[m]) + ":";
        if (got == ref) {
            tables.push_back(head + " matches the reference row");
            continue;
        }
        std::string diffs;
        for (int k = 1; k <= depth; ++k)
            if (got[k - 1] != ref[k - 1]) {
                ++diverging;
                diffs += " k=" + std::to_string(k) + " ref=" + ref[k - 1].str() + " computed=" +
                         got[k - 1].str() + ";";
            }
        tables.push_back(head + diffs);
        tables.push_back("  computed row: " + join_ints(got));
        tables.push_back("  reference row: " + join_ints(ref));

        // The computed row re-expands to the series it was extracted from;
        // the reference row does not.
        IntSeries back = euler_product(got, depth);
        bool computed_ok = back.coeffs == F.coeffs;
        IntSeries ref_back = euler_product(ref, depth);
        int first_bad = 0;
        for (int k = 0; k <= depth; ++k)
            if (ref_back.coeffs[k] != F.coeffs[k]) {
                first_bad = k;
                break;
            }
        tables.push_back(std::string("  re-expansion: computed row reproduces the series ") +
                         (computed_ok ? "exactly" : "INCORRECTLY") +
                         "; reference row first deviates at degree " + std::to_string(first_bad));
        if (!computed_ok) out.fail("internal extraction inconsistency");

        if (extract_ranks_frozen(F, depth, 12) == ref)
            tables.push_back(
                "  reference row reproduced bit-for-bit by freezing the running Euler product "
                "after degree 12 (factors for k > 12 never folded in)");
        else
            frozen_matches_all = false;
    }
    for (const auto& line : tables) out.note(line);
    if (diverging > 0) {
        out.fail("extracted ranks diverge from the reference table in " +
                 std::to_string(diverging) + " of 51 entries (k = 14..17 on all three rows)");
        if (frozen_matches_all)
            out.note(
                "diagnosis: all three reference rows match a truncated extraction whose running "
                "product is frozen after degree 12; the exact rows are the computed ones");
    } else {
        out.summary = "all 51 reference entries reproduced exactly";
    }
    return out;
}

// ---------------------------------------------------------------------------
// 2. Series identity: profile with ones at 0 and 2m inverts 1 - s - s^(2m+1).

Outcome criterion_2() {
    Outcome out;
    for (int m = 1; m <= 3; ++m) {
        std::vector<Int> betti(2 * m + 1, Int(0));
        betti[0] = 1;
        betti[2 * m] = 1;
        IntSeries bq = bq_series(betti, 30);
        IntSeries den(30);
        den.coeffs[0] = 1;
        den.coeffs[1] = -1;
        den.coeffs[2 * m + 1] = -1;
        if (bq.coeffs != series_inverse(den).coeffs) {
            out.fail("coefficient mismatch at m = " + std::to_string(m));
            return out;
        }
    }
    out.summary = "loop-space series equal 1/(1 - s - s^(2m+1)) through degree 30 for m = 1,2,3";
    return out;
}

// ---------------------------------------------------------------------------
// 3. Cubical vs simplicial homology, truncation 4, degrees 0..2.

Outcome criterion_3() {
    Outcome out;
    struct Case {
        const char* name;
        Quandle Q;
    };
    for (const Case& c : {Case{"trivial(1)", make_trivial(1)}, Case{"trivial(2)", make_trivial(2)},
                          Case{"dihedral(3)", make_dihedral(3)}}) {
        CubicalSet X = rack_space(c.Q, false, 4);
        DeltaSet D = triangulate(X);
        for (int n = 0; n <= 2; ++n) {
            HomologyResult hc = cubical_homology(X, n);
            HomologyResult hd = delta_homology(D, n);
            if (hc.betti != hd.betti || hc.torsion != hd.torsion) {
                out.fail(std::string(c.name) + " degree " + std::to_string(n) + ": cubical " +
                         homology_str(hc) + " vs simplicial " + homology_str(hd));
                return out;
            }
            out.note(std::string(c.name) + " degree " + std::to_string(n) + ": " +
                     homology_str(hc) + " (both pipelines)");
        }
    }
    out.summary = "cubical and simplicial homology agree for all three quandles, degrees 0..2";
    return out;
}

// ---------------------------------------------------------------------------
// 4. Point-base cubical boundary matrices equal the rack complex matrices.

Outcome criterion_4() {
    Outcome out;
    struct Case {
        const char* name;
        Quandle Q;
        int P;
    };
    int matrices = 0;
    for (const Case& c : {Case{"dihedral(3)", make_dihedral(3), 4},
                          Case{"trivial(2)", make_trivial(2), 4},
                          Case{"alexander(5,2)", make_alexander(5, 2), 3}}) {
        CubicalSet X = rack_space(c.Q, false, c.P);
        for (int n = 1; n <= c.P; ++n) {
            SparseMat lhs = cubical_boundary_matrix(X, n);
            SparseMat rhs = boundary_matrix_sparse(c.Q, n);
            if (lhs.rows != rhs.rows || lhs.cols != rhs.cols || lhs.row != rhs.row) {
                out.fail(std::string(c.name) + " degree " + std::to_string(n) +
                         ": matrices differ");
                return out;
            }
            ++matrices;
        }
    }
    out.summary = "all " + std::to_string(matrices) +
                  " boundary matrices bit-identical across the two constructions";
    return out;
}

// ---------------------------------------------------------------------------
// 5. Alexander H2 presentation vs the rack complex, N <= 8, all units.

Outcome criterion_5() {
    Outcome out;
    struct Pinned {
        long N, w;
        HomologyResult expect;
    };
    for (const Pinned& p : {Pinned{3, 2, {2, 1, {}}}, Pinned{5, 2, {2, 1, {}}},
                            Pinned{4, 3, {2, 1, {2}}}}) {
        HomologyResult got = clauwens_h2(p.N, p.w);
        if (got.betti != p.expect.betti || got.torsion != p.expect.torsion) {
            out.fail("pinned value (" + std::to_string(p.N) + "," + std::to_string(p.w) +
                     ") mismatched: " + homology_str(got));
            return out;
        }
    }
    out.note("pinned presentation values verified: (3,2) and (5,2) are free rank 1, (4,3) adds "
             "a single 2-torsion factor");

    int compared = 0, disagreements = 0;
    for (long N = 2; N <= 8; ++N)
        for (long w = 1; w < N; ++w) {
            if (std::gcd(N, w) != 1) continue;
            ++compared;
            HomologyResult formula = clauwens_h2(N, w);
            HomologyResult rack = rack_homology(make_alexander(N, w), 2);
            bool connected = std::gcd(N, ((1 - w) % N + N) % N) == 1;
            if (formula.betti != rack.betti || formula.torsion != rack.torsion) {
                ++disagreements;
                out.note("(" + std::to_string(N) + "," + std::to_string(w) + ")" +
                         (connected ? " connected" : " disconnected") + ": presentation " +
                         homology_str(formula) + " vs rack complex " + homology_str(rack));
            }
        }
    if (disagreements == 0) {
        out.summary = "presentation equals rack homology on all " + std::to_string(compared) +
                      " (N, w) pairs";
    } else {
        out.fail("presentation differs from rack homology on " + std::to_string(disagreements) +
                 " of " + std::to_string(compared) +
                 " (N, w) pairs; every disagreement is a disconnected quandle");
        out.note("the equality holds on every connected pair (gcd(1-w, N) = 1), where both sides "
                 "are free of rank 1; the disconnected rack complexes carry extra rank "
                 "(orbit-count growth) the two-variable presentation does not see");
        out.note("the pinned (4,3) presentation value itself is reproduced above, so the "
                 "presentation and the equality requirement cannot both hold as stated");
    }
    return out;
}

// ---------------------------------------------------------------------------
// 6. Chain map into the coinvariant homogeneous complex commutes with
//    boundaries: exhaustive degrees 1..3, 100 seeded generators at degree 4.

Outcome criterion_6() {
    Outcome out;
    struct Case {
        const char* name;
        Quandle Q;
    };
    for (const Case& c :
         {Case{"dihedral(3)", make_dihedral(3)}, Case{"alexander(5,2)", make_alexander(5, 2)}}) {
        auto reports = ik_verify(c.Q, 4, 0, 100, 0);
        for (const auto& r : reports) {
            std::string line = std::string(c.name) + " degree " + std::to_string(r.degree) + ": " +
                               std::to_string(r.checked) + " generators " +
                               (r.exhaustive ? "(exhaustive)" : "(seeded)");
            if (!r.ok) {
                out.fail(line + " FAIL at (" + [&] {
                    std::string s;
                    for (size_t i = 0; i < r.witness.size(); ++i)
                        s += (i ? "," : "") + std::to_string(r.witness[i]);
                    return s;
                }() + ")");
                return out;
            }
            bool degree_shape_ok = (r.degree <= 3) ? r.exhaustive : (!r.exhaustive && r.checked == 100);
            if (!degree_shape_ok) {
                out.fail(line + ": wrong verification mode for this degree");
                return out;
            }
            out.note(line + ": OK");
        }
    }
    out.summary = "chain map commutes with boundaries for both quandles (exhaustive <= 3, 100 "
                  "seeded at 4)";
    return out;
}

// ---------------------------------------------------------------------------
// 7. Averaging suite: commutation identities, one stable homotopy sign
//    convention, and constant-plus-coboundary splitting of 2-cocycles.

Outcome criterion_7() {
    Outcome out;
    Quandle d3 = make_dihedral(3);
    Quandle d5 = make_dihedral(5);

    CommutationReport comm = verify_commutation_identities(d3, 3);
    if (!comm.ok) {
        out.fail("commutation identity scan failed " + std::to_string(comm.failure_count) +
                 " times on dihedral(3)");
        return out;
    }
    out.note("all six commutation identities hold exhaustively on dihedral(3), degrees 1..3");

    // The convention (e1, e2) = (+1, (-1)^j) must survive on both quandles.
    struct Grid {
        const char* name;
        const Quandle* Q;
        int nmax;
    };
    for (const Grid& g : {Grid{"dihedral(3)", &d3, 3}, Grid{"dihedral(5)", &d5, 2}}) {
        for (int n = 1; n <= g.nmax; ++n)
            for (int j = 1; j <= n; ++j) {
                HomotopySignReport rep = homotopy_identity_check(*g.Q, n, j, 3, 1);
                const int want_e2 = (j % 2 == 0) ? 1 : -1;
                bool found = false;
                for (auto [e1, e2] : rep.consistent)
                    if (e1 == 1 && e2 == want_e2) found = true;
                if (!found) {
                    out.fail(std::string(g.name) + " (n=" + std::to_string(n) + ", j=" +
                             std::to_string(j) + "): convention (+1, (-1)^j) not consistent");
                    return out;
                }
            }
        out.note(std::string("homotopy sign convention (+1, (-1)^j) consistent on ") + g.name);
    }

    for (const Quandle* Q : {&d3, &d5}) {
        auto basis = cocycle_kernel_basis(*Q, 2);
        for (const auto& f : basis) {
            Trivialization t = trivialize_cocycle(*Q, f);
            RationalCochain rec = coboundary(t.g, *Q);
            for (Rat& v : rec.values) v += t.c;
            if (!(rec == f)) {
                out.fail("trivialization failed to reconstruct a kernel basis cocycle of size-" +
                         std::to_string(Q->n) + " quandle");
                return out;
            }
        }
        out.note("f = c + delta(g) exact for all " + std::to_string(basis.size()) +
                 " kernel basis 2-cocycles of dihedral(" + std::to_string(Q->n) + ")");
    }
    out.summary = "identities, sign convention, and cocycle splitting all verified";
    return out;
}

// ---------------------------------------------------------------------------
// 8. Realization round trips between cube and simplex coordinates.

Outcome criterion_8() {
    Outcome out;
    std::mt19937_64 rng(0);
    auto random_rat01 = [&rng]() {
        long den = 1 + (long)(rng() % 30);
        long num = (long)(rng() % (den + 1));
        return Rat(num, den);
    };
    for (int p = 1; p <= 4; ++p) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Rat> t(p);
            bool distinct = false;
            while (!distinct) {
                for (Rat& v : t) v = random_rat01();
                distinct = true;
                for (int i = 0; i < p && distinct; ++i)
                    for (int j = i + 1; j < p; ++j)
                        if (t[i] == t[j]) {
                            distinct = false;
                            break;
                        }
            }
            PointImage im = phi_point(t);
            Rat sum = 0;
            for (const Rat& b : im.barycentric) {
                if (b < 0) {
                    out.fail("negative barycentric coordinate");
                    return out;
                }
                sum += b;
            }
            Blocks blocks;
            for (int i : im.order) blocks.push_back({i});
            if (sum != 1 || psi_point(im.barycentric, blocks, p) != t) {
                out.fail("round trip failed at dimension " + std::to_string(p));
                return out;
            }
        }
        // Inverse direction on strictly interior barycentric points.
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rat> b(p + 1);
            Rat sum = 0;
            for (Rat& v : b) {
                v = Rat(1 + (long)(rng() % 9), 1 + (long)(rng() % 7));
                sum += v;
            }
            for (Rat& v : b) v /= sum;
            std::vector<int> order(p);
            std::iota(order.begin(), order.end(), 1);
            std::shuffle(order.begin(), order.end(), rng);
            Blocks blocks;
            for (int i : order) blocks.push_back({i});
            std::vector<Rat> t = psi_point(b, blocks, p);
            PointImage im = phi_point(t);
            if (im.barycentric != b || im.order != order) {
                out.fail("interior inverse round trip failed at dimension " + std::to_string(p));
                return out;
            }
        }
    }

    PointImage tie = phi_point({Rat(1, 2), Rat(1, 2)});
    if (tie.barycentric != std::vector<Rat>{Rat(1, 2), Rat(0), Rat(1, 2)} ||
        tie.order != std::vector<int>{1, 2}) {
        out.fail("tie edge case produced the wrong simplex point");
        return out;
    }
    PointImage vertex = phi_point({Rat(0), Rat(0), Rat(0)});
    if (vertex.barycentric != std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)}) {
        out.fail("vertex edge case produced the wrong barycentric point");
        return out;
    }
    out.summary = "1000 forward and 200 inverse exact round trips per dimension p <= 4, plus tie "
                  "and vertex cases";
    return out;
}

// ---------------------------------------------------------------------------
// 9. Determinant 2-cocycle of the rational plane quandle.

Outcome criterion_9() {
    Outcome out;
    DetCocycleReport rep = det_cocycle_check(seeded_plane_triples(100, 0));
    if (rep.checked != 100 || rep.failures != 0) {
        out.fail("coboundary nonzero on " + std::to_string(rep.failures) + " of " +
                 std::to_string(rep.checked) + " seeded triples");
        return out;
    }
    out.summary = "coboundary vanishes exactly on 100 seeded rational triples";
    out.note("non-triviality of the cocycle class is documented as out of scope");
    return out;
}

// ---------------------------------------------------------------------------
// 10. One-element quandle: free rank 1 in every degree; point series all ones.

Outcome criterion_10() {
    Outcome out;
    Quandle pt = make_trivial(1);
    for (int n = 0; n <= 6; ++n) {
        HomologyResult h = rack_homology(pt, n);
        if (h.betti != 1 || !h.torsion.empty()) {
            out.fail("degree " + std::to_string(n) + ": " + homology_str(h));
            return out;
        }
    }
    IntSeries bq = bq_series(ints({1}), 16);
    for (int k = 0; k <= 16; ++k)
        if (bq.coeffs[k] != 1) {
            out.fail("point series coefficient " + std::to_string(k) + " is " +
                     bq.coeffs[k].str());
            return out;
        }
    out.summary = "homology is a single free class in degrees 0..6 and the point series is all "
                  "ones";
    return out;
}

// ---------------------------------------------------------------------------
// 11. Seeded property suites.

Outcome criterion_11() {
    Outcome out;
    std::mt19937_64 rng(2718281828);

    // Boundary squared vanishes on the rack complexes.
    for (const Quandle& Q : {make_dihedral(3), make_dihedral(4), make_trivial(3),
                             make_alexander(5, 2)}) {
        for (int n = 1; n <= 3; ++n)
            if (!sparse_product_is_zero(boundary_matrix_sparse(Q, n),
                                        boundary_matrix_sparse(Q, n + 1))) {
                out.fail("boundary squared nonzero");
                return out;
            }
    }
    out.note("d o d = 0 on four rack complexes, degrees 1..3");

    // Coboundary squared vanishes on seeded rational cochains.
    for (const Quandle& Q : {make_dihedral(3), make_dihedral(5)}) {
        for (int deg = 1; deg <= 2; ++deg)
            for (int trial = 0; trial < 10; ++trial) {
                RationalCochain f(deg, Q.n);
                for (Rat& v : f.values)
                    v = Rat((long)(rng() % 21) - 10, 1 + (long)(rng() % 6));
                if (!coboundary(coboundary(f, Q), Q).is_zero()) {
                    out.fail("coboundary squared nonzero");
                    return out;
                }
            }
    }
    out.note("delta o delta = 0 on 40 seeded rational cochains");

    // Smith normal form transform reconstruction.
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
        IntMatrix M(r, c);
        for (Int& v : M.a) v = (long)(rng() % 19) - 9;
        SnfResult s = smith_normal_form(M);
        IntMatrix diag(r, c);
        for (size_t i = 0; i < s.diagonal.size(); ++i) diag.at((int)i, (int)i) = s.diagonal[i];
        if (mat_mul(mat_mul(s.left, M), s.right) != diag ||
            mat_mul(s.left, s.left_inv) != IntMatrix::identity(r) ||
            mat_mul(s.right_inv, s.right) != IntMatrix::identity(c) ||
            mat_mul(mat_mul(s.left_inv, diag), s.right_inv) != M) {
            out.fail("normal form reconstruction failed");
            return out;
        }
    }
    out.note("normal-form transforms reconstruct 25 seeded matrices exactly");

    // Face identity scans, cubical and simplicial.
    for (const Quandle& Q : {make_dihedral(3), make_trivial(2)}) {
        CubicalSet X = rack_space(Q, false, 4);
        if (!cubical_identity_scan(X).ok || !simplicial_identity_scan(triangulate(X)).ok) {
            out.fail("face identity scan failed");
            return out;
        }
    }
    {
        Quandle d3 = make_dihedral(3);
        CubicalSet XQ = rack_space(d3, true, 2);
        if (!cubical_identity_scan(XQ).ok || !simplicial_identity_scan(triangulate(XQ)).ok) {
            out.fail("face identity scan failed on the quandle-base space");
            return out;
        }
    }
    out.note("cubical and simplicial face identities hold on all constructed spaces");

    // Rank extraction inverts the Euler product.
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Int> u(8);
        for (Int& v : u) v = (long)(rng() % 4);
        if (extract_ranks(euler_product(u, 8), 8) != u) {
            out.fail("extract/product round trip failed");
            return out;
        }
    }
    out.note("extract o euler_product = id on 25 seeded exponent vectors");

    out.summary = "all property suites green";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
        return 2;
    }
    const int n = std::atoi(argv[1]);
    Outcome (*runners[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                              criterion_5, criterion_6, criterion_7, criterion_8,
                              criterion_9, criterion_10, criterion_11};
    if (n < 1 || n > 11) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
        return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = runners[n - 1]();
    } catch (const std::exception& e) {
        out.pass = false;
        out.summary = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    // Runtime budgets are part of the gate where a criterion pins one.
    const double budget[] = {1.0, 0, 30.0, 0, 0, 60.0, 0, 0, 0, 0, 300.0};
    if (out.pass && budget[n - 1] > 0 && secs > budget[n - 1]) {
        out.pass = false;
        out.summary = "over the runtime budget: " + std::to_string(secs) + " s > " +
                      std::to_string(budget[n - 1]) + " s";
    }

    std::printf("criterion %d: %s — %s (%.2f s)\n", n, out.pass ? "PASS" : "FAIL",
                out.summary.c_str(), secs);
    for (const auto& line : out.detail) std::printf("  %s\n", line.c_str());
    return out.pass ? 0 : 1;
}
