#include <algorithm>
#include <random>
#include <vector>

#include "core/delta.hpp"
#include "doctest.h"

using namespace rf;

namespace {

// Random rational in [0,1] with denominator up to 12.
Rat random_unit_rat(std::mt19937_64& rng) {
    long den = 1 + (long)(rng() % 12);
    long num = (long)(rng() % (den + 1));
    return Rat(num, den);
}

std::vector<Rat> random_distinct_point(std::mt19937_64& rng, int p) {
    while (true) {
        std::vector<Rat> t(p);
        for (Rat& v : t) v = random_unit_rat(rng);
        bool distinct = true;
        for (int i = 0; i < p && distinct; ++i)
            for (int j = i + 1; j < p; ++j)
                if (t[i] == t[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) return t;
    }
}

Blocks singleton_blocks(const std::vector<int>& order) {
    Blocks b;
    for (int i : order) b.push_back({i});
    return b;
}

}  // namespace

TEST_SUITE("delta") {

TEST_CASE("ordered partition counts and the base case") {
    CHECK(ordered_partitions(1, 1).size() == 1);
    CHECK(ordered_partitions(2, 1).size() == 1);
    CHECK(ordered_partitions(3, 2).size() == 6);
    CHECK(ordered_partitions(3, 3).size() == 6);
    CHECK(ordered_partitions(4, 2).size() == 14);
    CHECK(ordered_partitions(4, 3).size() == 36);
    CHECK(ordered_partitions(4, 4).size() == 24);

    auto two = ordered_partitions(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Blocks{{1}, {2}});
    CHECK(two[1] == Blocks{{2}, {1}});
}

TEST_CASE("partition counts sum to the ordered Bell numbers") {
    long long bell3 = 0, bell4 = 0;
    for (int k = 1; k <= 3; ++k) bell3 += (long long)ordered_partitions(3, k).size();
    for (int k = 1; k <= 4; ++k) bell4 += (long long)ordered_partitions(4, k).size();
    CHECK(bell3 == 13);
    CHECK(bell4 == 75);
}

TEST_CASE("simplex counts for the dihedral(3) rack space") {
    Quandle d3 = make_dihedral(3);
    CubicalSet X = rack_space(d3, false, 4);
    DeltaSet D = triangulate(X);
    CHECK(D.max_degree == 4);
    CHECK(D.simplex_count(0) == 1);
    CHECK(D.simplex_count(1) == 120);
    CHECK(D.simplex_count(2) == 1314);
    CHECK(D.simplex_count(3) == 3078);
    CHECK(D.simplex_count(4) == 1944);
}

TEST_CASE("simplex indexing round trips") {
    Quandle d3 = make_dihedral(3);
    CubicalSet X = rack_space(d3, false, 3);
    DeltaSet D = triangulate(X);
    for (int k = 0; k <= 3; ++k)
        for (long long idx = 0; idx < D.simplex_count(k); ++idx) {
            auto s = D.simplex(k, idx);
            CHECK(D.sindex(k, s.n, s.cell, s.pi) == idx);
        }
}

TEST_CASE("simplicial identities hold after triangulation") {
    struct Case {
        Quandle Q;
        bool y_is_quandle;
        int P;
    };
    for (const Case& c : {Case{make_dihedral(3), false, 4}, Case{make_trivial(2), false, 4},
                          Case{make_dihedral(3), true, 2}}) {
        CubicalSet X = rack_space(c.Q, c.y_is_quandle, c.P);
        DeltaSet D = triangulate(X);
        CHECK(simplicial_identity_scan(D).ok);
    }
}

TEST_CASE("triangulated homology matches the cubical complex") {
    struct Case {
        Quandle Q;
        int P;
        int top;
    };
    for (const Case& c : {Case{make_trivial(1), 4, 3}, Case{make_trivial(2), 3, 1},
                          Case{make_dihedral(3), 3, 1}, Case{make_dihedral(3), 4, 2}}) {
        CubicalSet X = rack_space(c.Q, false, c.P);
        DeltaSet D = triangulate(X);
        for (int n = 0; n <= c.top; ++n) {
            HomologyResult cub = cubical_homology(X, n);
            HomologyResult del = delta_homology(D, n);
            CHECK(cub.betti == del.betti);
            CHECK(cub.torsion == del.torsion);
        }
    }
}

TEST_CASE("boundary squared vanishes on the simplicial side") {
    Quandle d3 = make_dihedral(3);
    CubicalSet X = rack_space(d3, false, 3);
    DeltaSet D = triangulate(X);
    for (int k = 1; k <= 2; ++k)
        CHECK(sparse_product_is_zero(delta_boundary_matrix(D, k), delta_boundary_matrix(D, k + 1)));
}

TEST_CASE("barycentric image of a cube point") {
    PointImage im = phi_point({Rat(7, 10), Rat(3, 10)});
    CHECK(im.barycentric == std::vector<Rat>{Rat(3, 10), Rat(2, 5), Rat(3, 10)});
    CHECK(im.order == std::vector<int>{1, 2});

    PointImage tie = phi_point({Rat(1, 2), Rat(1, 2)});
    CHECK(tie.barycentric == std::vector<Rat>{Rat(1, 2), Rat(0), Rat(1, 2)});
    CHECK(tie.order == std::vector<int>{1, 2});

    PointImage vertex = phi_point({Rat(0), Rat(0), Rat(0)});
    CHECK(vertex.barycentric == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(vertex.order == std::vector<int>{1, 2, 3});

    PointImage ones = phi_point({Rat(1), Rat(1)});
    CHECK(ones.barycentric == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

    PointImage empty = phi_point({});
    CHECK(empty.barycentric == std::vector<Rat>{Rat(1)});
    CHECK(empty.order.empty());

    for (const Rat& bad : {Rat(3, 2), Rat(-1, 10)}) {
        try {
            phi_point({bad});
            FAIL("expected OutOfRange");
        } catch (const Error& e) {
            CHECK(e.code == ErrCode::OutOfRange);
        }
    }
}

TEST_CASE("inverse realization on coarse partitions") {
    std::vector<Rat> t = psi_point({Rat(1, 3), Rat(2, 3)}, {{1, 2}}, 2);
    CHECK(t == std::vector<Rat>{Rat(2, 3), Rat(2, 3)});

    CHECK(psi_point({Rat(1), Rat(0), Rat(0)}, {{2}, {1}}, 2) == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(psi_point({Rat(0), Rat(0), Rat(1)}, {{2}, {1}}, 2) == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("round trips between cube and simplex coordinates") {
    std::mt19937_64 rng(5150);
    for (int p = 1; p <= 4; ++p) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rat> t = random_distinct_point(rng, p);
            PointImage im = phi_point(t);
            Rat total = 0;
            for (const Rat& b : im.barycentric) {
                CHECK(b >= 0);
                total += b;
            }
            CHECK(total == 1);
            CHECK(psi_point(im.barycentric, singleton_blocks(im.order), p) == t);
        }
        // Interior barycentric points on a shuffled singleton simplex.
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rat> b(p + 1);
            Rat sum = 0;
            for (Rat& v : b) {
                v = Rat(1 + (long)(rng() % 9), 1 + (long)(rng() % 7));
                sum += v;
            }
            for (Rat& v : b) v /= sum;
            std::vector<int> order(p);
            for (int i = 0; i < p; ++i) order[i] = i + 1;
            std::shuffle(order.begin(), order.end(), rng);

            std::vector<Rat> t = psi_point(b, singleton_blocks(order), p);
            PointImage im = phi_point(t);
            CHECK(im.barycentric == b);
            CHECK(im.order == order);
        }
    }
}

TEST_CASE("psi validates its partition") {
    try {
        psi_point({Rat(1, 2), Rat(1, 2)}, {{1}}, 2);
        FAIL("expected Invalid");
    } catch (const Error& e) {
        CHECK(e.code == ErrCode::Invalid);
    }
}

TEST_CASE("triangulation size guard") {
    try {
        triangulate(rack_space(make_trivial(10), false, 5));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code == ErrCode::TooLarge);
    }
}

}  // TEST_SUITE
