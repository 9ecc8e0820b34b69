#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigonal/splitting.hpp"

using namespace trig;

namespace {

std::mt19937 rng(46120911);

LatticeSheaf full_lattice(int N) {
    LatticeSheaf F;
    F.trunc = N;
    F.gens0 = {{Jet::one(N), Jet::zero(N)}, {Jet::zero(N), Jet::one(N)}};
    return F;
}

LatticeSheaf diag_lattice(int N, int e1, int e2) {
    LatticeSheaf F;
    F.trunc = N;
    F.gens0 = {{Jet::monomial(N, e1), Jet::zero(N)},
               {Jet::zero(N), Jet::monomial(N, e2)}};
    return F;
}

// the hyperelliptic-limit lattice (rank-2 projection of the three sheets)
LatticeSheaf hyperelliptic_lattice(int g) {
    const int N = g + 1;
    LatticeSheaf F;
    F.trunc = N;
    Jet t = Jet::monomial(N, 1), tg = Jet::monomial(N, g);
    F.gens0 = {{t + tg, tg * rat(2)}};
    F.has_sheets = true;
    F.sheet_gens0 = {{t, tg, -tg}};
    return F;
}

} // namespace

TEST_CASE("h0_twist pinned values") {
    CHECK(h0_twist(full_lattice(3), 1) == 4);
    CHECK(h0_twist(full_lattice(3), 0) == 2);
    CHECK(h0_twist(diag_lattice(5, 1, 3), 2) == 2);
    CHECK(h0_twist(diag_lattice(5, 1, 3), 3) == 4);
    CHECK(h0_twist(diag_lattice(5, 1, 3), 0) == 0);

    LatticeSheaf F;
    F.trunc = 2;
    F.gens0 = {{Jet::monomial(2, 1), Jet::monomial(2, 1)}};
    CHECK(h0_twist(F, 0) == 0);
    CHECK(h0_twist(F, 1) == 1);
}

TEST_CASE("splitting_type pinned values") {
    CHECK(splitting_type(full_lattice(3)) == std::pair<int, int>{0, 0});
    CHECK(splitting_type(diag_lattice(6, 1, 3)) == std::pair<int, int>{1, 3});

    LatticeSheaf F;
    F.trunc = 4;
    F.gens0 = {{Jet::monomial(4, 1), Jet::monomial(4, 1)}};
    CHECK(colength(F) == 5);
    CHECK(splitting_type(F) == std::pair<int, int>{1, 4});

    // hyperelliptic-limit lattices: splitting recorded from the h0 oracle
    CHECK(splitting_type(hyperelliptic_lattice(2)) == std::pair<int, int>{2, 2});
    CHECK(splitting_type(hyperelliptic_lattice(4)) == std::pair<int, int>{2, 4});
}

TEST_CASE("constraint at infinity") {
    LatticeSheaf F = full_lattice(2);
    F.constrain_inf = true;
    F.trunc_inf = 2;
    F.gens_inf = {{Jet::monomial(2, 1), Jet::zero(2)}, {Jet::zero(2), Jet::one(2)}};
    CHECK(colength(F) == 1);
    CHECK(h0_twist(F, 0) == 1);
    CHECK(splitting_type(F) == std::pair<int, int>{0, 1});
}

TEST_CASE("h0 sequence shape and degree bookkeeping") {
    std::uniform_int_distribution<int> ed(0, 3);
    for (int iter = 0; iter < 25; ++iter) {
        int e1 = ed(rng), e2 = ed(rng), N = e1 + e2 + 3;
        // random upper-triangular lattice: columns (t^e1, u), (0, t^e2)
        Jet u(N);
        std::uniform_int_distribution<int> cd(-3, 3);
        for (int i = 0; i < N; ++i) u.c[static_cast<size_t>(i)] = rat(cd(rng));
        LatticeSheaf F;
        F.trunc = N;
        F.gens0 = {{Jet::monomial(N, e1), u}, {Jet::zero(N), Jet::monomial(N, e2)}};
        int col = colength(F);
        CHECK(col == e1 + e2);
        auto [mp, np] = splitting_type(F);
        CHECK(mp + np == col);
        CHECK(mp <= np);
        int prev = h0_twist(F, -1);
        CHECK(prev == 0);
        int prevd = 0;
        for (int k = 0; k <= col + 2; ++k) {
            int h = h0_twist(F, k);
            int d = h - prev;
            CHECK(d >= 0);
            CHECK(d <= 2);
            if (k > np) CHECK(d == 2);
            if (prevd == 2) CHECK(d == 2);
            // exact split-bundle formula
            CHECK(h == std::max(0, k - mp + 1) + std::max(0, k - np + 1));
            prev = h;
            prevd = d;
        }
    }
}

TEST_CASE("maroni invariant") {
    UniPoly one = UniPoly::constant(rat(1));
    MirandaCover bal(3, 3, UniPoly(), UniPoly(), UniPoly(), one);
    CHECK(maroni(bal, 1) == 0);

    MirandaCover c(1, 2, UniPoly(), UniPoly(QVec{rat(0), rat(1)}),
                   UniPoly(QVec{rat(1), rat(0), rat(1)}),
                   UniPoly::constant(rat(3)));
    REQUIRE(fiber_type(c, rat(1), rat(0)) == FiberType::Etale);
    CHECK(maroni(c, 1) == 1);
    CHECK(maroni(c, 2) == maroni(cyclic_pullback(c, 2), 1) / 2);
    CHECK(maroni(c, 3) == maroni(cyclic_pullback(c, 3), 1) / 3);

    // parity: maroni = n - m has the parity of g = m + n - 2
    for (int m = 0; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) {
            Rational M = rat(n - m);
            int g = m + n - 2;
            CHECK((M.get_num() - g) % 2 == 0);
        }
}

TEST_CASE("balance_by_twist on hyperelliptic lattices") {
    {
        LatticeSheaf F = hyperelliptic_lattice(2);
        auto d = balance_by_twist(F, 2, 2);
        CHECK(d == std::array<int, 3>{0, 0, 0});
    }
    for (int g = 3; g <= 6; ++g) {
        LatticeSheaf F = hyperelliptic_lattice(g);
        auto [mp, np] = splitting_type(F);
        auto d = balance_by_twist(F, mp, np);
        CHECK(d[0] + d[1] + d[2] == np - mp);
        int zero = 0;
        for (int s = 0; s < 3; ++s)
            if (d[static_cast<size_t>(s)] == 0) ++zero;
        CHECK(zero >= 1); // at most two sheets carry the divisor
    }
}

TEST_CASE("balance_by_twist requires the sheet structure") {
    CHECK_THROWS_AS(balance_by_twist(diag_lattice(6, 1, 3), 1, 3),
                    NotSplitNormalization);
}
