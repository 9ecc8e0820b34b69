#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigonal/crimps.hpp"
#include "trigonal/linalg.hpp"

using namespace trig;

namespace {

std::mt19937 rng(90121733);

Rational rand_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    return rat(num(rng), den(rng));
}

QVec rand_params(int dim) {
    QVec p(static_cast<size_t>(dim));
    for (auto& v : p) v = rand_rat();
    return p;
}

// enumerate (stratum, component) pairs with positive-dimensional variants
std::vector<std::pair<CrimpStratum, int>> all_strata(int bmax) {
    std::vector<std::pair<CrimpStratum, int>> out;
    for (int b = 1; b <= bmax; ++b)
        for (int twice_l = 0; twice_l <= 2 * b; ++twice_l)
            for (LocalRamType ram :
                 {LocalRamType::Etale, LocalRamType::Total, LocalRamType::Simple}) {
                Rational l = rat(twice_l, 2);
                auto s = stratum(b, l, ram);
                if (!s) continue;
                for (int comp = 1; comp <= s->components; ++comp)
                    out.emplace_back(*s, comp);
            }
    return out;
}

bool same_module(const CrimpGens& a, const CrimpGens& b) {
    // compare spans of the flattened module columns
    auto cols_of = [](const CrimpGens& c) {
        QMat rows;
        std::vector<CrimpElem> base = c.gens;
        base.insert(base.begin(), crimp_one(c));
        for (const auto& g : base)
            for (int j = 0; j < c.N; ++j)
                rows.push_back(crimp_flatten(c, crimp_tshift(c, g, j)));
        return rows;
    };
    QMat ra = cols_of(a), rb = cols_of(b);
    QMat joint = ra;
    joint.insert(joint.end(), rb.begin(), rb.end());
    return rank(ra) == rank(joint) && rank(rb) == rank(joint);
}

} // namespace

TEST_CASE("hyperelliptic limit crimp") {
    for (int g = 2; g <= 5; ++g) {
        CrimpGens c = hyperelliptic_limit(g);
        CHECK(is_subalgebra(c));
        auto [mu, delta] = mu_delta(c);
        CHECK(mu == g);
        CHECK(delta == g + 2);
        // the generator y satisfies (y^2 - t^(2g))(y - t) = 0 componentwise
        CrimpElem y = c.gens[0];
        CrimpElem t2g = crimp_tshift(c, crimp_one(c), 2 * g);
        CrimpElem t1 = crimp_tshift(c, crimp_one(c), 1);
        CrimpElem lhs = crimp_mul(c, crimp_mul(c, y, y), y);
        for (int i = 0; i < 3; ++i) {
            Jet v = lhs.parts[static_cast<size_t>(i)] -
                    (crimp_mul(c, y, y).parts[static_cast<size_t>(i)] *
                     t1.parts[static_cast<size_t>(i)]) -
                    (t2g.parts[static_cast<size_t>(i)] * y.parts[static_cast<size_t>(i)]) +
                    (t2g.parts[static_cast<size_t>(i)] * t1.parts[static_cast<size_t>(i)]);
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("is_subalgebra pinned examples") {
    // etale b=8: m=1, n=3, f = (1, h, -h)
    auto s = stratum(8, rat(2), LocalRamType::Etale);
    REQUIRE(s.has_value());
    CHECK(s->m == 1);
    CHECK(s->n == 3);

    auto make = [&](const Jet& h) {
        CrimpGens c;
        c.ram = LocalRamType::Etale;
        c.N = 3;
        Jet one = Jet::one(3);
        c.gens = {CrimpElem{{one.shift_up(1), h.shift_up(1), (-h).shift_up(1)}}};
        return c;
    };
    // f = (1, 1, -1) is closed: it is the h = 0 point of the third
    // component in disguise (scale by -1/2 and translate by 1/2)
    CrimpGens degen = make(Jet::one(3));
    CHECK(is_subalgebra(degen));
    CHECK(mu_delta(degen) == std::pair<Rational, int>{rat(2), 4});
    // h = t is the component normal form and keeps (mu, delta) = (2, 4)
    CrimpGens good = make(Jet::monomial(3, 1));
    CHECK(is_subalgebra(good));
    CHECK(mu_delta(good) == std::pair<Rational, int>{rat(2), 4});
    // non-component pattern (1, 2, 3) is not closed either
    CrimpGens bad;
    bad.ram = LocalRamType::Etale;
    bad.N = 3;
    bad.gens = {CrimpElem{{Jet::monomial(3, 1), Jet::monomial(3, 1) * rat(2),
                           Jet::monomial(3, 1) * rat(3)}}};
    CHECK_FALSE(is_subalgebra(bad));
}

TEST_CASE("mu_delta pinned examples") {
    // full algebra: S = S~
    CrimpGens full;
    full.ram = LocalRamType::Etale;
    full.N = 2;
    full.gens = {CrimpElem{{Jet::one(2), Jet::zero(2), Jet::zero(2)}},
                 CrimpElem{{Jet::zero(2), Jet::one(2), Jet::zero(2)}}};
    auto [mu0, d0] = mu_delta(full);
    CHECK(mu0 == 0);
    CHECK(d0 == 0);

    // total with generator x-valuations (2, 7): valuation readout
    CrimpGens tot;
    tot.ram = LocalRamType::Total;
    tot.N = 3;
    tot.gens = {CrimpElem{{Jet::monomial(9, 2)}}, CrimpElem{{Jet::monomial(9, 7)}}};
    auto [mu1, d1] = mu_delta(tot);
    CHECK(mu1 == rat(5, 3));
    CHECK(d1 == 2); // floor(2/3) + floor(7/3)
}

TEST_CASE("stratum pinned classification values") {
    auto e1 = stratum(8, rat(2), LocalRamType::Etale);
    REQUIRE(e1.has_value());
    CHECK(e1->dimension == 1);
    CHECK(e1->components == 3);

    auto e2 = stratum(8, rat(0), LocalRamType::Etale);
    REQUIRE(e2.has_value());
    CHECK(e2->m == 2);
    CHECK(e2->n == 2);
    CHECK(e2->dimension == 0);
    CHECK(e2->components == 1);

    // simple type needs m, n of opposite parity: even branch degree is empty
    CHECK_FALSE(stratum(6, rat(1), LocalRamType::Simple).has_value());
    auto s1 = stratum(7, rat(1, 2), LocalRamType::Simple);
    REQUIRE(s1.has_value());
    CHECK(s1->m == 3);
    CHECK(s1->n == 4);
    CHECK(s1->dimension == 0);
    auto s2 = stratum(7, rat(3, 2), LocalRamType::Simple);
    REQUIRE(s2.has_value());
    CHECK(s2->m == 2);
    CHECK(s2->n == 5);
    CHECK(s2->dimension == 1);
    // n > 2m with m odd is empty (b=5, l=3/2: m=1, n=4)
    CHECK_FALSE(stratum(5, rat(3, 2), LocalRamType::Simple).has_value());
    // n > 2m with m even survives (b=9, l=5/2: m=2, n=7, dim m/2)
    auto s3 = stratum(9, rat(5, 2), LocalRamType::Simple);
    REQUIRE(s3.has_value());
    CHECK(s3->dimension == 1);

    // total: m or n divisible by 3, or 2m < n, is empty
    CHECK_FALSE(stratum(4, rat(0), LocalRamType::Total).has_value()); // m=n=3
    auto t1 = stratum(6, rat(1, 3), LocalRamType::Total);
    REQUIRE(t1.has_value());
    CHECK(t1->m == 4);
    CHECK(t1->n == 5);
    CHECK(t1->dimension == 0);
    auto t2 = stratum(6, rat(1), LocalRamType::Total);
    CHECK_FALSE(t2.has_value()); // m=3 divisible by 3
}

TEST_CASE("sampled crimps: closure, invariants, branch parity") {
    for (const auto& [s, comp] : all_strata(16)) {
        QVec params = rand_params(s.dimension);
        CrimpGens c = sample_crimp(s, params, comp);
        CHECK(is_subalgebra(c));
        auto [mu, delta] = mu_delta(c);
        CHECK(mu == s.l);
        // 2*delta accounts for b minus the branching of the normalization
        int ram_br = s.ram == LocalRamType::Total ? 2
                     : s.ram == LocalRamType::Simple ? 1 : 0;
        CHECK(2 * delta == s.b - ram_br);
    }
}

TEST_CASE("etale invariants are S3-invariant and unit-scale-invariant") {
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> bd(1, 8);
        auto s = stratum(2 * bd(rng), rat(bd(rng) % 4), LocalRamType::Etale);
        if (!s) continue;
        std::uniform_int_distribution<int> cd(1, s->components);
        int comp = cd(rng);
        CrimpGens c = sample_crimp(*s, rand_params(s->dimension), comp);
        auto base = mu_delta(c);

        std::array<int, 3> perm{1, 2, 0};
        CrimpGens p = c;
        for (auto& g : p.gens)
            g.parts = {g.parts[static_cast<size_t>(perm[0])],
                       g.parts[static_cast<size_t>(perm[1])],
                       g.parts[static_cast<size_t>(perm[2])]};
        CHECK(mu_delta(p) == base);
        CHECK(is_subalgebra(p));

        // scaling the generator by a unit keeps the module itself
        CrimpGens u = c;
        Jet unit = Jet::one(c.N) + Jet::monomial(c.N, 1, rat(3));
        for (auto& g : u.gens)
            for (auto& part : g.parts) part = part * unit;
        CHECK(same_module(u, c));
        CHECK(mu_delta(u) == base);
    }
}

TEST_CASE("tangent-space dimension matches the classification") {
    for (const auto& [s, comp] : all_strata(12)) {
        QVec params = rand_params(s.dimension);
        // generic nonzero parameters avoid special loci
        for (auto& v : params)
            if (v == 0) v = rat(1, 2);
        CrimpGens c = sample_crimp(s, params, comp);
        CHECK(stratum_tangent_dimension(s, c) == s.dimension);
    }
}

TEST_CASE("globalize and maroni bound") {
    CrimpGens h2 = hyperelliptic_limit(2);
    LatticeSheaf F2 = globalize(h2);
    CHECK(splitting_type(F2) == std::pair<int, int>{2, 2});
    CHECK(colength(F2) == 4); // = delta

    // trivial crimp: full lattice
    CrimpGens full;
    full.ram = LocalRamType::Etale;
    full.N = 1;
    full.gens = {CrimpElem{{Jet::one(1), Jet::zero(1), Jet::zero(1)}},
                 CrimpElem{{Jet::zero(1), Jet::one(1), Jet::zero(1)}}};
    CHECK(colength(globalize(full)) == 0);

    CrimpGens tot;
    tot.ram = LocalRamType::Total;
    tot.N = 2;
    tot.gens = {CrimpElem{{Jet::monomial(6, 1)}}, CrimpElem{{Jet::monomial(6, 2)}}};
    CHECK_THROWS_AS(globalize(tot), UnsupportedRamType);

    // Maroni <= mu on random etale crimps; colength = delta
    int checked = 0;
    for (const auto& [s, comp] : all_strata(16)) {
        if (s.ram != LocalRamType::Etale) continue;
        CrimpGens c = sample_crimp(s, rand_params(s.dimension), comp);
        LatticeSheaf F = globalize(c);
        auto [mu, delta] = mu_delta(c);
        CHECK(colength(F) == delta);
        auto [mp, np] = splitting_type(F);
        CHECK(rat(np - mp) <= mu);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("sample_crimp input validation") {
    auto s = stratum(8, rat(2), LocalRamType::Etale);
    REQUIRE(s.has_value());
    CHECK_THROWS_AS(sample_crimp(*s, QVec{}, 1), DimensionMismatch);
    CHECK_THROWS_AS(sample_crimp(*s, QVec{rat(1)}, 4), MalformedInput);
    CHECK_THROWS_AS(stratum(0, rat(1), LocalRamType::Etale), MalformedInput);
    CHECK_THROWS_AS(stratum(4, rat(-1), LocalRamType::Etale), MalformedInput);
}
