#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigonal/json_io.hpp"

using namespace trig;

TEST_CASE("rationals travel as fraction strings") {
    CHECK(rational_to_json(rat(-3, 7)) == Json("-3/7"));
    CHECK(rational_to_json(rat(5)) == Json("5"));
    CHECK(rational_from_json(Json("22/7")) == rat(22, 7));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), MalformedInput);
    CHECK_THROWS_AS(rational_from_json(Json("1.5")), MalformedInput);
}

TEST_CASE("cover round trip is bit-exact") {
    MirandaCover cover(1, 2, UniPoly::zero(), UniPoly::monomial(1),
                       UniPoly(QVec{rat(1), rat(1, 2), rat(1)}),
                       UniPoly::constant(rat(-3)));
    Json j = cover_to_json(cover);
    MirandaCover back = cover_from_json(j);
    CHECK(cover_to_json(back).dump() == j.dump());
    CHECK(back.m == 1);
    CHECK(back.c.coeff(1) == rat(1, 2));

    CHECK_THROWS_AS(cover_from_json(Json::parse("{\"m\": 1}")), MalformedInput);
    CHECK_THROWS_AS(cover_from_json(Json::parse("[]")), MalformedInput);
}

TEST_CASE("crimp round trip is bit-exact per ramification type") {
    CrimpGens etale = hyperelliptic_limit(4);
    Json j = crimp_to_json(etale);
    CHECK(j["ram"] == "etale");
    CrimpGens back = crimp_from_json(j);
    CHECK(crimp_to_json(back).dump() == j.dump());
    CHECK(mu_delta(back) == mu_delta(etale));

    // the override re-truncates every part
    CrimpGens wider = crimp_from_json(j, 8);
    CHECK(wider.N == 8);
    CHECK(wider.gens[0].parts[0].trunc == 8);

    auto s = stratum(12, rat(4, 3), LocalRamType::Total);
    REQUIRE(s);
    CrimpGens tot = sample_crimp(*s, QVec{rat(-2)}, 1);
    Json jt = crimp_to_json(tot);
    CHECK(crimp_to_json(crimp_from_json(jt)).dump() == jt.dump());
    CHECK(mu_delta(crimp_from_json(jt)) == mu_delta(tot));

    auto ss = stratum(11, rat(3, 2), LocalRamType::Simple);
    REQUIRE(ss);
    CrimpGens sim = sample_crimp(*ss, QVec{rat(3)}, 1);
    Json js = crimp_to_json(sim);
    CHECK(crimp_to_json(crimp_from_json(js)).dump() == js.dump());

    Json bad = j;
    bad["ram"] = "wild";
    CHECK_THROWS_AS(crimp_from_json(bad), MalformedInput);
}

TEST_CASE("family and wpoint round trips") {
    ExtensionFamily f;
    f.m = 2;
    f.n = 6;
    f.t_trunc = 5;
    f.e = {Jet::one(5), Jet::monomial(5, 1, rat(1, 3)), Jet::zero(5)};
    f.validate();
    Json j = family_to_json(f);
    ExtensionFamily back = family_from_json(j);
    CHECK(family_to_json(back).dump() == j.dump());
    CHECK(back.e == f.e);

    WPoint w;
    w.h = 3;
    w.a = {rat(1), rat(0), rat(2)};
    w.b = {rat(0), rat(1, 2), rat(0)};
    w.c = {rat(0), rat(0), rat(-1)};
    w.d = {rat(4), rat(0)};
    Json jw = wpoint_to_json(w);
    CHECK(jw["g"] == 4);
    WPoint backw = wpoint_from_json(jw);
    CHECK(backw == w);
    CHECK(wpoint_to_json(backw).dump() == jw.dump());

    Json badw = jw;
    badw["g"] = 5;
    CHECK_THROWS_AS(wpoint_from_json(badw), MalformedInput);
}

TEST_CASE("fan emission") {
    ChamberFan fan = chamber_fan(4);
    Json j = fan_to_json(fan);
    CHECK(j["rays"][0]["lambda_ratio"] == "17/2");
    CHECK(j["rays"][0]["label"] == "effective-edge");
    std::string csv = fan_to_csv(fan);
    CHECK(csv.rfind("l,ray_u,ray_v,lambda_ratio,label\n", 0) == 0);
    CHECK(csv.find("0,-1,4,17/2,effective-edge\n") != std::string::npos);
}

TEST_CASE("trace serialization") {
    ExtensionFamily f;
    f.m = 1;
    f.n = 3;
    f.t_trunc = 12;
    f.e = {Jet::monomial(12, 5)};
    auto [g, tr] = balance_limit(f, 0);
    Json j = trace_to_json(tr);
    REQUIRE(!j.empty());
    CHECK(j[0]["kind"] == "transform");
    bool saw_fiber = false;
    for (const auto& s : j)
        if (s["kind"] == "fiber") {
            saw_fiber = true;
            CHECK(s["mu"] == "2");
        }
    CHECK(saw_fiber);
}
