#include "trigonal/json_io.hpp"

#include <sstream>

namespace trig {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw MalformedInput(what);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object(), "expected a JSON object");
    auto it = j.find(key);
    require(it != j.end(), std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), std::string("field \"") + key +
                                       "\" must be an integer");
    return v.get<int>();
}

UniPoly poly_from_json(const Json& j) { return UniPoly(qvec_from_json(j)); }

Json poly_to_json(const UniPoly& p) { return qvec_to_json(p.c); }

Jet jet_from_json(const Json& j, int trunc) {
    QVec c = qvec_from_json(j);
    require(trunc > 0, "jet truncation must be positive");
    c.resize(static_cast<size_t>(trunc), Rational(0));
    return Jet(trunc, c);
}

Json jet_to_json(const Jet& j) { return qvec_to_json(j.c); }

int parts_for(LocalRamType ram) {
    switch (ram) {
        case LocalRamType::Etale: return 3;
        case LocalRamType::Total: return 1;
        case LocalRamType::Simple: return 2;
    }
    throw MalformedInput("unknown ramification type");
}

// ambient truncation of coordinate i for a crimp of truncation N
int part_trunc(LocalRamType ram, int N, int i) {
    switch (ram) {
        case LocalRamType::Etale: return N;
        case LocalRamType::Total: return 3 * N;
        case LocalRamType::Simple: return i == 0 ? 2 * N : N;
    }
    throw MalformedInput("unknown ramification type");
}

} // namespace

Json rational_to_json(const Rational& q) { return Json(rat_to_string(q)); }

Rational rational_from_json(const Json& j) {
    require(j.is_string(), "rationals must be \"p\" or \"p/q\" strings");
    return rat_from_string(j.get<std::string>());
}

Json qvec_to_json(const QVec& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_json(q));
    return out;
}

QVec qvec_from_json(const Json& j) {
    require(j.is_array(), "expected an array of rational strings");
    QVec out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

Json cover_to_json(const MirandaCover& cover) {
    Json out;
    out["m"] = cover.m;
    out["n"] = cover.n;
    out["a"] = poly_to_json(cover.a);
    out["b"] = poly_to_json(cover.b);
    out["c"] = poly_to_json(cover.c);
    out["d"] = poly_to_json(cover.d);
    return out;
}

MirandaCover cover_from_json(const Json& j) {
    return MirandaCover(int_field(j, "m"), int_field(j, "n"),
                        poly_from_json(field(j, "a")), poly_from_json(field(j, "b")),
                        poly_from_json(field(j, "c")), poly_from_json(field(j, "d")));
}

Json crimp_to_json(const CrimpGens& c) {
    Json out;
    switch (c.ram) {
        case LocalRamType::Etale: out["ram"] = "etale"; break;
        case LocalRamType::Total: out["ram"] = "total"; break;
        case LocalRamType::Simple: out["ram"] = "simple"; break;
    }
    out["truncation"] = c.N;
    Json gens = Json::array();
    for (const auto& g : c.gens) {
        Json parts = Json::array();
        for (const auto& p : g.parts) parts.push_back(jet_to_json(p));
        gens.push_back(parts);
    }
    out["gens"] = gens;
    return out;
}

CrimpGens crimp_from_json(const Json& j, int trunc_override) {
    CrimpGens c;
    const Json& ram = field(j, "ram");
    require(ram.is_string(), "field \"ram\" must be a string");
    std::string r = ram.get<std::string>();
    if (r == "etale")
        c.ram = LocalRamType::Etale;
    else if (r == "total")
        c.ram = LocalRamType::Total;
    else if (r == "simple")
        c.ram = LocalRamType::Simple;
    else
        throw MalformedInput("ram must be \"etale\", \"total\", or \"simple\"");
    c.N = trunc_override > 0 ? trunc_override : int_field(j, "truncation");
    require(c.N > 0, "truncation must be positive");
    const Json& gens = field(j, "gens");
    require(gens.is_array(), "field \"gens\" must be an array");
    const int np = parts_for(c.ram);
    for (const auto& g : gens) {
        require(g.is_array() && static_cast<int>(g.size()) == np,
                "each generator needs one coefficient list per ambient coordinate");
        CrimpElem e;
        for (int i = 0; i < np; ++i)
            e.parts.push_back(jet_from_json(g[static_cast<size_t>(i)],
                                            part_trunc(c.ram, c.N, i)));
        c.gens.push_back(std::move(e));
    }
    return c;
}

Json family_to_json(const ExtensionFamily& f) {
    Json out;
    out["m"] = f.m;
    out["n"] = f.n;
    out["t_trunc"] = f.t_trunc;
    Json e = Json::array();
    for (const auto& j : f.e) e.push_back(jet_to_json(j));
    out["e"] = e;
    return out;
}

ExtensionFamily family_from_json(const Json& j) {
    ExtensionFamily f;
    f.m = int_field(j, "m");
    f.n = int_field(j, "n");
    f.t_trunc = int_field(j, "t_trunc");
    const Json& e = field(j, "e");
    require(e.is_array(), "field \"e\" must be an array of jets");
    for (const auto& jet : e) f.e.push_back(jet_from_json(jet, f.t_trunc));
    f.validate();
    return f;
}

Json wpoint_to_json(const WPoint& w) {
    Json out;
    out["g"] = w.genus();
    out["a"] = qvec_to_json(w.a);
    out["b"] = qvec_to_json(w.b);
    out["c"] = qvec_to_json(w.c);
    out["d"] = qvec_to_json(w.d);
    return out;
}

WPoint wpoint_from_json(const Json& j) {
    WPoint w;
    int g = int_field(j, "g");
    require(g >= 2 && g % 2 == 0, "need even genus at least 2");
    w.h = (g + 2) / 2;
    w.a = qvec_from_json(field(j, "a"));
    w.b = qvec_from_json(field(j, "b"));
    w.c = qvec_from_json(field(j, "c"));
    w.d = qvec_from_json(field(j, "d"));
    w.validate();
    return w;
}

Json stratum_to_json(const CrimpStratum& s) {
    Json out;
    out["b"] = s.b;
    out["l"] = rational_to_json(s.l);
    switch (s.ram) {
        case LocalRamType::Etale: out["ram"] = "etale"; break;
        case LocalRamType::Total: out["ram"] = "total"; break;
        case LocalRamType::Simple: out["ram"] = "simple"; break;
    }
    out["dimension"] = s.dimension;
    out["components"] = s.components;
    out["m"] = s.m;
    out["n"] = s.n;
    out["normal_form"] = s.normal_form;
    return out;
}

Json fan_to_json(const ChamberFan& fan) {
    Json out;
    out["g"] = fan.g;
    out["k_ratio"] = rational_to_json(fan.k_ratio);
    Json rays = Json::array();
    for (const auto& r : fan.rays) {
        Json rj;
        rj["l"] = r.l;
        rj["ray_u"] = rational_to_json(r.u);
        rj["ray_v"] = rational_to_json(r.v);
        rj["lambda_ratio"] = rational_to_json(r.lambda_ratio);
        rj["label"] = r.label;
        rays.push_back(rj);
    }
    out["rays"] = rays;
    return out;
}

std::string fan_to_csv(const ChamberFan& fan) {
    std::ostringstream os;
    os << "l,ray_u,ray_v,lambda_ratio,label\n";
    for (const auto& r : fan.rays)
        os << r.l << "," << rat_to_string(r.u) << "," << rat_to_string(r.v)
           << "," << rat_to_string(r.lambda_ratio) << "," << r.label << "\n";
    return os.str();
}

Json trace_to_json(const ReductionTrace& trace) {
    Json out = Json::array();
    for (const auto& s : trace.steps) {
        Json sj;
        switch (s.kind) {
            case StepKind::BaseChange:
                sj["kind"] = "base-change";
                sj["N"] = s.base_change_N;
                break;
            case StepKind::Transform: sj["kind"] = "transform"; break;
            case StepKind::Represent: sj["kind"] = "represent"; break;
            case StepKind::Fiber:
                sj["kind"] = "fiber";
                sj["maroni"] = s.maroni;
                sj["mu"] = rational_to_json(s.mu);
                break;
        }
        out.push_back(sj);
    }
    return out;
}

Json line_to_json(const TracelessLine& line) {
    return qvec_to_json(QVec{line.v[0], line.v[1], line.v[2]});
}

Json coarse_to_json(const CoarsePoint& pt) {
    return qvec_to_json(QVec{pt.p, pt.q});
}

} // namespace trig
