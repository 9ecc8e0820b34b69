// Command-line interface: every computation consumes and emits JSON (or
// CSV for the chamber fan), with rationals as exact fraction strings.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "trigonal/json_io.hpp"

namespace {

using trig::Json;

int truncation_override() {
    const char* env = std::getenv("TRIGONAL_TRUNCATION");
    if (!env || !*env) return 0;
    try {
        size_t pos = 0;
        int v = std::stoi(env, &pos);
        if (env[pos] != '\0' || v <= 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw trig::MalformedInput("TRIGONAL_TRUNCATION must be a positive integer");
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw trig::MalformedInput("cannot read input file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw trig::MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string ram_name(trig::LocalRamType ram) {
    switch (ram) {
        case trig::LocalRamType::Etale: return "etale";
        case trig::LocalRamType::Total: return "total";
        case trig::LocalRamType::Simple: return "simple";
    }
    return "";
}

std::string fiber_name(trig::FiberType t) {
    switch (t) {
        case trig::FiberType::Etale: return "etale";
        case trig::FiberType::Simple: return "simple";
        case trig::FiberType::Total: return "total";
    }
    return "";
}

void cmd_invariants(const std::string& path, int r) {
    Json in = load_json(path);
    trig::MirandaCover cover = trig::cover_from_json(in);
    Json out;
    out["genus"] = trig::genus(cover);
    out["maroni"] = trig::rational_to_json(trig::maroni(cover, r));
    out["branch_degree"] = trig::branch_degree(cover);
    if (in.is_object() && in.contains("points")) {
        const Json& pts = in["points"];
        if (!pts.is_array())
            throw trig::MalformedInput("\"points\" must be an array of [X, Y] pairs");
        Json types = Json::array();
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 2)
                throw trig::MalformedInput("each point must be an [X, Y] pair");
            trig::Rational X = trig::rational_from_json(p[0]);
            trig::Rational Y = trig::rational_from_json(p[1]);
            types.push_back(fiber_name(trig::fiber_type(cover, X, Y)));
        }
        out["fiber_types"] = types;
    }
    emit(out);
}

void cmd_crimp_classify(int b, const std::string& l_str, const std::string& type,
                        bool sample, int component, unsigned seed) {
    trig::Rational l = trig::rat_from_string(l_str);
    trig::LocalRamType ram;
    if (type == "etale")
        ram = trig::LocalRamType::Etale;
    else if (type == "total")
        ram = trig::LocalRamType::Total;
    else if (type == "simple")
        ram = trig::LocalRamType::Simple;
    else
        throw trig::MalformedInput("--type must be etale, total, or simple");
    auto s = trig::stratum(b, l, ram);
    if (!s) {
        Json out;
        out["empty"] = true;
        emit(out);
        return;
    }
    Json out = trig::stratum_to_json(*s);
    out["empty"] = false;
    if (sample) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> d(-3, 3);
        trig::QVec params(static_cast<size_t>(s->dimension));
        for (auto& p : params) p = trig::rat(d(rng));
        out["sample"] = trig::crimp_to_json(trig::sample_crimp(*s, params, component));
    }
    emit(out);
}

void cmd_crimp_mu(const std::string& path) {
    trig::CrimpGens c = trig::crimp_from_json(load_json(path), truncation_override());
    auto [mu, delta] = trig::mu_delta(c);
    Json out;
    out["ram"] = ram_name(c.ram);
    out["mu"] = trig::rational_to_json(mu);
    out["delta"] = delta;
    emit(out);
}

void cmd_balance(const std::string& path, int l, bool trace) {
    trig::ExtensionFamily f = trig::family_from_json(load_json(path));
    auto [g, tr] = trig::balance_limit(f, l);
    Json out = trig::family_to_json(g);
    if (trace) out["trace"] = trig::trace_to_json(tr);
    emit(out);
}

void cmd_chambers(int g, const std::string& format) {
    trig::ChamberFan fan = trig::chamber_fan(g);
    if (format == "json")
        emit(trig::fan_to_json(fan));
    else if (format == "csv")
        std::cout << trig::fan_to_csv(fan);
    else
        throw trig::MalformedInput("--format must be json or csv");
}

void cmd_normal_form(const std::string& path) {
    trig::MirandaCover cover = trig::cover_from_json(load_json(path));
    emit(trig::wpoint_to_json(trig::even_normal_form(cover)));
}

void cmd_cross_ratio(const std::string& path) {
    Json in = load_json(path);
    std::pair<trig::TracelessLine, trig::CoarsePoint> result =
        (in.is_object() && in.contains("ram"))
            ? trig::cross_ratio(
                  trig::globalize(trig::crimp_from_json(in, truncation_override())))
            : trig::cross_ratio(trig::cover_from_json(in));
    Json out;
    out["line"] = trig::line_to_json(result.first);
    out["coarse"] = trig::coarse_to_json(result.second);
    emit(out);
}

void cmd_dims(int g, int l) {
    auto [maroni_dim, mu_dim] = trig::stratum_dimensions(g, l);
    Json out;
    out["maroni_dim"] = maroni_dim;
    out["mu_dim"] = mu_dim;
    emit(out);
}

void cmd_stable(const std::string& eps_str, const std::vector<int>& mults,
                bool sigma_meets) {
    trig::Rational eps = trig::rat_from_string(eps_str);
    Json out;
    out["stable"] = trig::epsilon_stable(mults, !sigma_meets, eps);
    emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of trigonal curves and their moduli"};
    app.require_subcommand(1);

    std::string in_path, l_str = "0", type = "etale", format = "json", eps_str;
    int r = 1, b = 0, g = 2, l = 0, component = 1;
    unsigned seed = 0;
    bool trace = false, sample = false, sigma_meets = false;
    std::vector<int> mults;

    auto* inv = app.add_subcommand("invariants", "Genus, Maroni, branch data of a cover");
    inv->add_option("cover", in_path, "cover JSON file")->required();
    inv->add_option("--r", r, "refinement order (1, 2, or 3)")->default_val(1);

    auto* cls = app.add_subcommand("crimp-classify", "Classify a crimp stratum");
    cls->add_option("--b", b, "branch degree")->required();
    cls->add_option("--l", l_str, "mu invariant (rational)")->required();
    cls->add_option("--type", type, "etale | total | simple")->required();
    cls->add_flag("--sample", sample, "emit a sample crimp");
    cls->add_option("--component", component, "component index")->default_val(1);
    cls->add_option("--seed", seed, "sampling seed")->default_val(0);

    auto* cmu = app.add_subcommand("crimp-mu", "mu and delta of a crimp");
    cmu->add_option("crimp", in_path, "crimp JSON file")->required();

    auto* bal = app.add_subcommand("balance", "Semistable reduction of a family");
    bal->add_option("family", in_path, "family JSON file")->required();
    bal->add_option("--l", l, "balance level")->required();
    bal->add_flag("--trace", trace, "include the reduction trace");

    auto* cha = app.add_subcommand("chambers", "Mori chamber fan of the moduli space");
    cha->add_option("--g", g, "genus")->required();
    cha->add_option("--format", format, "json | csv")->default_val("json");

    auto* nf = app.add_subcommand("normal-form", "Even-genus model coordinates");
    nf->add_option("cover", in_path, "cover JSON file")->required();

    auto* cr = app.add_subcommand("cross-ratio", "Cross ratio of a cover or crimp");
    cr->add_option("input", in_path, "cover or crimp JSON file")->required();

    auto* dm = app.add_subcommand("dims", "Stratum dimension formulas");
    dm->add_option("--g", g, "genus")->required();
    dm->add_option("--l", l, "mu level")->required();

    auto* st = app.add_subcommand("stable", "Epsilon-stability of a branch configuration");
    st->add_option("--eps", eps_str, "weight as p/q")->required();
    st->add_option("--mults", mults, "branch multiplicities")
        ->required()
        ->delimiter(',');
    st->add_flag("--sigma-meets", sigma_meets, "marked point meets the branch divisor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        Json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        emit(err);
        return 2;
    }

    try {
        if (inv->parsed()) cmd_invariants(in_path, r);
        else if (cls->parsed()) cmd_crimp_classify(b, l_str, type, sample, component, seed);
        else if (cmu->parsed()) cmd_crimp_mu(in_path);
        else if (bal->parsed()) cmd_balance(in_path, l, trace);
        else if (cha->parsed()) cmd_chambers(g, format);
        else if (nf->parsed()) cmd_normal_form(in_path);
        else if (cr->parsed()) cmd_cross_ratio(in_path);
        else if (dm->parsed()) cmd_dims(g, l);
        else if (st->parsed()) cmd_stable(eps_str, mults, sigma_meets);
    } catch (const trig::Error& e) {
        Json err;
        err["error"] = e.name();
        err["detail"] = e.what();
        emit(err);
        return e.name() == "MalformedInput" ? 2 : 1;
    } catch (const Json::exception& e) {
        Json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        emit(err);
        return 2;
    }
    return 0;
}
