#include "trigonal/crimps.hpp"

#include <algorithm>

#include "trigonal/jetmatrix.hpp"
#include "trigonal/linalg.hpp"

namespace trig {

namespace {

// truncations of the parts of the ambient algebra
std::vector<int> part_truncs(const CrimpGens& c) {
    switch (c.ram) {
        case LocalRamType::Etale: return {c.N, c.N, c.N};
        case LocalRamType::Total: return {3 * c.N};
        case LocalRamType::Simple: return {2 * c.N, c.N};
    }
    throw MalformedInput("unknown ramification type");
}

void check_shape(const CrimpGens& c, const CrimpElem& a) {
    auto tr = part_truncs(c);
    if (a.parts.size() != tr.size()) throw MalformedInput("wrong number of parts");
    for (size_t i = 0; i < tr.size(); ++i)
        if (a.parts[i].trunc != tr[i]) throw MalformedInput("wrong part truncation");
}

} // namespace

CrimpElem crimp_one(const CrimpGens& c) {
    CrimpElem e;
    for (int tr : part_truncs(c)) e.parts.push_back(Jet::one(tr));
    return e;
}

CrimpElem crimp_mul(const CrimpGens& c, const CrimpElem& a, const CrimpElem& b) {
    check_shape(c, a);
    check_shape(c, b);
    CrimpElem r;
    for (size_t i = 0; i < a.parts.size(); ++i)
        r.parts.push_back(a.parts[i] * b.parts[i]);
    return r;
}

CrimpElem crimp_tshift(const CrimpGens& c, const CrimpElem& a, int j) {
    check_shape(c, a);
    CrimpElem r = a;
    switch (c.ram) {
        case LocalRamType::Etale:
            for (auto& p : r.parts) p = p.shift_up(j);
            break;
        case LocalRamType::Total:
            r.parts[0] = r.parts[0].shift_up(3 * j); // t = x^3
            break;
        case LocalRamType::Simple:
            r.parts[0] = r.parts[0].shift_up(2 * j); // t = x^2
            r.parts[1] = r.parts[1].shift_up(j);
            break;
    }
    return r;
}

QVec crimp_flatten(const CrimpGens& c, const CrimpElem& a) {
    check_shape(c, a);
    QVec out;
    out.reserve(3 * static_cast<size_t>(c.N));
    for (const auto& p : a.parts)
        out.insert(out.end(), p.c.begin(), p.c.end());
    return out;
}

namespace {

// Columns spanning the crimp module (1, generators, all t-shifts) inside
// the 3N-dimensional space S~ / t^N S~; the tail is the truncation itself.
QMat module_columns(const CrimpGens& c) {
    QMat cols;
    std::vector<CrimpElem> base = c.gens;
    base.insert(base.begin(), crimp_one(c));
    for (const auto& g : base)
        for (int j = 0; j < c.N; ++j) {
            QVec col = crimp_flatten(c, crimp_tshift(c, g, j));
            bool zero = std::all_of(col.begin(), col.end(),
                                    [](const Rational& v) { return v == 0; });
            if (!zero) cols.push_back(std::move(col));
        }
    return cols;
}

QMat transpose_cols(const QMat& cols, size_t nrows) {
    QMat M(nrows, QVec(cols.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) M[i][j] = cols[j][i];
    return M;
}

int rank_cols(const QMat& cols, size_t nrows) {
    if (cols.empty()) return 0;
    return rank(transpose_cols(cols, nrows));
}

bool in_span(const QMat& cols, const QVec& v, size_t nrows) {
    QMat aug = cols;
    aug.push_back(v);
    return rank_cols(aug, nrows) == rank_cols(cols, nrows);
}

} // namespace

bool is_subalgebra(const CrimpGens& c) {
    QMat cols = module_columns(c);
    const size_t nrows = 3 * static_cast<size_t>(c.N);
    for (size_t i = 0; i < c.gens.size(); ++i)
        for (size_t j = i; j < c.gens.size(); ++j) {
            QVec p = crimp_flatten(c, crimp_mul(c, c.gens[i], c.gens[j]));
            if (!in_span(cols, p, nrows)) return false;
        }
    return true;
}

namespace {

// Etale invariants: smith exponents of [1 | gens | t^N basis] over R,
// computed at doubled truncation so that no exponent is clipped.
std::pair<Rational, int> mu_delta_etale(const CrimpGens& c) {
    const int N = c.N, T = 2 * N + 1;
    std::vector<std::array<Jet, 3>> elems;
    auto lift = [&](const CrimpElem& e) {
        std::array<Jet, 3> a{e.parts[0].padded(T), e.parts[1].padded(T),
                             e.parts[2].padded(T)};
        return a;
    };
    elems.push_back(lift(crimp_one(c)));
    for (const auto& g : c.gens) elems.push_back(lift(g));
    for (int i = 0; i < 3; ++i) {
        std::array<Jet, 3> tail{Jet::zero(T), Jet::zero(T), Jet::zero(T)};
        tail[static_cast<size_t>(i)] = Jet::monomial(T, N);
        elems.push_back(tail);
    }
    JetMatrix M(3, elems.size(), T);
    for (size_t j = 0; j < elems.size(); ++j)
        for (int i = 0; i < 3; ++i)
            M.at(static_cast<size_t>(i), j) = elems[j][static_cast<size_t>(i)];
    auto exps = smith_exponents(M);
    if (!exps) throw PrecisionExhausted("etale crimp invariants unresolved");
    std::sort(exps->begin(), exps->end());
    if ((*exps)[0] != 0) throw InvalidValuations("unit 1 missing from the module");
    int m = (*exps)[1], n = (*exps)[2];
    return {Rational(n - m), n + m};
}

// Triangularize x-adic valuations of a list of jets: repeatedly cancel the
// leading terms of two elements whose valuations agree modulo `step`, until
// the surviving valuations are distinct modulo `step`.  Returns the sorted
// surviving valuations (elements that vanish are dropped).
std::vector<int> triangular_valuations(std::vector<Jet> elems, int step) {
    for (;;) {
        // locate a congruent pair with the two smallest valuations in a class
        int vi = -1, vj = -1;
        for (size_t i = 0; i < elems.size() && vi < 0; ++i)
            for (size_t j = i + 1; j < elems.size() && vi < 0; ++j) {
                if (elems[i].is_zero() || elems[j].is_zero()) continue;
                if ((elems[i].valuation() - elems[j].valuation()) % step == 0) {
                    vi = static_cast<int>(i);
                    vj = static_cast<int>(j);
                }
            }
        if (vi < 0) break;
        Jet& a = elems[static_cast<size_t>(vi)];
        Jet& b = elems[static_cast<size_t>(vj)];
        if (a.valuation() > b.valuation()) std::swap(a, b);
        int dv = b.valuation() - a.valuation();
        Rational f = b.coeff(b.valuation()) / a.coeff(a.valuation());
        // b -= f * t^(dv/step) * a  (shift in the ambient x-variable)
        b = b - a.shift_up(dv) * f;
    }
    std::vector<int> vals;
    for (const auto& e : elems)
        if (!e.is_zero()) vals.push_back(e.valuation());
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::pair<Rational, int> mu_delta_total(const CrimpGens& c) {
    const int N = c.N, T = 6 * N + 3;
    std::vector<Jet> elems;
    elems.push_back(Jet::one(T));
    for (const auto& g : c.gens) elems.push_back(g.parts[0].padded(T));
    for (int i = 0; i < 3; ++i) elems.push_back(Jet::monomial(T, 3 * N + i));
    auto vals = triangular_valuations(std::move(elems), 3);
    // minimal valuation per residue class mod 3
    std::array<int, 3> best{T, T, T};
    for (int v : vals) best[static_cast<size_t>(v % 3)] = std::min(best[static_cast<size_t>(v % 3)], v);
    if (best[0] != 0) throw InvalidValuations("unit 1 missing from the module");
    int v1 = std::min(best[1], best[2]), v2 = std::max(best[1], best[2]);
    if (v1 >= T || v2 >= T) throw InvalidValuations("residue class not generated");
    // colength against the ambient basis valuations (0, 1, 2)
    return {rat(std::abs(v2 - v1), 3), v1 / 3 + v2 / 3};
}

std::pair<Rational, int> mu_delta_simple(const CrimpGens& c) {
    const int N = c.N, T = 4 * N + 2;
    // embed into the ramified sheet: g -> g_x - g_t(x^2)
    std::vector<Jet> elems;
    for (const auto& g : c.gens)
        elems.push_back(g.parts[0].padded(T) - g.parts[1].substitute_power(2).padded(T));
    for (int i = 0; i < 2; ++i) elems.push_back(Jet::monomial(T, 2 * N + i));
    auto vals = triangular_valuations(std::move(elems), 2);
    std::array<int, 2> best{T, T};
    for (int v : vals) best[static_cast<size_t>(v % 2)] = std::min(best[static_cast<size_t>(v % 2)], v);
    if (best[0] >= T || best[1] >= T) throw InvalidValuations("parity class not generated");
    int v1 = std::min(best[0], best[1]), v2 = std::max(best[0], best[1]);
    return {rat(v2 - v1, 2), (v1 + v2) / 2};
}

} // namespace

std::pair<Rational, int> mu_delta(const CrimpGens& c) {
    if (c.N <= 0) throw MalformedInput("crimp needs positive truncation");
    switch (c.ram) {
        case LocalRamType::Etale: return mu_delta_etale(c);
        case LocalRamType::Total: return mu_delta_total(c);
        case LocalRamType::Simple: return mu_delta_simple(c);
    }
    throw MalformedInput("unknown ramification type");
}

std::optional<CrimpStratum> stratum(int b, const Rational& l, LocalRamType ram) {
    if (b <= 0) throw MalformedInput("branch degree must be positive");
    if (l < 0) throw MalformedInput("mu must be nonnegative");
    CrimpStratum s;
    s.b = b;
    s.l = l;
    s.ram = ram;
    auto integral = [](const Rational& r) { return r.get_den() == 1; };
    switch (ram) {
        case LocalRamType::Etale: {
            // n + m = b/2, n - m = l
            Rational mm = (rat(b, 2) - l) / 2, nn = (rat(b, 2) + l) / 2;
            if (!integral(mm) || !integral(nn) || mm < 0) return std::nullopt;
            s.m = static_cast<int>(mm.get_num().get_si());
            s.n = static_cast<int>(nn.get_num().get_si());
            if (2 * s.m >= s.n) {
                s.dimension = static_cast<int>(l.get_num().get_si());
                s.components = 1;
                s.normal_form = "f = (1, w, 0), deg w < l";
            } else {
                s.dimension = s.m;
                s.components = 3;
                s.normal_form =
                    "f = perm of (1, h, -h), h in t^(n-2m) * span(1..t^(m-1))";
            }
            return s;
        }
        case LocalRamType::Total: {
            // x-valuations: n + m = 3b/2, n - m = 3l
            Rational mm = (rat(3 * b, 2) - 3 * l) / 2, nn = (rat(3 * b, 2) + 3 * l) / 2;
            if (!integral(mm) || !integral(nn) || mm <= 0) return std::nullopt;
            s.m = static_cast<int>(mm.get_num().get_si());
            s.n = static_cast<int>(nn.get_num().get_si());
            if (s.m % 3 == 0 || s.n % 3 == 0 || s.m % 3 == s.n % 3) return std::nullopt;
            if (2 * s.m < s.n) return std::nullopt;
            s.dimension = static_cast<int>(mpz_class(l.get_num() / l.get_den()).get_si());
            s.components = 1;
            s.normal_form = "f = 1 + sum a_i x^i, 0 < i < n-m, i = m mod 3";
            return s;
        }
        case LocalRamType::Simple: {
            // x-valuations on the ramified sheet: n + m = b, n - m = 2l
            Rational mm = (rat(b) - 2 * l) / 2, nn = (rat(b) + 2 * l) / 2;
            if (!integral(mm) || !integral(nn) || mm < 0) return std::nullopt;
            s.m = static_cast<int>(mm.get_num().get_si());
            s.n = static_cast<int>(nn.get_num().get_si());
            if (s.m % 2 == s.n % 2) return std::nullopt;
            if (2 * s.m >= s.n) {
                s.dimension = static_cast<int>(mpz_class(l.get_num() / l.get_den()).get_si());
                s.components = 1;
                s.normal_form = "f = 1 + sum a_i x^i, i odd, 0 < i < n-m";
            } else {
                if (s.m % 2 != 0) return std::nullopt;
                s.dimension = s.m / 2;
                s.components = 1;
                s.normal_form =
                    "f = 1 + sum a_i x^i, i odd, n-2m <= i < n-m";
            }
            return s;
        }
    }
    throw MalformedInput("unknown ramification type");
}

namespace {

CrimpElem etale_elem(int N, const Jet& a, const Jet& b, const Jet& c) {
    return CrimpElem{{a, b, c}};
}

} // namespace

CrimpGens sample_crimp(const CrimpStratum& s, const QVec& params, int component) {
    if (component < 1 || component > s.components)
        throw MalformedInput("component index out of range");
    if (static_cast<int>(params.size()) != s.dimension)
        throw DimensionMismatch("parameter count must equal the stratum dimension");
    CrimpGens c;
    c.ram = s.ram;
    const int m = s.m, n = s.n;
    switch (s.ram) {
        case LocalRamType::Etale: {
            // truncation beyond n, with the t^n tail given by generators, so
            // that downstream splitting computations keep working precision
            c.N = m + n + 2;
            const int N = c.N;
            Jet f1(N), f2(N), f3(N);
            if (2 * m >= n) {
                f1 = Jet::one(N);
                for (size_t i = 0; i < params.size(); ++i)
                    f2 = f2 + Jet::monomial(N, static_cast<int>(i), params[i]);
            } else {
                Jet h(N);
                for (size_t i = 0; i < params.size(); ++i)
                    h = h + Jet::monomial(N, n - 2 * m + static_cast<int>(i), params[i]);
                Jet one = Jet::one(N);
                if (component == 1) { f1 = one; f2 = h; f3 = -h; }
                else if (component == 2) { f1 = h; f2 = one; f3 = -h; }
                else { f1 = h; f2 = -h; f3 = one; }
            }
            c.gens = {etale_elem(N, f1.shift_up(m), f2.shift_up(m), f3.shift_up(m)),
                      etale_elem(N, Jet::monomial(N, n), Jet::zero(N), Jet::zero(N)),
                      etale_elem(N, Jet::zero(N), Jet::monomial(N, n), Jet::zero(N))};
            return c;
        }
        case LocalRamType::Total: {
            c.N = n; // ambient x-truncation 3N
            const int T = 3 * c.N;
            Jet f = Jet::one(T);
            size_t idx = 0;
            for (int i = 1; i < n - m && idx < params.size(); ++i)
                if (i % 3 == m % 3) f = f + Jet::monomial(T, i, params[idx++]);
            if (idx != params.size())
                throw DimensionMismatch("parameter count exceeds the normal form");
            c.gens = {CrimpElem{{f.shift_up(m)}}, CrimpElem{{Jet::monomial(T, n)}}};
            return c;
        }
        case LocalRamType::Simple: {
            c.N = n;
            const int T = 2 * c.N;
            Jet f = Jet::one(T);
            size_t idx = 0;
            const int lo = (2 * m >= n) ? 1 : n - 2 * m;
            for (int i = lo; i < n - m && idx < params.size(); ++i)
                if (i % 2 == 1) f = f + Jet::monomial(T, i, params[idx++]);
            if (idx != params.size())
                throw DimensionMismatch("parameter count exceeds the normal form");
            c.gens = {CrimpElem{{f.shift_up(m), Jet::zero(c.N)}},
                      CrimpElem{{Jet::monomial(T, n), Jet::zero(c.N)}}};
            return c;
        }
    }
    throw MalformedInput("unknown ramification type");
}

int stratum_tangent_dimension(const CrimpStratum& s, const CrimpGens& c) {
    const size_t nrows = 3 * static_cast<size_t>(c.N);
    QMat cols = module_columns(c);
    if (c.gens.empty()) return 0;
    const CrimpElem& g1 = c.gens[0];

    // representation g1^2 = r0 * 1 + s0 * g1 (+ tail): solve in the span and
    // read off the coefficient series s0 of the g1 shifts.
    std::vector<CrimpElem> base = c.gens;
    base.insert(base.begin(), crimp_one(c));
    QMat rep_cols;
    std::vector<std::pair<size_t, int>> labels; // (base index, shift)
    for (size_t bi = 0; bi < base.size(); ++bi)
        for (int j = 0; j < c.N; ++j) {
            rep_cols.push_back(crimp_flatten(c, crimp_tshift(c, base[bi], j)));
            labels.emplace_back(bi, j);
        }
    QMat A = transpose_cols(rep_cols, nrows);
    QVec rhs = crimp_flatten(c, crimp_mul(c, g1, g1));
    auto sol = linear_solve(A, rhs);
    if (!sol) throw MalformedInput("sample generators are not closed");
    CrimpElem s0 = crimp_one(c); // placeholder; rebuilt below as a series
    {
        // s0 = sum over shifts j of sol[col(1, j)] * t^j, as an ambient element
        std::vector<int> tr = part_truncs(c);
        s0.parts.clear();
        for (int t : tr) s0.parts.push_back(Jet::zero(t));
        for (size_t k = 0; k < labels.size(); ++k) {
            if (labels[k].first != 1) continue; // coefficient of the g1 block
            if ((*sol)[k] == 0) continue;
            CrimpElem unit = crimp_tshift(c, crimp_one(c), labels[k].second);
            for (size_t p = 0; p < s0.parts.size(); ++p)
                s0.parts[p] = s0.parts[p] + unit.parts[p] * (*sol)[k];
        }
    }

    // direction basis: x^m * delta for delta running over the normal-form
    // ambient coordinates below x-degree n-m
    std::vector<CrimpElem> dirs;
    const int gap = s.n - s.m;
    auto push_dir = [&](const CrimpElem& d) { dirs.push_back(d); };
    switch (c.ram) {
        case LocalRamType::Etale:
            for (int sheet = 0; sheet < 3; ++sheet)
                for (int i = 0; i < gap; ++i) {
                    CrimpElem d{{Jet::zero(c.N), Jet::zero(c.N), Jet::zero(c.N)}};
                    d.parts[static_cast<size_t>(sheet)] = Jet::monomial(c.N, s.m + i);
                    push_dir(d);
                }
            break;
        case LocalRamType::Total:
            for (int i = 0; i < gap; ++i)
                push_dir(CrimpElem{{Jet::monomial(3 * c.N, s.m + i)}});
            break;
        case LocalRamType::Simple:
            for (int i = 0; i < gap; ++i)
                push_dir(CrimpElem{{Jet::monomial(2 * c.N, s.m + i), Jet::zero(c.N)}});
            break;
    }

    // V: module movement; W: first-order closure obstruction
    QMat V, W;
    for (const auto& d : dirs) {
        V.push_back(crimp_flatten(c, d));
        CrimpElem w = crimp_mul(c, g1, d);
        for (size_t p = 0; p < w.parts.size(); ++p)
            w.parts[p] = w.parts[p] * Rational(2) - s0.parts[p] * d.parts[p];
        W.push_back(crimp_flatten(c, w));
    }
    QMat VC = cols, WC = cols;
    VC.insert(VC.end(), V.begin(), V.end());
    WC.insert(WC.end(), W.begin(), W.end());
    return rank_cols(VC, nrows) - rank_cols(WC, nrows);
}

LatticeSheaf globalize(const CrimpGens& c) {
    if (c.ram != LocalRamType::Etale)
        throw UnsupportedRamType("globalize requires etale-type crimps");
    LatticeSheaf F;
    F.trunc = c.N;
    for (const auto& g : c.gens) {
        check_shape(c, g);
        F.gens0.push_back({g.parts[0] - g.parts[2], g.parts[1] - g.parts[2]});
        F.sheet_gens0.push_back({g.parts[0], g.parts[1], g.parts[2]});
    }
    F.has_sheets = true;
    return F;
}

CrimpGens hyperelliptic_limit(int g) {
    if (g < 2) throw MalformedInput("need g >= 2");
    CrimpGens c;
    c.ram = LocalRamType::Etale;
    c.N = g + 1;
    c.gens = {etale_elem(c.N, Jet::monomial(c.N, 1), Jet::monomial(c.N, g),
                         -Jet::monomial(c.N, g))};
    return c;
}

} // namespace trig
