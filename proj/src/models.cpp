#include "trigonal/models.hpp"

#include <algorithm>

#include "trigonal/linalg.hpp"

namespace trig {

namespace {

Rational qpow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Rational roots of p with multiplicity, via the bounded search over
// divisor quotients of the integer model.
std::vector<Rational> rational_roots(UniPoly p) {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    size_t k = 0;
    while (k < p.c.size() && p.c[k] == 0) ++k;
    for (size_t i = 0; i < k; ++i) roots.push_back(rat(0));
    p = UniPoly(QVec(p.c.begin() + static_cast<long>(k), p.c.end()));
    if (p.degree() < 1) return roots;

    mpz_class L = 1;
    for (const auto& q : p.c) L = lcm(L, q.get_den());
    mpz_class lo = abs(mpz_class(p.c.front().get_num() * (L / p.c.front().get_den())));
    mpz_class hi = abs(mpz_class(p.c.back().get_num() * (L / p.c.back().get_den())));

    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> d;
        for (mpz_class i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        return d;
    };
    std::vector<Rational> cands;
    for (const auto& num : divisors(lo))
        for (const auto& den : divisors(hi)) {
            Rational r(num, den);
            r.canonicalize();
            cands.push_back(r);
            cands.push_back(-r);
        }
    for (const auto& r : cands) {
        while (p.degree() >= 1 && p.eval(r) == 0) {
            roots.push_back(r);
            p = exact_div(p, UniPoly(QVec{-r, rat(1)}));
        }
    }
    return roots;
}

} // namespace

TracelessLine traceless_line(const std::array<Rational, 3>& values) {
    Rational mean = (values[0] + values[1] + values[2]) / 3;
    TracelessLine l{{values[0] - mean, values[1] - mean, values[2] - mean}};
    if (l.v[0] == 0 && l.v[1] == 0 && l.v[2] == 0)
        throw MalformedInput("triple is a multiple of (1, 1, 1)");
    return l;
}

CoarsePoint coarse_point(const TracelessLine& line) {
    const auto& v = line.v;
    Rational s2 = v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
    Rational s3 = v[0] * v[1] * v[2];
    return {s2 * s2 * s2, s3 * s3};
}

bool coarse_equal(const CoarsePoint& a, const CoarsePoint& b) {
    if ((a.p == 0 && a.q == 0) || (b.p == 0 && b.q == 0))
        throw MalformedInput("coarse point must have a nonzero coordinate");
    return a.p * b.q == b.p * a.q;
}

std::pair<TracelessLine, CoarsePoint> cross_ratio(const MirandaCover& cover) {
    cover.validate();
    if (cover.m == cover.n)
        throw BalancedCover("cross ratio requires an unbalanced cover");
    if (fiber_type(cover, rat(1), rat(0)) != FiberType::Etale)
        throw NonSplitFiber("marked fiber must be etale");
    auto v = cubic_at_point(cover, rat(1), rat(0));
    // sheet values of the distinguished section: eigenvalues of z at the
    // marked fiber, the roots of z^3 + b z^2 + ac z + a^2 d
    UniPoly chi(QVec{v[0] * v[0] * v[3], v[0] * v[2], v[1], rat(1)});
    auto roots = rational_roots(chi);
    if (roots.size() != 3)
        throw NonSplitFiber("sheet values are not rational");
    std::sort(roots.begin(), roots.end());
    TracelessLine line = traceless_line({roots[0], roots[1], roots[2]});
    return {line, coarse_point(line)};
}

std::pair<TracelessLine, CoarsePoint> cross_ratio(const LatticeSheaf& F) {
    if (!F.has_sheets)
        throw NotSplitNormalization("three-sheet lattice data required");
    auto [m, n] = splitting_type(F);
    if (m == n) throw BalancedCover("cross ratio requires an unbalanced cover");
    const int N = F.trunc;
    const int S = 3 * (m + 1);
    // columns: candidate section monomials x^d on sheet i, then the lattice
    // module generators t^j * (1,1,1) and t^j * gen; a kernel vector is a
    // section of degree <= m whose jet at 0 lies in the lattice
    const int G = static_cast<int>(F.sheet_gens0.size());
    QMat M(static_cast<size_t>(3 * N),
           QVec(static_cast<size_t>(S + (1 + G) * N), rat(0)));
    for (int i = 0; i < 3; ++i)
        for (int d = 0; d <= m && d < N; ++d)
            M[static_cast<size_t>(i * N + d)][static_cast<size_t>(i * (m + 1) + d)] = rat(1);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < 3; ++i)
            M[static_cast<size_t>(i * N + j)][static_cast<size_t>(S + j)] = rat(1);
    for (int a = 0; a < G; ++a)
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < 3; ++i)
                for (int k = 0; j + k < N; ++k)
                    M[static_cast<size_t>(i * N + j + k)]
                     [static_cast<size_t>(S + (1 + a) * N + j)] +=
                        F.sheet_gens0[static_cast<size_t>(a)][static_cast<size_t>(i)].coeff(k);
    for (const auto& kv : kernel_basis(M)) {
        std::array<Rational, 3> top{kv[static_cast<size_t>(m)],
                                    kv[static_cast<size_t>(m + 1 + m)],
                                    kv[static_cast<size_t>(2 * (m + 1) + m)]};
        Rational mean = (top[0] + top[1] + top[2]) / 3;
        if (top[0] == mean && top[1] == mean && top[2] == mean) continue;
        TracelessLine line = traceless_line(top);
        return {line, coarse_point(line)};
    }
    throw BasisDegenerate("no section with nonzero traceless value at infinity");
}

std::pair<TracelessLine, CoarsePoint> principal_part(const CrimpGens& c) {
    if (c.ram != LocalRamType::Etale)
        throw UnsupportedRamType("principal part requires etale-type crimps");
    auto [mu, delta] = mu_delta(c);
    if (mu == 0) throw BalancedCrimp("principal part requires mu > 0");
    const int mu_i = static_cast<int>(mu.get_num().get_si());
    const int m = (delta - mu_i) / 2;
    for (const auto& g : c.gens) {
        Jet mean = (g.parts[0] + g.parts[1] + g.parts[2]) * rat(1, 3);
        std::array<Jet, 3> tr{g.parts[0] - mean, g.parts[1] - mean,
                              g.parts[2] - mean};
        int val = std::min({tr[0].valuation(), tr[1].valuation(), tr[2].valuation()});
        if (val != m) continue;
        TracelessLine line{{tr[0].coeff(m), tr[1].coeff(m), tr[2].coeff(m)}};
        return {line, coarse_point(line)};
    }
    throw MalformedInput("no generator realizes the minimal crimp valuation");
}

void WPoint::validate() const {
    if (h < 2) throw MalformedInput("need genus at least 2");
    if (a.size() != static_cast<size_t>(h) || b.size() != static_cast<size_t>(h) ||
        c.size() != static_cast<size_t>(h) || d.size() != static_cast<size_t>(h - 1))
        throw DimensionMismatch("coordinate blocks must have sizes h, h, h, h-1");
    for (const auto& q : a)
        if (q != 0) return;
    for (const auto& q : b)
        if (q != 0) return;
    for (const auto& q : c)
        if (q != 0) return;
    for (const auto& q : d)
        if (q != 0) return;
    throw NonGenericInput("the zero orbit is excluded");
}

MirandaCover transform_frame(const MirandaCover& cover,
                             const std::array<Rational, 4>& M) {
    cover.validate();
    if (cover.m != cover.n)
        throw NotBalanced("constant frame changes require a balanced cover");
    const Rational &p = M[0], &q = M[1], &r = M[2], &w = M[3];
    if (p * w - q * r == 0) throw MalformedInput("frame matrix is singular");
    const UniPoly &a = cover.a, &b = cover.b, &c = cover.c, &d = cover.d;
    UniPoly a2 = a * (p * p * p) + b * (p * p * r) + c * (p * r * r) + d * (r * r * r);
    UniPoly b2 = a * (p * p * q * 3) + b * (p * p * w + p * q * r * 2) +
                 c * (p * r * w * 2 + q * r * r) + d * (r * r * w * 3);
    UniPoly c2 = a * (p * q * q * 3) + b * (p * q * w * 2 + q * q * r) +
                 c * (p * w * w + q * r * w * 2) + d * (r * w * w * 3);
    UniPoly d2 = a * (q * q * q) + b * (q * q * w) + c * (q * w * w) + d * (w * w * w);
    return MirandaCover(cover.m, cover.n, a2, b2, c2, d2);
}

namespace {

// point of P^1 as [x : y], canonical representative (1, 0) or (r, 1)
struct ProjPt {
    Rational x, y;
};

// frame sending the targets (1,0), (1,-1), (0,1) to P1, P2, P3
std::array<Rational, 4> frame_to_roots(const ProjPt& P1, const ProjPt& P2,
                                       const ProjPt& P3) {
    Rational det = -P1.x * P3.y + P1.y * P3.x;
    if (det == 0) throw MalformedInput("marked roots are not distinct");
    Rational alpha = (-P2.x * P3.y + P3.x * P2.y) / det;
    Rational beta = (P1.x * P2.y - P2.x * P1.y) / det;
    return {alpha * P1.x, beta * P3.x, alpha * P1.y, beta * P3.y};
}

} // namespace

WPoint even_normal_form(const MirandaCover& cover) {
    cover.validate();
    if (cover.m != cover.n)
        throw NotBalanced("the even-genus model requires a balanced cover");
    const int h = cover.m;
    if (h < 2) throw MalformedInput("need genus at least 2");

    // roots of the fiber cubic at infinity, as points of the fiber line
    UniPoly pu(QVec{cover.d.coeff(h), cover.c.coeff(h), cover.b.coeff(h),
                    cover.a.coeff(h)});
    if (pu.is_zero()) throw NonSplitFiber("cubic vanishes on the marked fiber");
    int inf_mult = 3 - pu.degree();
    auto finite = rational_roots(pu);
    if (inf_mult > 1 || static_cast<int>(finite.size()) != pu.degree())
        throw NonSplitFiber("marked fiber is not split etale");
    std::sort(finite.begin(), finite.end());
    for (size_t i = 1; i < finite.size(); ++i)
        if (finite[i] == finite[i - 1])
            throw NonSplitFiber("marked fiber is not split etale");
    std::vector<ProjPt> src;
    if (inf_mult == 1) src.push_back({rat(1), rat(0)});
    for (const auto& r : finite) src.push_back({r, rat(1)});

    MirandaCover t =
        transform_frame(cover, frame_to_roots(src[0], src[1], src[2]));

    Rational kappa = t.b.coeff(h);
    if (t.a.coeff(h) != 0 || t.d.coeff(h) != 0 || t.c.coeff(h) != kappa ||
        kappa == 0)
        throw MalformedInput("frame normalization failed");
    UniPoly na = t.a * (1 / kappa), nb = t.b * (1 / kappa),
            nc = t.c * (1 / kappa), nd = t.d * (1 / kappa);

    // recenter: the weight-one combination 2a_1 + 2d_1 - b_1 - c_1 moves by
    // -2h per unit translation
    Rational qq = na.coeff(h - 1) * 2 + nd.coeff(h - 1) * 2 - nb.coeff(h - 1) -
                  nc.coeff(h - 1);
    Rational shift = qq / (2 * h);
    na = na.shift(shift);
    nb = nb.shift(shift);
    nc = nc.shift(shift);
    nd = nd.shift(shift);

    WPoint wp;
    wp.h = h;
    bool nonzero = false;
    for (int i = 1; i <= h; ++i) {
        wp.a.push_back(na.coeff(h - i));
        wp.b.push_back(nb.coeff(h - i));
        wp.c.push_back(nc.coeff(h - i));
        if (i >= 2) wp.d.push_back(nd.coeff(h - i));
        if (wp.a.back() != 0 || wp.b.back() != 0 || wp.c.back() != 0 ||
            (i >= 2 && wp.d.back() != 0))
            nonzero = true;
    }
    if (!nonzero) throw NonGenericInput("the cover lies on the excluded zero orbit");
    return wp;
}

MirandaCover cover_from_wpoint(const WPoint& w) {
    if (w.h < 2) throw MalformedInput("need genus at least 2");
    if (w.a.size() != static_cast<size_t>(w.h) ||
        w.b.size() != static_cast<size_t>(w.h) ||
        w.c.size() != static_cast<size_t>(w.h) ||
        w.d.size() != static_cast<size_t>(w.h - 1))
        throw DimensionMismatch("coordinate blocks must have sizes h, h, h, h-1");
    const int h = w.h;
    QVec ac(static_cast<size_t>(h + 1), rat(0)), bc = ac, cc = ac, dc = ac;
    bc[static_cast<size_t>(h)] = rat(1);
    cc[static_cast<size_t>(h)] = rat(1);
    for (int i = 1; i <= h; ++i) {
        ac[static_cast<size_t>(h - i)] = w.a[static_cast<size_t>(i - 1)];
        bc[static_cast<size_t>(h - i)] = w.b[static_cast<size_t>(i - 1)];
        cc[static_cast<size_t>(h - i)] = w.c[static_cast<size_t>(i - 1)];
        if (i >= 2) dc[static_cast<size_t>(h - i)] = w.d[static_cast<size_t>(i - 2)];
    }
    // centering pins the implicit weight-one coordinate of d
    dc[static_cast<size_t>(h - 1)] = (w.b[0] + w.c[0] - w.a[0] * 2) / 2;
    return MirandaCover(h, h, UniPoly(ac), UniPoly(bc), UniPoly(cc), UniPoly(dc));
}

namespace {

// coordinates and weights of a W point, flattened for the scaling test
std::vector<std::pair<Rational, int>> weighted_coords(const WPoint& w) {
    std::vector<std::pair<Rational, int>> out;
    for (int i = 1; i <= w.h; ++i) {
        out.emplace_back(w.a[static_cast<size_t>(i - 1)], i);
        out.emplace_back(w.b[static_cast<size_t>(i - 1)], i);
        out.emplace_back(w.c[static_cast<size_t>(i - 1)], i);
        if (i >= 2) out.emplace_back(w.d[static_cast<size_t>(i - 2)], i);
    }
    return out;
}

bool weighted_scale_equivalent(const WPoint& x, const WPoint& y) {
    auto cx = weighted_coords(x), cy = weighted_coords(y);
    for (size_t i = 0; i < cx.size(); ++i)
        if ((cx[i].first == 0) != (cy[i].first == 0)) return false;
    for (size_t i = 0; i < cx.size(); ++i) {
        if (cx[i].first == 0) continue;
        for (size_t j = i + 1; j < cx.size(); ++j) {
            if (cx[j].first == 0) continue;
            Rational ri = cy[i].first / cx[i].first;
            Rational rj = cy[j].first / cx[j].first;
            if (qpow(ri, cx[j].second) != qpow(rj, cx[i].second)) return false;
        }
    }
    return true;
}

} // namespace

bool orbit_equivalent(const WPoint& p, const WPoint& q) {
    p.validate();
    q.validate();
    if (p.h != q.h) return false;
    MirandaCover cov = cover_from_wpoint(p);
    const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const std::array<ProjPt, 3> marked{
        {{rat(1), rat(0)}, {rat(1), rat(-1)}, {rat(0), rat(1)}}};
    for (const auto& s : perms) {
        // the fractional-linear map permuting the three marked roots; it
        // preserves the root set, so renormalizing yields the sheet twist
        auto M = frame_to_roots(marked[static_cast<size_t>(s[0])],
                                marked[static_cast<size_t>(s[1])],
                                marked[static_cast<size_t>(s[2])]);
        WPoint ps = even_normal_form(transform_frame(cov, M));
        if (weighted_scale_equivalent(ps, q)) return true;
    }
    return false;
}

} // namespace trig
