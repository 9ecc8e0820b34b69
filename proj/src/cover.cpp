#include "trigonal/cover.hpp"

#include <map>

namespace trig {

namespace {

// --- tiny symbolic engine over Q[a,b,c,d] ---------------------------------
// Used once, at first use, to derive the multiplication table of the
// pushforward algebra mechanically from the quotient construction.

using Key = std::array<int, 4>; // exponents of (a, b, c, d)
using Poly4 = std::map<Key, Rational>;

Poly4 var(int i) {
    Key k{0, 0, 0, 0};
    k[static_cast<size_t>(i)] = 1;
    return {{k, Rational(1)}};
}

Poly4 add(const Poly4& p, const Poly4& q) {
    Poly4 r = p;
    for (const auto& [k, v] : q) {
        r[k] += v;
        if (r[k] == 0) r.erase(k);
    }
    return r;
}

Poly4 mul(const Poly4& p, const Poly4& q) {
    Poly4 r;
    for (const auto& [k1, v1] : p)
        for (const auto& [k2, v2] : q) {
            Key k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]};
            r[k] += v1 * v2;
            if (r[k] == 0) r.erase(k);
        }
    return r;
}

Poly4 neg(const Poly4& p) {
    Poly4 r;
    for (const auto& [k, v] : p) r[k] = -v;
    return r;
}

// Exact division by the variable `a` (index 0); the derivation only ever
// divides terms that are multiples of a, so failure would be a logic error.
Poly4 div_by_a(const Poly4& p) {
    Poly4 r;
    for (const auto& [k, v] : p) {
        if (k[0] < 1) throw MalformedInput("symbolic table derivation: inexact division");
        Key k2 = k;
        --k2[0];
        r[k2] = v;
    }
    return r;
}

// Element of Q[a,b,c,d][u] as map u-power -> coefficient.
using UElem = std::map<int, Poly4>;

UElem umul(const UElem& p, const UElem& q) {
    UElem r;
    for (const auto& [i, ci] : p)
        for (const auto& [j, cj] : q) {
            r[i + j] = add(r[i + j], mul(ci, cj));
        }
    return r;
}

// Reduce modulo the rewriting rule a u^3 = -(b u^2 + c u + d).  Every u^p
// coefficient with p >= 3 produced by products of z, w is divisible by a.
UElem reduce_cubic(UElem e) {
    const Poly4 B = var(1), C = var(2), D = var(3);
    while (true) {
        int top = -1;
        for (const auto& [p, coeff] : e)
            if (p >= 3 && !coeff.empty()) top = std::max(top, p);
        if (top < 0) break;
        Poly4 q = div_by_a(e[top]);
        e.erase(top);
        e[top - 1] = add(e[top - 1], neg(mul(q, B)));
        e[top - 2] = add(e[top - 2], neg(mul(q, C)));
        e[top - 3] = add(e[top - 3], neg(mul(q, D)));
    }
    return e;
}

// Express a reduced element (u-degree <= 2) in the basis {1, z, w} with
// z = a u, w = a u^2 + b u; returns (coeff of 1, of z, of w).
std::array<Poly4, 3> in_basis(UElem e) {
    const Poly4 B = var(1);
    std::array<Poly4, 3> out;
    Poly4 q2 = e.count(2) ? div_by_a(e[2]) : Poly4{};
    // subtract q2 * w = q2 (a u^2 + b u)
    Poly4 u1 = e.count(1) ? e[1] : Poly4{};
    u1 = add(u1, neg(mul(q2, B)));
    Poly4 q1 = u1.empty() ? Poly4{} : div_by_a(u1);
    out[0] = e.count(0) ? e[0] : Poly4{};
    out[1] = q1;
    out[2] = q2;
    return out;
}

// The universal table: entries polynomial in (a, b, c, d); valid for all
// coefficient values (including a = 0) since it is polynomial and correct
// on the dense locus where a is invertible.
struct UniversalTable {
    std::array<std::array<std::array<Poly4, 3>, 3>, 3> t;
    UniversalTable() {
        const Poly4 A = var(0), B = var(1);
        UElem one{{0, Poly4{{Key{0, 0, 0, 0}, Rational(1)}}}};
        UElem z{{1, A}};
        UElem w{{2, A}, {1, B}};
        std::array<UElem, 3> basis{one, z, w};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto prod = in_basis(reduce_cubic(umul(basis[static_cast<size_t>(i)],
                                                       basis[static_cast<size_t>(j)])));
                for (int k = 0; k < 3; ++k)
                    t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                        prod[static_cast<size_t>(k)];
            }
    }
};

const UniversalTable& universal_table() {
    static const UniversalTable tab;
    return tab;
}

UniPoly substitute(const Poly4& p, const std::array<UniPoly, 4>& vals) {
    UniPoly out;
    for (const auto& [k, v] : p) {
        UniPoly term = UniPoly::constant(v);
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < k[static_cast<size_t>(i)]; ++e)
                term = term * vals[static_cast<size_t>(i)];
        out = out + term;
    }
    return out;
}

} // namespace

MirandaCover::MirandaCover(int m_, int n_, UniPoly a_, UniPoly b_, UniPoly c_,
                           UniPoly d_)
    : m(m_), n(n_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    validate();
}

void MirandaCover::validate() const {
    if (m < 0 || n < m) throw MalformedInput("need 0 <= m <= n");
    if (2 * m - n < 0) {
        if (!a.is_zero()) throw MalformedInput("a must vanish when 2m-n < 0");
    } else if (a.degree() > 2 * m - n) {
        throw MalformedInput("deg a exceeds 2m-n");
    }
    if (b.degree() > m) throw MalformedInput("deg b exceeds m");
    if (c.degree() > n) throw MalformedInput("deg c exceeds n");
    if (d.degree() > 2 * n - m) throw MalformedInput("deg d exceeds 2n-m");
}

int branch_degree(const MirandaCover& cover) { return 2 * (cover.m + cover.n); }

int genus(const MirandaCover& cover) { return cover.m + cover.n - 2; }

static UniPoly discriminant_poly(const UniPoly& a, const UniPoly& b,
                                 const UniPoly& c, const UniPoly& d) {
    return a * b * c * d * rat(18) - b * b * b * d * rat(4) + b * b * c * c -
           a * c * c * c * rat(4) - a * a * d * d * rat(27);
}

BinaryForm discriminant(const MirandaCover& cover) {
    cover.validate();
    UniPoly delta = discriminant_poly(cover.a, cover.b, cover.c, cover.d);
    if (delta.is_zero()) throw DegenerateCover("discriminant vanishes identically");
    return BinaryForm{2 * (cover.m + cover.n), delta};
}

CoverAlgebra algebra_from_cubic(const MirandaCover& cover) {
    cover.validate();
    const auto& tab = universal_table();
    std::array<UniPoly, 4> vals{cover.a, cover.b, cover.c, cover.d};
    CoverAlgebra out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                out.table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    substitute(tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)], vals);
    return out;
}

std::array<Rational, 4> cubic_at_point(const MirandaCover& cover,
                                       const Rational& X0, const Rational& Y0) {
    if (X0 == 0 && Y0 == 0) throw MalformedInput("not a point of P^1");
    const int m = cover.m, n = cover.n;
    std::array<Rational, 4> v;
    v[0] = (2 * m - n >= 0) ? homogeneous_eval(cover.a, 2 * m - n, X0, Y0) : Rational(0);
    v[1] = homogeneous_eval(cover.b, m, X0, Y0);
    v[2] = homogeneous_eval(cover.c, n, X0, Y0);
    v[3] = homogeneous_eval(cover.d, 2 * n - m, X0, Y0);
    return v;
}

FiberType fiber_type(const MirandaCover& cover, const Rational& X0,
                     const Rational& Y0) {
    BinaryForm delta = discriminant(cover);
    if (delta.eval(X0, Y0) != 0) return FiberType::Etale;
    auto [av, bv, cv, dv] = cubic_at_point(cover, X0, Y0);
    if (av == 0 && bv == 0 && cv == 0 && dv == 0)
        throw DegenerateCover("cubic vanishes identically at the point");
    // Hessian covariant of the binary cubic: vanishes iff perfect cube.
    Rational h0 = bv * bv - 3 * av * cv;
    Rational h1 = bv * cv - 9 * av * dv;
    Rational h2 = cv * cv - 3 * bv * dv;
    if (h0 == 0 && h1 == 0 && h2 == 0) return FiberType::Total;
    return FiberType::Simple;
}

MirandaCover cyclic_pullback(const MirandaCover& cover, int r) {
    cover.validate();
    if (r != 2 && r != 3) throw MalformedInput("cyclic pullback degree must be 2 or 3");
    return MirandaCover(r * cover.m, r * cover.n, cover.a.compose_power(r),
                        cover.b.compose_power(r), cover.c.compose_power(r),
                        cover.d.compose_power(r));
}

} // namespace trig
